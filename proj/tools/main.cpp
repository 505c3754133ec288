#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sjd/config.hpp"
#include "sjd/expr.hpp"
#include "sjd/hopf.hpp"
#include "sjd/omega.hpp"
#include "sjd/quotient.hpp"
#include "sjd/rep_theory.hpp"
#include "sjd/torelli.hpp"
#include "sjd/verify.hpp"
#include "sjd/weight_systems.hpp"

namespace {

using sjd::Element;
using Json = nlohmann::ordered_json;

sjd::SpaceTag parse_space(const std::string& name, bool connected, int genus, int degree,
                          const std::string& loop) {
  sjd::SpaceTag tag;
  if (name == "A")
    tag.family = sjd::Family::A;
  else if (name == "A<")
    tag.family = sjd::Family::AOrdered;
  else if (name == "A/I")
    tag.family = sjd::Family::AModI;
  else if (name == "A</I")
    tag.family = sjd::Family::AOrderedModI;
  else
    throw CLI::ValidationError("--space must be one of A, A<, A/I, A</I");
  tag.connected = connected;
  tag.genus = genus;
  tag.degree = degree;
  if (loop.empty()) {
    tag.loop = sjd::LoopRestrict::None;
  } else if (loop == "even") {
    tag.loop = sjd::LoopRestrict::Even;
  } else if (loop == "odd") {
    tag.loop = sjd::LoopRestrict::Odd;
  } else if (loop == "tree") {
    tag.loop = sjd::LoopRestrict::Tree;
  } else {
    tag.loop = sjd::LoopRestrict::Exact;
    tag.loop_k = std::stoi(loop);
  }
  return tag;
}

Json element_json(const Element& e) {
  Json terms = Json::array();
  for (const auto& [k, c] : e.terms) {
    Element one = Element::zero(e.genus, e.ordered);
    one.add_key(k, 1);
    terms.push_back(Json{{"coeff", sjd::rat_str(c)}, {"diagram", sjd::element_to_string(one)}});
  }
  return Json{{"genus", e.genus}, {"ordered", e.ordered}, {"terms", terms}};
}

int emit_element(const Element& e, bool as_json) {
  if (as_json)
    std::cout << element_json(e).dump(2) << "\n";
  else
    std::cout << sjd::element_to_string(e) << "\n";
  return 0;
}

// Reports must be byte-identical across runs; timing fields are opt-in.
void scrub_timings(Json& j) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end();) {
      if (it.key() == "ms" || it.key().size() > 3 && it.key().substr(it.key().size() - 3) == "_ms")
        it = j.erase(it);
      else {
        scrub_timings(it.value());
        ++it;
      }
    }
  } else if (j.is_array()) {
    for (auto& v : j) scrub_timings(v);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computation kernel for the graded Hopf algebras of symplectic Jacobi diagrams"};
  app.require_subcommand(1);
  app.fallthrough();

  // defaults come from the environment-aware config
  auto& cfg0 = sjd::Config::get();
  int genus = 3;
  bool as_json = false;
  int threads = cfg0.threads;
  std::string cache_dir = cfg0.cache_dir;
  bool no_cache = false;
  int max_degree = cfg0.caps.max_degree, max_genus = cfg0.caps.max_genus;
  long max_rows = cfg0.caps.max_rows;
  app.add_option("--genus,-g", genus, "ambient genus")->capture_default_str();
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--threads", threads, "worker threads for parallel stages");
  app.add_option("--cache-dir", cache_dir, "directory for persisted quotient bases");
  app.add_flag("--no-cache", no_cache, "bypass the disk cache");
  app.add_option("--max-degree", max_degree, "internal degree cap")->capture_default_str();
  app.add_option("--max-genus", max_genus, "genus cap")->capture_default_str();
  app.add_option("--max-rows", max_rows, "relation row cap")->capture_default_str();

  std::string expr1, expr2, space_name = "A", loop_sel;
  bool disconnected = false;
  int degree = 1;

  auto add_space_opts = [&](CLI::App* cmd) {
    cmd->add_option("--space", space_name, "A, A<, A/I or A</I")->capture_default_str();
    cmd->add_flag("--all", disconnected, "include disconnected diagrams");
    cmd->add_option("--loop", loop_sel, "loop restriction: even, odd, tree, or an integer");
  };

  auto* cmd_normalize = app.add_subcommand("normalize", "normal form in a quotient space");
  cmd_normalize->add_option("expr", expr1, "element expression")->required();
  add_space_opts(cmd_normalize);

  auto* cmd_star = app.add_subcommand("star", "star product of two elements");
  cmd_star->add_option("lhs", expr1)->required();
  cmd_star->add_option("rhs", expr2)->required();

  auto* cmd_bracket = app.add_subcommand("bracket", "Lie bracket of two elements");
  cmd_bracket->add_option("lhs", expr1)->required();
  cmd_bracket->add_option("rhs", expr2)->required();

  auto* cmd_chi = app.add_subcommand("chi", "symmetrization into the ordered algebra");
  cmd_chi->add_option("expr", expr1)->required();

  auto* cmd_chiinv = app.add_subcommand("chiinv", "inverse symmetrization");
  cmd_chiinv->add_option("expr", expr1)->required();

  auto* cmd_dim = app.add_subcommand("dim", "dimension of a quotient space");
  cmd_dim->add_option("--degree,-d", degree, "internal degree")->required();
  add_space_opts(cmd_dim);

  std::string check_name = "all";
  bool deep = false;
  bool timings = false;
  auto* cmd_verify = app.add_subcommand("verify", "run a registered verification");
  cmd_verify->add_option("check", check_name, "check name or 'all'");
  cmd_verify->add_flag("--deep", deep, "include the long genus-4 kernel run");
  cmd_verify->add_flag("--timings", timings, "keep timing fields in the JSON report");
  auto* cmd_checks = app.add_subcommand("checks", "list verification names");

  std::string target = "l2l3";
  auto* cmd_decompose = app.add_subcommand("decompose", "symplectic restriction multiplicities");
  cmd_decompose->add_option("--target", target, "l2l3 or lambda=<comma partition>")
      ->capture_default_str();

  std::string lie_name = "sl2";
  auto* cmd_weight = app.add_subcommand("weight", "weight system of an element");
  cmd_weight->add_option("--lie", lie_name, "sl2, abelian<n>, or a JSON file")
      ->capture_default_str();
  cmd_weight->add_option("expr", expr1)->required();

  std::string out_file;
  auto* cmd_export = app.add_subcommand("export", "dump a quotient space as JSON");
  cmd_export->add_option("--degree,-d", degree, "internal degree")->required();
  cmd_export->add_option("--out", out_file, "output file (default stdout)");
  add_space_opts(cmd_export);

  CLI11_PARSE(app, argc, argv);

  auto& cfg = sjd::Config::get();
  cfg.threads = threads;
  cfg.caps.max_degree = max_degree;
  cfg.caps.max_genus = max_genus;
  cfg.caps.max_rows = max_rows;
  cfg.cache_dir = no_cache ? std::string() : cache_dir;

  try {
    if (cmd_star->parsed()) {
      return emit_element(
          sjd::star(sjd::parse_element(expr1, genus), sjd::parse_element(expr2, genus)), as_json);
    }
    if (cmd_bracket->parsed()) {
      return emit_element(
          sjd::bracket(sjd::parse_element(expr1, genus), sjd::parse_element(expr2, genus)),
          as_json);
    }
    if (cmd_chi->parsed()) {
      return emit_element(sjd::chi(sjd::parse_element(expr1, genus)), as_json);
    }
    if (cmd_chiinv->parsed()) {
      return emit_element(sjd::chi_inv(sjd::parse_element(expr1, genus)), as_json);
    }
    if (cmd_normalize->parsed()) {
      sjd::ExprValue v = sjd::parse_expression(expr1, genus);
      if (v.kind == sjd::ExprValue::Kind::Tensor) {
        std::cout << sjd::tensor_to_string(v.tensor, genus) << "\n";
        return 0;
      }
      Element e = sjd::expand_omega_element(v.elem);  // closed-surface legs
      if (e.is_zero()) return emit_element(e, as_json);
      int d = e.min_degree();
      if (d != e.max_degree() || d == 0)
        throw std::invalid_argument("normalize expects a degree-homogeneous positive-degree element");
      sjd::SpaceTag tag = parse_space(space_name, !disconnected, genus, d, loop_sel);
      const sjd::QuotientBasis& qb = sjd::quotient_basis(tag);
      sjd::SparseVec nf = qb.normal_form(e);
      return emit_element(qb.element_of_vec(nf), as_json);
    }
    if (cmd_dim->parsed()) {
      sjd::SpaceTag tag = parse_space(space_name, !disconnected, genus, degree, loop_sel);
      const sjd::QuotientBasis& qb = sjd::quotient_basis(tag);
      if (as_json)
        std::cout << Json{{"space", tag.str()},
                          {"free_span", qb.basis.size()},
                          {"relation_rank", qb.rel.rank()},
                          {"dim", qb.dim}}
                         .dump(2)
                  << "\n";
      else
        std::cout << tag.str() << ": dim " << qb.dim << " (free span " << qb.basis.size()
                  << ", relation rank " << qb.rel.rank() << ")\n";
      return 0;
    }
    if (cmd_checks->parsed()) {
      for (const auto& n : sjd::verify_check_names()) std::cout << n << "\n";
      return 0;
    }
    if (cmd_verify->parsed()) {
      sjd::VerifyOptions opts;
      opts.genus = genus;
      opts.deep = deep;
      std::vector<sjd::CheckResult> results;
      if (check_name == "all")
        results = sjd::run_all_checks(opts);
      else
        results.push_back(sjd::run_check(check_name, opts));
      int exit_code = 0;
      Json report = Json::array();
      for (const auto& r : results) {
        Json details = r.details;
        if (!timings) scrub_timings(details);
        report.push_back(
            Json{{"check", r.name}, {"genus", opts.genus}, {"pass", r.pass}, {"details", details}});
        if (!as_json) std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "\n";
        exit_code = std::max(exit_code, r.exit_code);
      }
      if (as_json) std::cout << report.dump(2) << "\n";
      return exit_code;
    }
    if (cmd_decompose->parsed()) {
      Json out;
      if (target == "l2l3") {
        sjd::L2L3Report rep = sjd::verify_l2l3(genus);
        Json mult = Json::array();
        for (const auto& [a, m] : rep.computed)
          mult.push_back(Json{{"irrep", sjd::label_str(a)},
                              {"mult", m},
                              {"dim", sjd::rat_str(sjd::sp_dim(a, genus))}});
        out = Json{{"target", "l2l3"},
                   {"genus", genus},
                   {"multiplicities", mult},
                   {"total_dim", sjd::rat_str(rep.total_dim)},
                   {"expected_dim", sjd::rat_str(rep.expected_dim)},
                   {"dims_match", rep.dims_match}};
      } else if (target.rfind("lambda=", 0) == 0) {
        sjd::Partition lambda;
        std::string body = target.substr(7);
        size_t pos = 0;
        while (pos < body.size()) {
          size_t comma = body.find(',', pos);
          if (comma == std::string::npos) comma = body.size();
          lambda.push_back(std::stoi(body.substr(pos, comma - pos)));
          pos = comma + 1;
        }
        auto rep = sjd::littlewood_restriction(lambda, genus);
        Json mult = Json::array();
        for (const auto& [a, m] : rep)
          mult.push_back(Json{{"irrep", sjd::label_str(a)},
                              {"mult", m},
                              {"dim", sjd::rat_str(sjd::sp_dim(a, genus))}});
        out = Json{{"target", target},
                   {"genus", genus},
                   {"multiplicities", mult},
                   {"schur_dim", sjd::rat_str(sjd::schur_dim(lambda, 2 * genus))}};
      } else {
        throw CLI::ValidationError("--target must be l2l3 or lambda=<partition>");
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (cmd_weight->parsed()) {
      sjd::MetrizedLie lie;
      if (lie_name == "sl2") {
        lie = sjd::MetrizedLie::sl2();
      } else if (lie_name.rfind("abelian", 0) == 0) {
        lie = sjd::MetrizedLie::abelian(std::stoi(lie_name.substr(7)));
      } else {
        std::ifstream in(lie_name);
        if (!in) throw std::runtime_error("cannot open Lie algebra file " + lie_name);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        lie = sjd::MetrizedLie::from_json_text(text);
      }
      if (auto bad = lie.validate())
        throw std::runtime_error("invalid metrized Lie algebra: " + *bad);
      Element e = sjd::parse_element(expr1, genus);
      sjd::PolyT w = sjd::weight_system(e, lie);
      Json out = Json::array();
      for (const auto& [tdeg, poly] : w) {
        Json terms = Json::array();
        for (const auto& [mono, c] : poly) {
          Json vars = Json::array();
          for (const auto& [v, exp] : mono)
            vars.push_back(Json{{"lie", v / (2 * genus)},
                                {"label", sjd::label_of_id(v % (2 * genus), genus).str()},
                                {"exp", exp}});
          terms.push_back(Json{{"coeff", sjd::rat_str(c)}, {"vars", vars}});
        }
        out.push_back(Json{{"t_degree", tdeg}, {"terms", terms}});
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (cmd_export->parsed()) {
      sjd::SpaceTag tag = parse_space(space_name, !disconnected, genus, degree, loop_sel);
      const sjd::QuotientBasis& qb = sjd::quotient_basis(tag);
      Json entries = Json::array();
      int row_idx = 0;
      for (const auto& [pivot, row] : qb.rel.rows()) {
        for (const auto& [col, c] : row)
          entries.push_back(Json::array({row_idx, col, sjd::rat_str(c)}));
        ++row_idx;
      }
      Json basis = Json::array();
      for (const auto& k : qb.basis) {
        Element one = Element::zero(genus, tag.ordered());
        one.add_key(k, 1);
        basis.push_back(sjd::element_to_string(one));
      }
      Json out{{"space", tag.str()},  {"rows", qb.rel.rank()}, {"cols", qb.basis.size()},
               {"dim", qb.dim},       {"basis", basis},        {"entries", entries}};
      if (out_file.empty()) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::ofstream f(out_file);
        f << out.dump(2) << "\n";
      }
      return 0;
    }
  } catch (const sjd::cap_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const sjd::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
