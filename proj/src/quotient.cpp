#include "sjd/quotient.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sjd/config.hpp"
#include "sjd/omega.hpp"

#include "json.hpp"

namespace sjd {

std::string SpaceTag::str() const {
  std::string f;
  switch (family) {
    case Family::A: f = "A"; break;
    case Family::AOrdered: f = "A<"; break;
    case Family::AModI: f = "A/I"; break;
    case Family::AOrderedModI: f = "A</I<"; break;
  }
  std::string s = f + (connected ? "c" : "") + " g=" + std::to_string(genus) +
                  " d=" + std::to_string(degree);
  switch (loop) {
    case LoopRestrict::None: break;
    case LoopRestrict::Even: s += " loop=even"; break;
    case LoopRestrict::Odd: s += " loop=odd"; break;
    case LoopRestrict::Exact: s += " loop=" + std::to_string(loop_k); break;
    case LoopRestrict::Tree: s += " loop=tree"; break;
  }
  return s;
}

int QuotientBasis::col(const std::string& key) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), key);
  if (it == basis.end() || *it != key) return -1;
  return static_cast<int>(it - basis.begin());
}

SparseVec QuotientBasis::vec_of(const Element& e) const {
  std::map<int, Rat> m;
  for (const auto& [k, c] : e.terms) {
    int j = col(k);
    if (j < 0) throw std::out_of_range("element key outside the space enumeration");
    m[j] += c;
  }
  return sv_from_map(m);
}

SparseVec QuotientBasis::normal_form(const Element& e) const {
  SparseVec v = vec_of(e);
  rel.reduce(v);
  return v;
}

Element QuotientBasis::element_of_vec(const SparseVec& v) const {
  Element e = Element::zero(tag.genus, tag.ordered());
  for (const auto& [j, c] : v) e.add_key(basis[j], c);
  return e;
}

std::vector<int> QuotientBasis::free_columns() const {
  std::vector<int> out;
  const auto& rows = rel.rows();
  for (int j = 0; j < static_cast<int>(basis.size()); ++j)
    if (!rows.count(j)) out.push_back(j);
  return out;
}

namespace {

bool loop_admitted(const SpaceTag& tag, int loop) {
  switch (tag.loop) {
    case LoopRestrict::None: return true;
    case LoopRestrict::Even: return loop % 2 == 0;
    case LoopRestrict::Odd: return loop % 2 == 1;
    case LoopRestrict::Exact: return loop == tag.loop_k;
    case LoopRestrict::Tree: return loop == 0;
  }
  return true;
}

void check_caps(const SpaceTag& tag) {
  const auto& caps = Config::get().caps;
  if (tag.degree < 1 || tag.genus < 0) throw std::invalid_argument("bad space tag");
  if (tag.ordered()) {
    if (tag.degree > caps.ordered_max_degree || tag.genus > caps.ordered_max_genus)
      throw cap_error("ordered space exceeds caps: " + tag.str());
  } else {
    if (tag.degree > caps.max_degree || tag.genus > caps.max_genus)
      throw cap_error("space exceeds caps: " + tag.str());
  }
}

// IHX rewiring at an internal edge. Positions (a1,a2 | b1,b2) are the four
// attachment slots around the edge; the three Jacobi terms permute their
// contents cyclically. Local edges among the four positions follow the
// permutation on both ends.
Diagram rewire(const Diagram& d, const std::array<int, 4>& posn,
               const std::array<int, 4>& sigma_of) {
  Diagram r = d;
  std::map<int, int> sigma;
  for (int k = 0; k < 4; ++k) sigma[posn[k]] = posn[sigma_of[k]];
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < 4; ++k) {
    int p = posn[k];
    int q = d.mate[p];
    bool q_local = sigma.count(q) > 0;
    if (q_local && q < p) continue;  // already handled from the other end
    edges.emplace_back(sigma.at(p), q_local ? sigma.at(q) : q);
  }
  for (auto [x, y] : edges) {
    r.mate[x] = y;
    r.mate[y] = x;
  }
  return r;
}

void ihx_terms_for_edge(const Diagram& d, int pu, int pv,
                        std::vector<std::pair<Diagram, int>>& out) {
  // u cyclic rotated to (a1, a2, pu); v cyclic rotated to (pv, b1, b2).
  int u = d.vertex_of(pu), v = d.vertex_of(pv);
  int su = d.slot_of(pu), sv = d.slot_of(pv);
  int a1 = 3 * u + (su + 1) % 3, a2 = 3 * u + (su + 2) % 3;
  int b1 = 3 * v + (sv + 1) % 3, b2 = 3 * v + (sv + 2) % 3;
  std::array<int, 4> posn = {a1, a2, b1, b2};
  // D1 = (A1,A2|B1,B2); D2 = (A2,B1|A1,B2); D3 = (B1,A1|A2,B2).
  // sigma_of[k] = which old position's content lands at posn[k].
  out.emplace_back(d, 1);
  out.emplace_back(rewire(d, posn, {1, 2, 0, 3}), 1);
  out.emplace_back(rewire(d, posn, {2, 0, 1, 3}), 1);
}

std::vector<std::pair<Diagram, int>> ihx_triples(const Diagram& d) {
  std::vector<std::pair<Diagram, int>> out;
  for (int p = 0; p < 3 * d.nv; ++p) {
    int q = d.mate[p];
    if (q < p || q >= 3 * d.nv) continue;           // one orientation per pass below
    if (d.vertex_of(p) == d.vertex_of(q)) continue;  // self-loops are AS-zero anyway
    ihx_terms_for_edge(d, p, q, out);
    ihx_terms_for_edge(d, q, p, out);
  }
  return out;
}

}  // namespace

std::vector<SparseVec> ihx_rows_for(const QuotientBasis& qb, const std::string& key) {
  std::vector<SparseVec> rows;
  Diagram d = decode_key(key, qb.tag.ordered());
  auto triples = ihx_triples(d);
  // triples come in groups of three
  for (size_t i = 0; i + 2 < triples.size(); i += 3) {
    std::map<int, Rat> row;
    for (size_t k = i; k < i + 3; ++k) {
      Canon c = canonical(triples[k].first);
      if (c.zero) continue;
      int j = qb.col(c.key);
      if (j < 0) throw std::logic_error("IHX term escapes the enumeration: " + qb.tag.str());
      row[j] += c.sign;
    }
    SparseVec v = sv_from_map(row);
    if (!v.empty()) rows.push_back(std::move(v));
  }
  return rows;
}

std::vector<SparseVec> stu_rows_for(const QuotientBasis& qb, const std::string& key) {
  std::vector<SparseVec> rows;
  if (!qb.tag.ordered()) throw std::invalid_argument("STU rows need an ordered space");
  Diagram d = decode_key(key, true);
  int e = d.nlegs();
  for (int k = 0; k + 1 < e; ++k) {
    // D(..x<y..) - D(..y<x..) = omega(x,y) * D(x,y glued)
    std::map<int, Rat> row;
    row[qb.col(key)] += 1;
    Diagram swapped = d;
    std::swap(swapped.legs[k], swapped.legs[k + 1]);
    // swap the attachment of positions k, k+1
    int pk = swapped.leg_port(k), pk1 = swapped.leg_port(k + 1);
    int mk = swapped.mate[pk], mk1 = swapped.mate[pk1];
    swapped.mate[pk] = mk1;
    swapped.mate[mk1] = pk;
    swapped.mate[pk1] = mk;
    swapped.mate[mk] = pk1;
    {
      Canon c = canonical(swapped);
      if (!c.zero) {
        int j = qb.col(c.key);
        if (j < 0) throw std::logic_error("STU swap escapes the enumeration");
        row[j] -= c.sign;
      }
    }
    int w = omega_basis(d.legs[k], d.legs[k + 1]);
    if (w != 0) {
      Diagram glued = glue_legs(d, {{k, k + 1}}, /*keep_order=*/true);
      Canon c = canonical(glued);
      if (!c.zero) {
        int j = qb.col(c.key);
        if (j < 0) throw std::logic_error("STU gluing escapes the enumeration");
        row[j] -= Rat(w) * c.sign;
      }
    }
    SparseVec v = sv_from_map(row);
    if (!v.empty()) rows.push_back(std::move(v));
  }
  return rows;
}

namespace {

QuotientBasis build_quotient(const SpaceTag& tag) {
  check_caps(tag);
  QuotientBasis qb;
  qb.tag = tag;

  bool mod_i = tag.family == Family::AModI || tag.family == Family::AOrderedModI;
  std::vector<std::string> keys;
  if (tag.ordered()) {
    keys = enumerate_ordered(tag.genus, tag.degree, tag.connected);
  } else {
    keys = tag.connected ? enumerate_connected(tag.genus, tag.degree)
                         : enumerate_all(tag.genus, tag.degree);
  }
  for (auto& k : keys) {
    int loop = loop_degree_key(k);
    if (tag.loop != LoopRestrict::Tree && !loop_admitted(tag, loop)) continue;
    if (tag.loop == LoopRestrict::Tree && loop > 0) continue;
    qb.basis.push_back(k);
  }
  std::sort(qb.basis.begin(), qb.basis.end());
  qb.loop_of.reserve(qb.basis.size());
  for (const auto& k : qb.basis) qb.loop_of.push_back(loop_degree_key(k));

  const auto& caps = Config::get().caps;
  long row_count = 0;
  auto add_rows = [&](std::vector<SparseVec> rows) {
    for (auto& r : rows) {
      if (++row_count > caps.max_rows) throw cap_error("relation row cap exceeded");
      qb.rel.insert(std::move(r));
    }
  };
  for (const auto& k : qb.basis) {
    add_rows(ihx_rows_for(qb, k));
    if (tag.ordered()) add_rows(stu_rows_for(qb, k));
  }
  if (mod_i) {
    auto gens = tag.ordered() ? ideal_span_elements_ordered(tag.genus, tag.degree, tag.connected)
                              : ideal_span_elements(tag.genus, tag.degree, tag.connected);
    for (const auto& gen : gens) {
      std::map<int, Rat> row;
      bool in_space = true;
      for (const auto& [k, c] : gen.terms) {
        int loop = loop_degree_key(k);
        if (!loop_admitted(tag, loop)) { in_space = false; break; }
        int j = qb.col(k);
        if (j < 0) throw std::logic_error("ideal generator escapes the enumeration");
        row[j] += c;
      }
      if (!in_space) throw std::logic_error("ideal generator violates loop restriction");
      SparseVec v = sv_from_map(row);
      if (!v.empty()) {
        if (++row_count > caps.max_rows) throw cap_error("relation row cap exceeded");
        qb.rel.insert(std::move(v));
      }
    }
  }
  qb.relation_row_count = row_count;
  qb.dim = static_cast<int>(qb.basis.size()) - qb.rel.rank();
  return qb;
}

std::map<SpaceTag, QuotientBasis>& qb_cache() {
  static std::map<SpaceTag, QuotientBasis> cache;
  return cache;
}
std::mutex qb_mutex;

// Disk persistence, keyed by the space tag and a kernel version stamp.
constexpr const char* kCacheVersion = "sjd-qb-1";

std::string hex_encode(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * s.size());
  for (unsigned char c : s) {
    out += digits[c >> 4];
    out += digits[c & 0xf];
  }
  return out;
}

std::string hex_decode(const std::string& s) {
  auto val = [](char c) { return c <= '9' ? c - '0' : c - 'a' + 10; };
  std::string out;
  out.reserve(s.size() / 2);
  for (size_t i = 0; i + 1 < s.size(); i += 2)
    out += static_cast<char>((val(s[i]) << 4) | val(s[i + 1]));
  return out;
}

std::string cache_file_for(const SpaceTag& tag) {
  std::string name = kCacheVersion;
  name += "_f" + std::to_string(static_cast<int>(tag.family));
  name += tag.connected ? "_c" : "_a";
  name += "_g" + std::to_string(tag.genus) + "_d" + std::to_string(tag.degree);
  name += "_l" + std::to_string(static_cast<int>(tag.loop)) + std::to_string(tag.loop_k);
  return Config::get().cache_dir + "/" + name + ".json";
}

bool load_cached(const SpaceTag& tag, QuotientBasis& qb) {
  if (Config::get().cache_dir.empty()) return false;
  std::ifstream in(cache_file_for(tag));
  if (!in) return false;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<std::string>() != kCacheVersion) return false;
    qb.tag = tag;
    for (const auto& k : j.at("basis")) qb.basis.push_back(hex_decode(k.get<std::string>()));
    for (const auto& l : j.at("loops")) qb.loop_of.push_back(l.get<int>());
    for (const auto& row : j.at("rows")) {
      SparseVec v;
      for (const auto& ent : row)
        v.emplace_back(ent.at(0).get<int>(), rat_parse(ent.at(1).get<std::string>()));
      qb.rel.insert(std::move(v));
    }
    qb.relation_row_count = j.at("row_count").get<long>();
    qb.dim = static_cast<int>(qb.basis.size()) - qb.rel.rank();
    return qb.dim == j.at("dim").get<int>();
  } catch (...) {
    return false;
  }
}

void store_cached(const QuotientBasis& qb) {
  if (Config::get().cache_dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(Config::get().cache_dir, ec);
  nlohmann::json j;
  j["version"] = kCacheVersion;
  j["space"] = qb.tag.str();
  j["dim"] = qb.dim;
  j["row_count"] = qb.relation_row_count;
  auto& basis = j["basis"] = nlohmann::json::array();
  for (const auto& k : qb.basis) basis.push_back(hex_encode(k));
  auto& loops = j["loops"] = nlohmann::json::array();
  for (int l : qb.loop_of) loops.push_back(l);
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& [pivot, row] : qb.rel.rows()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& [i, c] : row) r.push_back(nlohmann::json::array({i, rat_str(c)}));
    rows.push_back(std::move(r));
  }
  std::ofstream out(cache_file_for(qb.tag));
  out << j.dump();
}

}  // namespace

const QuotientBasis& quotient_basis(const SpaceTag& tag) {
  std::lock_guard<std::mutex> lock(qb_mutex);
  auto& cache = qb_cache();
  auto it = cache.find(tag);
  if (it != cache.end()) return it->second;
  QuotientBasis qb;
  if (!load_cached(tag, qb)) {
    qb = build_quotient(tag);
    store_cached(qb);
  }
  return cache.emplace(tag, std::move(qb)).first->second;
}

void clear_quotient_cache() {
  std::lock_guard<std::mutex> lock(qb_mutex);
  qb_cache().clear();
}

bool nf_zero(const Element& e, const SpaceTag& tag) {
  if (e.is_zero()) return true;
  return quotient_basis(tag).normal_form(e).empty();
}

bool nf_zero_graded(const Element& e, Family family, bool connected) {
  if (e.is_zero()) return true;
  if (e.terms.count("")) return false;  // scalar part has no relations
  for (int d = e.min_degree(); d <= e.max_degree(); ++d) {
    Element part = e.degree_part(d);
    if (part.is_zero()) continue;
    if (d == 0) return false;
    SpaceTag tag{family, connected, e.genus, d, LoopRestrict::None, 0};
    if (!nf_zero(part, tag)) return false;
  }
  return true;
}

Element sp_act_element(const SpGenerator& gen, const Element& e) {
  Element out = Element::zero(e.genus, e.ordered);
  for (const auto& [key, c] : e.terms) {
    Diagram d = decode_key(key, e.ordered);
    for (int i = 0; i < d.nlegs(); ++i) {
      LabelImage img = sp_act(gen, d.legs[i], e.genus);
      if (img.coeff == 0) continue;
      Diagram moved = d;
      moved.legs[i] = img.label;
      out.add_diagram(moved, c * img.coeff);
    }
  }
  return out;
}

Echelon sp_closure_elements(const std::vector<Element>& seeds, const SpaceTag& tag) {
  const QuotientBasis& qb = quotient_basis(tag);
  auto gens = sp_generators(tag.genus);
  Echelon ech;
  std::vector<SparseVec> work;
  for (const auto& s : seeds) {
    SparseVec v = qb.normal_form(s);
    if (ech.insert(v)) work.push_back(std::move(v));
  }
  while (!work.empty()) {
    SparseVec v = std::move(work.back());
    work.pop_back();
    Element lift = qb.element_of_vec(v);
    for (const auto& g : gens) {
      SparseVec w = qb.normal_form(sp_act_element(g, lift));
      if (ech.insert(w)) work.push_back(std::move(w));
    }
  }
  return ech;
}

WeightReport weight_and_hwv_check(const Element& e, const SpaceTag& tag) {
  WeightReport r;
  if (e.is_zero()) return r;
  bool first = true;
  for (const auto& [key, c] : e.terms) {
    Diagram d = decode_key(key, e.ordered);
    std::vector<int> w(e.genus, 0);
    for (const auto& l : d.legs) {
      auto lw = weight_of(l, e.genus);
      for (int i = 0; i < e.genus; ++i) w[i] += lw[i];
    }
    if (first) {
      r.weight = w;
      first = false;
    } else if (w != r.weight) {
      return r;  // not homogeneous
    }
  }
  r.homogeneous = true;
  r.highest_weight = true;
  for (const auto& g : sp_raising(e.genus)) {
    if (!nf_zero(sp_act_element(g, e), tag)) {
      r.highest_weight = false;
      break;
    }
  }
  return r;
}

}  // namespace sjd
