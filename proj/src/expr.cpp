#include "sjd/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace sjd {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int genus;

  explicit Parser(const std::string& text, int g) : s(text), genus(g) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) { throw parse_error(pos, msg); }

  bool peek_digit() {
    skip();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  std::string ident() {
    skip();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected identifier");
    return s.substr(start, pos - start);
  }

  long integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  Rat rational() {
    long num = integer();
    if (eat('/')) {
      long den = integer();
      if (den == 0) fail("zero denominator");
      return frac(num, den);
    }
    return Rat(num);
  }

  Label base_label() {
    skip();
    if (pos >= s.size()) fail("expected label");
    char c = s[pos];
    if (c == 'w') {
      ++pos;
      return Label::omega();
    }
    if (c != 'a' && c != 'b') fail("expected label a<i>, b<i> or w");
    ++pos;
    long i = integer();
    if (i < 1 || i > genus) fail("label index out of genus range");
    return c == 'a' ? Label::alpha(static_cast<int>(i)) : Label::beta(static_cast<int>(i));
  }

  // A leg entry: either the omega symbol or a rational combination of basis
  // labels.
  struct LegExpr {
    bool is_omega = false;
    HVector combo;
  };

  LegExpr leg_expr() {
    LegExpr out;
    skip();
    bool neg = eat('-');
    bool first = true;
    while (true) {
      Rat coeff = neg ? Rat(-1) : Rat(1);
      if (peek_digit()) {
        Rat r = rational();
        coeff *= r;
        expect('*');
      }
      Label l = base_label();
      if (l.kind == LabelKind::Omega) {
        if (!first || coeff != 1) fail("the omega symbol cannot be scaled or combined");
        out.is_omega = true;
        return out;
      }
      hvec_add(out.combo, l, coeff);
      first = false;
      skip();
      if (eat('+')) {
        neg = false;
      } else if (eat('-')) {
        neg = true;
      } else {
        break;
      }
    }
    return out;
  }

  Element build(const Diagram& d, const std::vector<LegExpr>& legexprs) {
    Diagram proto = d;
    std::map<int, HVector> combos;
    for (size_t i = 0; i < legexprs.size(); ++i) {
      if (legexprs[i].is_omega)
        proto.legs[i] = Label::omega();
      else
        combos[static_cast<int>(i)] = legexprs[i].combo;
    }
    return element_multilinear(proto, combos, genus);
  }

  Element atom() {
    skip();
    size_t at = pos;
    std::string name = ident();
    if (name == "Theta") return element_of(make_Theta(), genus);
    if (name == "Y") {
      expect('[');
      auto l1 = leg_expr();
      expect(',');
      auto l2 = leg_expr();
      expect(',');
      auto l3 = leg_expr();
      expect(']');
      return build(make_Y(Label::open(), Label::open(), Label::open()), {l1, l2, l3});
    }
    if (name == "H") {
      expect('[');
      auto l1 = leg_expr();
      expect(',');
      auto l2 = leg_expr();
      expect(';');
      auto l3 = leg_expr();
      expect(',');
      auto l4 = leg_expr();
      expect(']');
      return build(make_H(Label::open(), Label::open(), Label::open(), Label::open()),
                   {l1, l2, l3, l4});
    }
    if (name == "Phi") {
      expect('[');
      auto l1 = leg_expr();
      expect(',');
      auto l2 = leg_expr();
      expect(']');
      return build(make_Phi(Label::open(), Label::open()), {l1, l2});
    }
    if (name == "G") return generic();
    // operator call
    auto call1 = [&](auto&& fn) {
      expect('(');
      Element a = element();
      expect(')');
      return fn(a);
    };
    auto call2 = [&](auto&& fn) {
      expect('(');
      Element a = element();
      expect(',');
      Element b = element();
      expect(')');
      return fn(a, b);
    };
    if (name == "star") return call2([](const Element& a, const Element& b) { return star(a, b); });
    if (name == "bracket")
      return call2([](const Element& a, const Element& b) { return bracket(a, b); });
    if (name == "chi") return call1([](const Element& a) { return chi(a); });
    if (name == "chiinv") return call1([](const Element& a) { return chi_inv(a); });
    if (name == "antipode") return call1([](const Element& a) { return antipode(a); });
    if (name == "tree") return call1([](const Element& a) { return tree_reduce(a); });
    throw parse_error(at, "unknown construct '" + name + "'");
  }

  Element generic() {
    // G{ iv(p1,p2,p3); edge p1-p4; leg p2=a1; strut q1=w-q2=w; order p2,q1,... }
    expect('{');
    struct SlotRef {
      int port = -1;
    };
    std::map<std::string, int> slot_of;        // name -> vertex slot port
    std::vector<std::array<std::string, 3>> ivs;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<std::string, LegExpr>> legs;  // name = attachment slot
    std::vector<std::tuple<std::string, LegExpr, std::string, LegExpr>> struts;
    std::vector<std::string> order;
    while (true) {
      skip();
      std::string kw = ident();
      if (kw == "iv") {
        expect('(');
        std::string p1 = ident();
        expect(',');
        std::string p2 = ident();
        expect(',');
        std::string p3 = ident();
        expect(')');
        ivs.push_back({p1, p2, p3});
      } else if (kw == "edge") {
        std::string p1 = ident();
        expect('-');
        std::string p2 = ident();
        edges.emplace_back(p1, p2);
      } else if (kw == "leg") {
        std::string p = ident();
        expect('=');
        legs.emplace_back(p, leg_expr());
      } else if (kw == "strut") {
        std::string p1 = ident();
        expect('=');
        LegExpr l1 = leg_expr();
        expect('-');
        std::string p2 = ident();
        expect('=');
        LegExpr l2 = leg_expr();
        struts.emplace_back(p1, l1, p2, l2);
      } else if (kw == "order") {
        order.push_back(ident());
        while (eat(',')) order.push_back(ident());
      } else {
        fail("unknown item '" + kw + "' in G{...}");
      }
      if (!eat(';')) break;
    }
    expect('}');

    Diagram d;
    d.nv = static_cast<int>(ivs.size());
    for (int v = 0; v < d.nv; ++v)
      for (int sidx = 0; sidx < 3; ++sidx) {
        const std::string& nm = ivs[v][sidx];
        if (slot_of.count(nm)) fail("duplicate port name '" + nm + "'");
        slot_of[nm] = 3 * v + sidx;
      }
    std::vector<LegExpr> legexprs;
    std::map<std::string, int> legname_to_idx;
    for (const auto& [nm, le] : legs) {
      if (!slot_of.count(nm)) fail("leg references unknown slot '" + nm + "'");
      legname_to_idx[nm] = static_cast<int>(legexprs.size());
      legexprs.push_back(le);
    }
    for (const auto& [n1, l1, n2, l2] : struts) {
      legname_to_idx[n1] = static_cast<int>(legexprs.size());
      legexprs.push_back(l1);
      legname_to_idx[n2] = static_cast<int>(legexprs.size());
      legexprs.push_back(l2);
    }
    d.legs.assign(legexprs.size(), Label::open());
    d.mate.assign(d.ports(), -1);
    auto link = [&](int p, int q) {
      if (d.mate[p] != -1 || d.mate[q] != -1) fail("port used twice");
      d.mate[p] = q;
      d.mate[q] = p;
    };
    for (const auto& [n1, n2] : edges) {
      if (!slot_of.count(n1) || !slot_of.count(n2)) fail("edge references unknown slot");
      link(slot_of.at(n1), slot_of.at(n2));
    }
    for (const auto& [nm, le] : legs) link(slot_of.at(nm), d.leg_port(legname_to_idx.at(nm)));
    for (const auto& [n1, l1, n2, l2] : struts)
      link(d.leg_port(legname_to_idx.at(n1)), d.leg_port(legname_to_idx.at(n2)));
    for (int p = 0; p < d.ports(); ++p)
      if (d.mate[p] == -1) fail("unmatched port in G{...}");

    if (!order.empty()) {
      if (order.size() != legexprs.size()) fail("order clause must list every leg");
      // permute legs so that position i carries order[i]
      std::vector<int> perm(legexprs.size());
      std::vector<bool> seen(legexprs.size(), false);
      for (size_t i = 0; i < order.size(); ++i) {
        auto it = legname_to_idx.find(order[i]);
        if (it == legname_to_idx.end()) fail("order references unknown leg '" + order[i] + "'");
        if (seen[it->second]) fail("duplicate leg in order clause");
        seen[it->second] = true;
        perm[i] = it->second;
      }
      Diagram od;
      od.nv = d.nv;
      od.ordered = true;
      od.legs.assign(legexprs.size(), Label::open());
      od.mate.assign(d.ports(), -1);
      std::vector<int> newidx(legexprs.size());
      std::vector<LegExpr> newexprs(legexprs.size());
      for (size_t p = 0; p < perm.size(); ++p) {
        newidx[perm[p]] = static_cast<int>(p);
        newexprs[p] = legexprs[perm[p]];
      }
      auto mapped = [&](int p) { return d.is_leg_port(p) ? od.leg_port(newidx[d.leg_index(p)]) : p; };
      for (int p = 0; p < d.ports(); ++p) od.mate[mapped(p)] = mapped(d.mate[p]);
      return build(od, newexprs);
    }
    return build(d, legexprs);
  }

  Element term() {
    skip();
    if (peek_digit()) {
      Rat c = rational();
      skip();
      if (eat('*')) {
        Element a = atom();
        a *= c;
        return a;
      }
      Element e = Element::unit(genus);
      e *= c;
      return e;
    }
    return atom();
  }

  Element element() {
    skip();
    bool neg = eat('-');
    Element acc = term();
    if (neg) acc *= Rat(-1);
    while (true) {
      skip();
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace

ExprValue parse_expression(const std::string& text, int genus) {
  Parser p(text, genus);
  p.skip();
  // delta(...) yields a tensor, handled at top level only
  size_t save = p.pos;
  if (p.pos + 5 <= text.size() && text.compare(p.pos, 5, "delta") == 0) {
    p.pos += 5;
    p.expect('(');
    Element a = p.element();
    p.expect(')');
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    ExprValue v;
    v.kind = ExprValue::Kind::Tensor;
    v.tensor = coproduct(a);
    v.elem = a;
    return v;
  }
  p.pos = save;
  ExprValue v;
  v.elem = p.element();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

Element parse_element(const std::string& text, int genus) {
  ExprValue v = parse_expression(text, genus);
  if (v.kind != ExprValue::Kind::Elem) throw parse_error(0, "expected an element expression");
  return v.elem;
}

namespace {

std::optional<std::pair<std::string, int>> sugar_of(const std::string& key, bool ordered) {
  if (ordered) return std::nullopt;
  Diagram d = decode_key(key);
  if (d.nv == 2 && d.nlegs() == 0) {
    Canon c = canonical(make_Theta());
    if (c.key == key) return std::make_pair(std::string("Theta"), c.sign);
  }
  if (d.nv == 1 && d.nlegs() == 3) {
    // slots 0,1,2 carry the legs in cyclic order
    Label l0 = d.legs[d.leg_index(d.mate[0])];
    Label l1 = d.legs[d.leg_index(d.mate[1])];
    Label l2 = d.legs[d.leg_index(d.mate[2])];
    Canon c = canonical(make_Y(l0, l1, l2));
    if (c.key == key)
      return std::make_pair("Y[" + l0.str() + "," + l1.str() + "," + l2.str() + "]", c.sign);
  }
  if (d.nv == 2 && d.nlegs() == 4) {
    // find the internal edge
    for (int p = 0; p < 6; ++p) {
      int q = d.mate[p];
      if (q < 6 && d.vertex_of(p) != d.vertex_of(q)) {
        int u = d.vertex_of(p), v = d.vertex_of(q);
        auto leg_at = [&](int slot) { return d.legs[d.leg_index(d.mate[slot])]; };
        Label a = leg_at(3 * u + (d.slot_of(p) + 2) % 3);
        Label cc = leg_at(3 * u + (d.slot_of(p) + 1) % 3);
        Label b = leg_at(3 * v + (d.slot_of(q) + 1) % 3);
        Label dd = leg_at(3 * v + (d.slot_of(q) + 2) % 3);
        Canon c = canonical(make_H(a, b, cc, dd));
        if (c.key == key)
          return std::make_pair(
              "H[" + a.str() + "," + b.str() + ";" + cc.str() + "," + dd.str() + "]", c.sign);
        break;
      }
    }
  }
  if (d.nv == 2 && d.nlegs() == 2) {
    for (int p = 0; p < 6; ++p) {
      if (d.is_leg_port(d.mate[p])) {
        int u = d.vertex_of(p);
        int v = 1 - u;
        Label x = d.legs[d.leg_index(d.mate[p])];
        for (int s = 0; s < 3; ++s) {
          if (d.is_leg_port(d.mate[3 * v + s])) {
            Label y = d.legs[d.leg_index(d.mate[3 * v + s])];
            Canon c = canonical(make_Phi(x, y));
            if (c.key == key) return std::make_pair("Phi[" + x.str() + "," + y.str() + "]", c.sign);
          }
        }
        break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string diagram_to_string(const Diagram& d) {
  std::ostringstream os;
  os << "G{";
  bool first = true;
  auto item = [&]() -> std::ostringstream& {
    if (!first) os << "; ";
    first = false;
    return os;
  };
  auto pname = [&](int p) { return "p" + std::to_string(p); };
  for (int v = 0; v < d.nv; ++v)
    item() << "iv(" << pname(3 * v) << "," << pname(3 * v + 1) << "," << pname(3 * v + 2) << ")";
  for (int p = 0; p < 3 * d.nv; ++p) {
    int q = d.mate[p];
    if (q > p && q < 3 * d.nv) item() << "edge " << pname(p) << "-" << pname(q);
  }
  std::vector<std::string> legname(d.nlegs());
  for (int i = 0; i < d.nlegs(); ++i) {
    int m = d.mate[d.leg_port(i)];
    if (!d.is_leg_port(m)) {
      legname[i] = pname(m);
      item() << "leg " << pname(m) << "=" << d.legs[i].str();
    }
  }
  for (int i = 0; i < d.nlegs(); ++i) {
    int m = d.mate[d.leg_port(i)];
    if (d.is_leg_port(m) && d.leg_index(m) > i) {
      int j = d.leg_index(m);
      legname[i] = "q" + std::to_string(i);
      legname[j] = "q" + std::to_string(j);
      item() << "strut q" << i << "=" << d.legs[i].str() << "-q" << j << "=" << d.legs[j].str();
    }
  }
  if (d.ordered && d.nlegs() > 0) {
    item() << "order ";
    for (int i = 0; i < d.nlegs(); ++i) os << (i ? "," : "") << legname[i];
  }
  os << "}";
  return os.str();
}

std::string element_to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : e.terms) {
    Rat c = coeff;
    std::string body;
    if (key.empty()) {
      body.clear();
    } else if (auto sugar = sugar_of(key, e.ordered)) {
      body = sugar->first;
      c *= sugar->second;
    } else {
      body = diagram_to_string(decode_key(key, e.ordered));
    }
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (body.empty()) {
      os << rat_str(mag);
    } else if (mag == 1) {
      os << body;
    } else {
      os << rat_str(mag) << "*" << body;
    }
  }
  return os.str();
}

std::string tensor_to_string(const TensorElement& t, int genus) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lr, c] : t) {
    if (!first) os << " + ";
    first = false;
    Element l = Element::zero(genus), r = Element::zero(genus);
    l.add_key(lr.first, 1);
    r.add_key(lr.second, 1);
    if (c != 1) os << rat_str(c) << "*";
    os << "(" << element_to_string(l) << ") (x) (" << element_to_string(r) << ")";
  }
  return os.str();
}

}  // namespace sjd
