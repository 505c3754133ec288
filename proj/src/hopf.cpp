#include "sjd/hopf.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sjd {

namespace {

void require_unordered(const Element& e, const char* op) {
  if (e.ordered) throw std::invalid_argument(std::string(op) + ": expects unordered elements");
}

void require_basis_legs(const Diagram& d, const char* op) {
  for (const auto& l : d.legs)
    if (!l.is_basis()) throw std::invalid_argument(std::string(op) + ": expand omega labels first");
}

// Sum over gluings of a subset of dx's legs to a subset of dy's legs.
// cb(pairs, omega_product) for every matching with nonzero omega product,
// including the empty one.
void for_each_matching(const Diagram& dx, const Diagram& dy,
                       const std::function<void(const std::vector<std::pair<int, int>>&, const Rat&)>& cb) {
  int ex = dx.nlegs(), ey = dy.nlegs();
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(ey, false);
  std::function<void(int, Rat)> rec = [&](int i, Rat w) {
    if (i == ex) {
      cb(pairs, w);
      return;
    }
    rec(i + 1, w);  // leg i stays free
    for (int j = 0; j < ey; ++j) {
      if (used[j]) continue;
      int om = omega_basis(dx.legs[i], dy.legs[j]);
      if (om == 0) continue;
      used[j] = true;
      pairs.emplace_back(i, j);
      rec(i + 1, w * om);
      pairs.pop_back();
      used[j] = false;
    }
  };
  rec(0, 1);
}

}  // namespace

Element ordered_product(const Element& x, const Element& y) {
  if (!x.ordered || !y.ordered) throw std::invalid_argument("ordered_product: expects ordered elements");
  if (x.genus != y.genus) throw std::invalid_argument("genus mismatch");
  Element out = Element::zero(x.genus, true);
  for (const auto& [kx, cx] : x.terms) {
    Diagram dx = decode_key(kx, true);
    for (const auto& [ky, cy] : y.terms) {
      Diagram dy = decode_key(ky, true);
      dx.ordered = dy.ordered = true;
      out.add_diagram(disjoint_union(dx, dy), cx * cy);
    }
  }
  return out;
}

Element star(const Element& x, const Element& y) {
  require_unordered(x, "star");
  require_unordered(y, "star");
  if (x.genus != y.genus) throw std::invalid_argument("genus mismatch");
  Element out = Element::zero(x.genus);
  for (const auto& [kx, cx] : x.terms) {
    Diagram dx = decode_key(kx);
    require_basis_legs(dx, "star");
    for (const auto& [ky, cy] : y.terms) {
      Diagram dy = decode_key(ky);
      require_basis_legs(dy, "star");
      Diagram uni = disjoint_union(dx, dy);
      int ex = dx.nlegs();
      Rat cxy = cx * cy;
      for_each_matching(dx, dy, [&](const std::vector<std::pair<int, int>>& pairs, const Rat& w) {
        std::vector<std::pair<int, int>> glue;
        glue.reserve(pairs.size());
        for (auto [i, j] : pairs) glue.emplace_back(i, ex + j);
        Rat coeff = cxy * w;
        coeff /= (1L << pairs.size());
        out.add_diagram(glue_legs(uni, glue), coeff);
      });
    }
  }
  return out;
}

Element bracket(const Element& x, const Element& y) {
  require_unordered(x, "bracket");
  require_unordered(y, "bracket");
  if (x.genus != y.genus) throw std::invalid_argument("genus mismatch");
  Element out = Element::zero(x.genus);
  for (const auto& [kx, cx] : x.terms) {
    Diagram dx = decode_key(kx);
    require_basis_legs(dx, "bracket");
    for (const auto& [ky, cy] : y.terms) {
      Diagram dy = decode_key(ky);
      require_basis_legs(dy, "bracket");
      Diagram uni = disjoint_union(dx, dy);
      int ex = dx.nlegs();
      Rat cxy = cx * cy;
      for_each_matching(dx, dy, [&](const std::vector<std::pair<int, int>>& pairs, const Rat& w) {
        if (pairs.size() % 2 == 0) return;
        std::vector<std::pair<int, int>> glue;
        glue.reserve(pairs.size());
        for (auto [i, j] : pairs) glue.emplace_back(i, ex + j);
        Rat coeff = cxy * w;
        coeff /= (1L << (pairs.size() - 1));
        out.add_diagram(glue_legs(uni, glue), coeff);
      });
    }
  }
  return out;
}

Element chi(const Element& x) {
  require_unordered(x, "chi");
  Element out = Element::zero(x.genus, true);
  for (const auto& [k, c] : x.terms) {
    Diagram d = decode_key(k);
    int e = d.nlegs();
    Rat fact = 1;
    for (int i = 2; i <= e; ++i) fact *= i;
    Rat coeff = c / fact;
    std::vector<int> perm(e);
    for (int i = 0; i < e; ++i) perm[i] = i;
    do {
      Diagram od;
      od.nv = d.nv;
      od.ordered = true;
      od.legs.resize(e);
      od.mate.assign(d.ports(), -1);
      std::vector<int> newidx(e);
      for (int p = 0; p < e; ++p) {
        od.legs[p] = d.legs[perm[p]];
        newidx[perm[p]] = p;
      }
      auto mapped = [&](int p) { return d.is_leg_port(p) ? od.leg_port(newidx[d.leg_index(p)]) : p; };
      for (int p = 0; p < d.ports(); ++p) od.mate[mapped(p)] = mapped(d.mate[p]);
      out.add_diagram(od, coeff);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

Element chi_inv(const Element& x) {
  if (!x.ordered) throw std::invalid_argument("chi_inv: expects ordered elements");
  Element out = Element::zero(x.genus, false);
  for (const auto& [k, c] : x.terms) {
    Diagram d = decode_key(k, true);
    require_basis_legs(d, "chi_inv");
    int e = d.nlegs();
    // all partial pairings of positions, omega taken in position order
    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> used(e, false);
    std::function<void(int, Rat)> rec = [&](int i, Rat w) {
      while (i < e && used[i]) ++i;
      if (i == e) {
        Rat coeff = c * w;
        coeff /= (1L << pairs.size());
        Diagram g = glue_legs(d, pairs, /*keep_order=*/false);
        out.add_diagram(g, coeff);
        return;
      }
      used[i] = true;
      rec(i + 1, w);  // position i unpaired
      for (int j = i + 1; j < e; ++j) {
        if (used[j]) continue;
        int om = omega_basis(d.legs[i], d.legs[j]);
        if (om == 0) continue;
        used[j] = true;
        pairs.emplace_back(i, j);
        rec(i + 1, w * om);
        pairs.pop_back();
        used[j] = false;
      }
      used[i] = false;
    };
    rec(0, 1);
  }
  return out;
}

TensorElement coproduct(const Element& x) {
  TensorElement out;
  for (const auto& [k, c] : x.terms) {
    Diagram d = decode_key(k, x.ordered);
    int m = component_count(d);
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<bool> pick(m);
      for (int i = 0; i < m; ++i) pick[i] = (mask >> i) & 1;
      Diagram left = take_components(d, pick);
      pick.flip();
      Diagram right = take_components(d, pick);
      Canon cl = canonical(left), cr = canonical(right);
      if (cl.zero || cr.zero) continue;
      Rat coeff = c * cl.sign * cr.sign;
      auto key = std::make_pair(cl.key, cr.key);
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, coeff);
      else {
        it->second += coeff;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

Rat counit(const Element& x) { return x.coeff(""); }

namespace {

// S(D) = -sum over proper subsets S of the components of S(D_S) * D_{S^c},
// from m(S (x) id) Delta = eta eps. Connected diagrams get S(D) = -D.
Element antipode_key(const std::string& key, int genus, bool ordered,
                     std::map<std::string, Element>& memo) {
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Diagram d = decode_key(key, ordered);
  Element result = Element::zero(genus, ordered);
  if (key.empty()) {
    result = Element::unit(genus, ordered);
  } else {
    int m = component_count(d);
    for (int mask = 0; mask < (1 << m) - 1; ++mask) {
      std::vector<bool> pick(m);
      for (int i = 0; i < m; ++i) pick[i] = (mask >> i) & 1;
      Diagram left = take_components(d, pick);
      pick.flip();
      Diagram right = take_components(d, pick);
      Canon cl = canonical(left), cr = canonical(right);
      if (cl.zero || cr.zero) continue;
      Element sl = antipode_key(cl.key, genus, ordered, memo);
      if (cl.sign < 0) sl *= Rat(-1);
      Element r = Element::zero(genus, ordered);
      r.add_key(cr.key, Rat(cr.sign));
      Element prod = ordered ? ordered_product(sl, r) : star(sl, r);
      result -= prod;
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

Element antipode(const Element& x) {
  std::map<std::string, Element> memo;
  Element out = Element::zero(x.genus, x.ordered);
  for (const auto& [k, c] : x.terms) {
    Element s = antipode_key(k, x.genus, x.ordered, memo);
    s *= c;
    out += s;
  }
  return out;
}

bool is_primitive(const Element& x) {
  if (x.is_zero()) return false;
  TensorElement delta = coproduct(x);
  for (const auto& [k, c] : x.terms) {
    auto dec = [&](const std::pair<std::string, std::string>& key, const Rat& v) {
      auto it = delta.find(key);
      if (it == delta.end())
        delta.emplace(key, -v);
      else {
        it->second -= v;
        if (it->second == 0) delta.erase(it);
      }
    };
    dec({k, std::string()}, c);
    dec({std::string(), k}, c);
  }
  return delta.empty();
}

std::pair<Element, Element> loop_split(const Element& x) {
  Element even = Element::zero(x.genus, x.ordered), odd = Element::zero(x.genus, x.ordered);
  for (const auto& [k, c] : x.terms) {
    if (loop_degree_key(k) % 2 == 0)
      even.terms.emplace(k, c);
    else
      odd.terms.emplace(k, c);
  }
  return {even, odd};
}

Element tree_reduce(const Element& x) {
  Element out = Element::zero(x.genus, x.ordered);
  for (const auto& [k, c] : x.terms)
    if (loop_degree_key(k) == 0) out.terms.emplace(k, c);
  return out;
}

}  // namespace sjd
