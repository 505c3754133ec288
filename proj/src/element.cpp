#include "sjd/element.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sjd {

void Element::add_key(const std::string& key, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void Element::add_diagram(const Diagram& d, const Rat& c) {
  if (c == 0) return;
  if (d.ordered != ordered && !d.empty())
    throw std::invalid_argument("diagram orderedness does not match element space");
  Canon cn = canonical(d);
  if (cn.zero) return;
  add_key(cn.key, cn.sign > 0 ? c : -c);
}

Element& Element::operator+=(const Element& o) {
  if (ordered != o.ordered) throw std::invalid_argument("mixed element spaces");
  for (const auto& [k, c] : o.terms) add_key(k, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (ordered != o.ordered) throw std::invalid_argument("mixed element spaces");
  for (const auto& [k, c] : o.terms) add_key(k, -c);
  return *this;
}

Element& Element::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [k, v] : terms) v *= c;
  return *this;
}

int Element::min_degree() const {
  int m = -1;
  for (const auto& [k, c] : terms) {
    int d = key_degree(k);
    if (m < 0 || d < m) m = d;
  }
  return m;
}

int Element::max_degree() const {
  int m = -1;
  for (const auto& [k, c] : terms) m = std::max(m, key_degree(k));
  return m;
}

Element Element::degree_part(int d) const {
  Element e = Element::zero(genus, ordered);
  for (const auto& [k, c] : terms)
    if (key_degree(k) == d) e.terms.emplace(k, c);
  return e;
}

Rat Element::coeff(const std::string& key) const {
  auto it = terms.find(key);
  return it == terms.end() ? Rat(0) : it->second;
}

Element element_of(const Diagram& d, int genus) {
  Element e = Element::zero(genus, d.ordered);
  e.add_diagram(d, 1);
  return e;
}

Element element_multilinear(const Diagram& d, const std::map<int, HVector>& hlabels, int genus) {
  Element e = Element::zero(genus, d.ordered);
  // Expand one combination leg at a time.
  std::function<void(Diagram&, std::map<int, HVector>::const_iterator, Rat)> rec =
      [&](Diagram& cur, std::map<int, HVector>::const_iterator it, Rat coeff) {
        if (it == hlabels.end()) {
          e.add_diagram(cur, coeff);
          return;
        }
        int leg = it->first;
        auto next = std::next(it);
        for (const auto& [lab, c] : it->second) {
          cur.legs[leg] = lab;
          rec(cur, next, coeff * c);
        }
      };
  Diagram cur = d;
  rec(cur, hlabels.begin(), 1);
  return e;
}

}  // namespace sjd
