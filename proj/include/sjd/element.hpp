#pragma once

#include <map>
#include <string>

#include "sjd/diagram.hpp"
#include "sjd/rational.hpp"

namespace sjd {

// Sparse rational combination of canonical diagram keys. Terms of different
// internal degrees may coexist; quotient queries split by degree.
struct Element {
  bool ordered = false;
  int genus = 0;
  std::map<std::string, Rat> terms;

  static Element zero(int genus, bool ordered = false) { return Element{ordered, genus, {}}; }
  static Element unit(int genus, bool ordered = false) {
    Element e{ordered, genus, {}};
    e.terms[""] = 1;
    return e;
  }

  bool is_zero() const { return terms.empty(); }
  void add_key(const std::string& key, const Rat& c);
  void add_diagram(const Diagram& d, const Rat& c);  // canonicalizes, drops AS-zero
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rat& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rat& c, Element a) { return a *= c; }
  bool operator==(const Element& o) const { return ordered == o.ordered && terms == o.terms; }

  int min_degree() const;
  int max_degree() const;
  Element degree_part(int d) const;
  Rat coeff(const std::string& key) const;
};

// Element from a single diagram whose legs may carry HVector combinations;
// multilinearity is expanded on entry. `hlabels` maps leg index -> HVector
// for the legs that carry combinations (others use the diagram's own label).
Element element_of(const Diagram& d, int genus);
Element element_multilinear(const Diagram& d, const std::map<int, HVector>& hlabels, int genus);

}  // namespace sjd
