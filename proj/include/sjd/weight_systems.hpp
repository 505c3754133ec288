#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sjd/element.hpp"
#include "sjd/rational.hpp"

namespace sjd {

// Finite-dimensional Lie algebra with an invariant nondegenerate symmetric
// form, given by structure constants c[i][j] = coordinates of [e_i, e_j].
struct MetrizedLie {
  int dim = 0;
  std::vector<std::vector<std::vector<Rat>>> structure;
  std::vector<std::vector<Rat>> form;

  static MetrizedLie abelian(int n);
  static MetrizedLie sl2();  // trace form of the defining representation
  static MetrizedLie from_json_text(const std::string& text);

  // First violated axiom, or nullopt if metrized.
  std::optional<std::string> validate() const;
  std::vector<std::vector<Rat>> form_inverse() const;  // the Casimir 2-tensor
};

// Polynomial in commuting variables with rational coefficients; a monomial
// is a sorted (variable, exponent) list.
using Monomial = std::vector<std::pair<int, int>>;
using Poly = std::map<Monomial, Rat>;
// Graded by the formal degree variable t.
using PolyT = std::map<int, Poly>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_derive(const Poly& a, int var);
PolyT polyt_add(const PolyT& a, const PolyT& b);
PolyT polyt_scale(const PolyT& a, const Rat& c);
PolyT polyt_mul(const PolyT& a, const PolyT& b);
bool polyt_zero(const PolyT& a);

// Variable indexing for S(g (x) H): var = lie_index * 2g + label_id.
int ws_var(int lie_index, const Label& l, int genus);

// Weight system of a diagram: vertices contract against kappa([.,.],.),
// every edge carries the Casimir, legs become variables; grading t^degree.
PolyT weight_system(const Diagram& d, const MetrizedLie& lie, int genus);
PolyT weight_system(const Element& e, const MetrizedLie& lie);

// Moyal product at h = 1 for the symplectic form s on the variables.
using VarForm = std::map<std::pair<int, int>, Rat>;
VarForm kappa_tensor_omega(const MetrizedLie& lie, int genus);
PolyT moyal_product(const PolyT& a, const PolyT& b, const VarForm& s);

// Derivation of the Lie algebra element e_b on S(g (x) H); zero output on
// every weight-system value certifies invariance.
PolyT lie_derivation(const PolyT& p, const MetrizedLie& lie, int b, int genus);

}  // namespace sjd
