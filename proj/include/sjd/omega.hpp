#pragma once

#include <string>
#include <vector>

#include "sjd/element.hpp"
#include "sjd/linalg.hpp"

namespace sjd {

struct SpaceTag;  // quotient.hpp

// Replace every omega leg by a new internal vertex with two legs
// (alpha_i, beta_i), summed over i = 1..g. In ordered diagrams the fresh
// legs are adjacent at the omega position, alpha before beta.
Element expand_omega(const Diagram& d, int genus);
Element expand_omega_element(const Element& e);

// Unordered omega-diagram keys of the given closed degree (internal degree
// plus omega count) with at least one omega vertex. `exactly` restricts the
// omega count when >= 0. Components without internal vertices must carry
// omega labels; plain struts never occur.
std::vector<std::string> omega_diagram_keys(int genus, int closed_degree, bool connected,
                                            int exactly = -1);

// The symmetrized image of the span of omega-smallest ordered diagrams:
// chi_inv(expansion) over every ordering with an omega vertex first.
std::vector<Element> ideal_span_elements(int genus, int degree, bool connected);
// The same span on the ordered side (expansions themselves).
std::vector<Element> ideal_span_elements_ordered(int genus, int degree, bool connected);
// Closed-form generator family: expansion(D) - 1/4 sum omega(x_j,x_k) D(j,k
// rerouted through the omega vertex), over diagrams D with a single omega leg.
std::vector<Element> ideal_generators_formula(int genus, int degree, bool connected);

// Expansion of the unordered (omega,omega) strut, sum_{i,j} of H-diagrams.
Element strut_omega_omega(int genus);
// Expansion of the unordered Y(x, y, omega).
Element y_omega(const Label& x, const Label& y, int genus);

struct OmegaLemmaReport {
  bool stu_single = false;   // moving an omega past a colored vertex
  bool stu_double = false;   // the two-omega variant
  bool commutation = false;  // omega position is immaterial
  bool all() const { return stu_single && stu_double && commutation; }
};
OmegaLemmaReport verify_omega_lemmas(int genus);

struct C2Report {
  int domain_dim = 0;       // Lambda^2 of (Lambda^3 H / H)
  int image_dim = 0;
  int kernel_dim = 0;
  int closure_dim = 0;      // sp-closure of the class of r1
  bool kernel_matches = false;
  bool well_defined = false;  // columns through H-directions vanish mod I
  bool swo_theta = false;     // {S_ww} = {(g/4) theta} mod I
  int ideal_dim = 0;          // dim I^c_2
};
C2Report c2_analysis(int genus);

}  // namespace sjd
