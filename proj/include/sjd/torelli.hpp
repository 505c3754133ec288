#pragma once

#include <array>
#include <map>
#include <vector>

#include "sjd/element.hpp"
#include "sjd/linalg.hpp"
#include "sjd/quotient.hpp"

namespace sjd {

// Label ids 0..g-1 = alpha_1..alpha_g, g..2g-1 = beta_1..beta_g.
int label_id(const Label& l, int genus);
Label label_of_id(int id, int genus);

using Triple = std::array<int, 3>;

// Sparse trivector over Lambda^3 H, normalized to sorted id-triples.
struct Trivector {
  int genus = 0;
  std::map<Triple, Rat> terms;
  void add(int a, int b, int c, Rat coeff);
};

Trivector wedge(const Label& x, const Label& y, const Label& z, int genus);
Trivector wedge_omega(const Label& h, int genus);  // h ^ (sum alpha_i ^ beta_i)

struct TripleTable {
  explicit TripleTable(int genus);
  int genus;
  std::vector<Triple> triples;
  std::map<Triple, int> index;
  int size() const { return static_cast<int>(triples.size()); }
  const Triple& triple(int i) const { return triples[i]; }
  SparseVec vec_of(const Trivector& t) const;
};

// Degree-two part of the free Lie algebra on Lambda^3 H, realized as
// Lambda^2 of it: unordered pairs of triple indices.
struct Wedge2 {
  int genus = 0;
  std::map<std::pair<int, int>, Rat> terms;  // i < j
  void add(int i, int j, const Rat& c);
  Wedge2& operator+=(const Wedge2& o);
  Wedge2& operator*=(const Rat& c);
};

Wedge2 wedge2_of(const Trivector& a, const Trivector& b);

struct PairTable {
  explicit PairTable(int genus);
  int genus;
  int ntriples;
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> index;
  int size() const { return static_cast<int>(pairs.size()); }
  SparseVec vec_of(const Wedge2& w) const;
  Wedge2 of_vec(const SparseVec& v) const;
};

Element y_map_triple(const Triple& t, int genus);
Element y_map(const Trivector& t);
Element b2_apply(const Wedge2& w);

Trivector sp_act_trivector(const SpGenerator& g, const Trivector& t);
Wedge2 sp_act_wedge2(const SpGenerator& g, const Wedge2& w);

Wedge2 relation_r1(int genus);  // zero when g = 3
Wedge2 relation_r2(int genus);

// sp-module closure of the seeds inside Lambda^2 Lambda^3 H.
Echelon sp_closure_wedge2(const std::vector<Wedge2>& seeds, int genus);

// Closure in Lambda^2 of (Lambda^3 H / H): act on lifts and project along
// the (sp-stable) image of H.
Echelon sp_closure_wedge2_mod_h(const std::vector<Wedge2>& seeds, int genus,
                                const TripleTable& tt, const Echelon& hspan,
                                const std::vector<int>& complement);

// Coefficient of theta in the class of x in the degree-2 quotient.
Rat theta_coefficient(const Element& x);

struct B2Analysis {
  int domain_dim = 0;
  int rank = 0;
  int kernel_dim = 0;
  MapAnalysis analysis;
};
const B2Analysis& b2_analysis(int genus);  // memoized

struct KerB2Report {
  int kernel_dim = 0;
  int closure_dim = 0;
  bool equal = false;
  bool b2r1_zero = false;
  bool b2r2_zero = false;
};
KerB2Report verify_ker_b2(int genus);

struct ImB2Report {
  int image_dim = 0;
  int even_dim = 0;
  bool equals_even = false;
};
ImB2Report verify_im_b2(int genus);

Wedge2 invariant_T1(int genus);
Wedge2 invariant_T2(int genus);

struct T1T2Report {
  Rat t1_theta, t1_swo, t2_theta, t2_swo;
  bool t1_identity = false;
  bool t2_identity = false;
  Rat det;
};
T1T2Report t1_t2(int genus);

struct R3Report {
  Rat a, b;  // r3 = a T1 + b T2
  bool b2_is_theta = false;
  bool tree_zero = false;
};
R3Report r3_preimage(int genus);

struct SubalgebraReport {
  std::vector<int> dims;  // per degree, 1-based at index 0 = degree 1
  bool top_degree_even = false;
};
SubalgebraReport generated_subalgebra_dims(int genus, int max_degree);

}  // namespace sjd
