#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sjd/hopf.hpp"
#include "sjd/torelli.hpp"

using namespace sjd;

TEST_CASE("trivector normalization") {
  Trivector t;
  t.genus = 3;
  t.add(2, 0, 1, 1);  // cyclic, even
  REQUIRE(t.terms.size() == 1);
  CHECK(t.terms.begin()->first == Triple{0, 1, 2});
  CHECK(t.terms.begin()->second == 1);
  t.add(0, 2, 1, 1);  // odd permutation cancels it
  CHECK(t.terms.empty());
  Trivector z;
  z.genus = 3;
  z.add(0, 0, 1, 5);  // repeated index
  CHECK(z.terms.empty());
}

TEST_CASE("y_map on basis triples and antisymmetry") {
  int g = 3;
  Trivector t = wedge(Label::alpha(1), Label::alpha(2), Label::alpha(3), g);
  Element y = y_map(t);
  Element direct = element_of(make_Y(Label::alpha(1), Label::alpha(2), Label::alpha(3)), g);
  CHECK((y - direct).is_zero());
  Trivector swapped = wedge(Label::alpha(2), Label::alpha(1), Label::alpha(3), g);
  CHECK((y_map(swapped) + direct).is_zero());
  // rank of the degree-1 identification
  TripleTable tt(g);
  SpaceTag t1{Family::A, true, g, 1, LoopRestrict::None, 0};
  const QuotientBasis& qb = quotient_basis(t1);
  std::vector<SparseVec> cols;
  for (int i = 0; i < tt.size(); ++i) cols.push_back(qb.normal_form(y_map_triple(tt.triple(i), g)));
  CHECK(analyze_map(cols, static_cast<int>(qb.basis.size())).rank == 20);
}

TEST_CASE("b2 analysis at genus 3") {
  const B2Analysis& an = b2_analysis(3);
  CHECK(an.domain_dim == 190);
  CHECK(an.rank == 106);
  CHECK(an.kernel_dim == 84);
}

TEST_CASE("relations") {
  CHECK(relation_r1(3).terms.empty());
  CHECK_FALSE(relation_r1(4).terms.empty());
  CHECK_FALSE(relation_r2(3).terms.empty());
  CHECK_THROWS(relation_r2(2));
  // both relations die under the bracket
  for (int g : {3, 4}) {
    CHECK(nf_zero_graded(b2_apply(relation_r1(g)), Family::A, true));
    CHECK(nf_zero_graded(b2_apply(relation_r2(g)), Family::A, true));
  }
}

TEST_CASE("kernel of b2 equals the closure of the quadratic relations") {
  KerB2Report rep = verify_ker_b2(3);
  CHECK(rep.kernel_dim == 84);
  CHECK(rep.closure_dim == 84);
  CHECK(rep.equal);
  CHECK(rep.b2r1_zero);
  CHECK(rep.b2r2_zero);
}

TEST_CASE("image of b2 is the even part") {
  ImB2Report rep = verify_im_b2(3);
  CHECK(rep.image_dim == 106);
  CHECK(rep.even_dim == 106);
  CHECK(rep.equals_even);
}

TEST_CASE("b2 is equivariant for the generator derivations") {
  int g = 3;
  std::mt19937 rng(31);
  PairTable pt(g);
  auto gens = sp_generators(g);
  for (int t = 0; t < 10; ++t) {
    Wedge2 w;
    w.genus = g;
    w.add(static_cast<int>(rng() % pt.ntriples), static_cast<int>(rng() % pt.ntriples), 1);
    const auto& gen = gens[rng() % gens.size()];
    Element lhs = b2_apply(sp_act_wedge2(gen, w));
    Element rhs = sp_act_element(gen, b2_apply(w));
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("theta coefficient extraction") {
  int g = 3;
  Element th = element_of(make_Theta(), g);
  Element x = th;
  x *= frac(7, 3);
  x += element_of(make_H(Label::alpha(1), Label::alpha(2), Label::beta(1), Label::beta(2)), g);
  CHECK(theta_coefficient(x) == frac(7, 3));
}

TEST_CASE("T1 and T2 identities at genus 3") {
  T1T2Report rep = t1_t2(3);
  CHECK(rep.t1_theta == frac(-3, 2));
  CHECK(rep.t1_swo == 2);
  CHECK(rep.t2_theta == -15);
  CHECK(rep.t2_swo == 12);
  CHECK(rep.t1_identity);
  CHECK(rep.t2_identity);
}

TEST_CASE("r3 preimage") {
  R3Report rep = r3_preimage(3);
  CHECK(rep.a == 1);
  CHECK(rep.b == frac(-1, 6));
  CHECK(rep.b2_is_theta);
  CHECK(rep.tree_zero);
}

TEST_CASE("generated subalgebra dimensions") {
  SubalgebraReport rep = generated_subalgebra_dims(3, 2);
  REQUIRE(rep.dims.size() == 2);
  CHECK(rep.dims[0] == 20);
  CHECK(rep.dims[1] == 106);
}
