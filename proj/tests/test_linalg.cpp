#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sjd/linalg.hpp"

using namespace sjd;

TEST_CASE("sparse vector arithmetic") {
  SparseVec a{{0, 1}, {2, frac(1, 2)}};
  SparseVec b{{0, -1}, {1, 3}};
  SparseVec s = sv_add(a, b);
  CHECK(s == SparseVec{{1, Rat(3)}, {2, frac(1, 2)}});
  sv_axpy(s, Rat(-3), SparseVec{{1, Rat(1)}});
  CHECK(s == SparseVec{{2, frac(1, 2)}});
  CHECK(sv_coeff(a, 2) == frac(1, 2));
  CHECK(sv_coeff(a, 1) == 0);
}

TEST_CASE("echelon reduce and rank") {
  Echelon e;
  CHECK(e.insert({{0, Rat(2)}, {1, Rat(4)}}));
  CHECK(e.insert({{1, Rat(1)}, {2, Rat(1)}}));
  CHECK_FALSE(e.insert({{0, Rat(1)}, {1, Rat(1)}, {2, Rat(-1)}}));  // dependent
  CHECK(e.rank() == 2);
  SparseVec v{{0, Rat(1)}, {1, Rat(2)}, {2, Rat(5)}};
  e.reduce(v);
  CHECK(v == SparseVec{{2, Rat(5)}});
  CHECK(e.contains({{0, Rat(3)}, {1, Rat(6)}}));
}

TEST_CASE("normal form is coset-canonical") {
  // two generating sets with the same span reduce vectors identically
  Echelon a, b;
  a.insert({{0, Rat(1)}, {1, Rat(1)}});
  a.insert({{1, Rat(1)}, {2, Rat(1)}});
  b.insert({{0, Rat(2)}, {2, Rat(-2)}});
  b.insert({{1, Rat(3)}, {2, Rat(3)}});
  CHECK(subspace_equal(a, b));
  SparseVec u{{0, Rat(1)}, {1, Rat(5)}, {2, Rat(-2)}};
  SparseVec v = u;
  a.reduce(u);
  b.reduce(v);
  CHECK(u == v);
}

TEST_CASE("map analysis: rank, kernel, image") {
  // columns of [[1,0,1],[0,1,1]] over a 2-dim codomain
  std::vector<SparseVec> cols = {
      {{0, Rat(1)}}, {{1, Rat(1)}}, {{0, Rat(1)}, {1, Rat(1)}}};
  MapAnalysis an = analyze_map(cols, 2);
  CHECK(an.rank == 2);
  REQUIRE(an.kernel.size() == 1);
  SparseVec k = an.kernel[0];
  // kernel spanned by (1,1,-1) up to scale
  REQUIRE(k.size() == 3);
  Rat c0 = sv_coeff(k, 0);
  CHECK(sv_coeff(k, 1) == c0);
  CHECK(sv_coeff(k, 2) == -c0);
}

TEST_CASE("zero map kernel is everything") {
  std::vector<SparseVec> cols(4);
  MapAnalysis an = analyze_map(cols, 3);
  CHECK(an.rank == 0);
  CHECK(an.kernel.size() == 4);
}

TEST_CASE("random rank-nullity") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    int dom = 1 + rng() % 6, cod = 1 + rng() % 5;
    std::vector<SparseVec> cols(dom);
    for (auto& c : cols) {
      std::map<int, Rat> m;
      for (int k = 0; k < 3; ++k) m[rng() % cod] += frac(static_cast<long>(rng() % 5) - 2, 1);
      c = sv_from_map(m);
    }
    MapAnalysis an = analyze_map(cols, cod);
    CHECK(an.rank + static_cast<int>(an.kernel.size()) == dom);
  }
}
