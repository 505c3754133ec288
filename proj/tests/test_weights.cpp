#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "sjd/hopf.hpp"
#include "sjd/quotient.hpp"
#include "sjd/weight_systems.hpp"

using namespace sjd;

namespace {

// Test-only noncommutative Weyl algebra: normal-ordered words with the
// relation x_i x_j - x_j x_i = s(i,j). Used as the independent route for the
// Moyal product through symmetrization.
struct NCWeyl {
  const VarForm* s;
  // word (sorted = normal order) -> coefficient
  using Word = std::vector<int>;
  std::map<Word, Rat> terms;

  void add(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end())
      terms.emplace(w, c);
    else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

Rat form_of(const VarForm& s, int i, int j) {
  auto it = s.find({i, j});
  return it == s.end() ? Rat(0) : it->second;
}

// normal-order a word recursively
void nc_insert(NCWeyl& out, std::vector<int> word, Rat coeff, const VarForm& s) {
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] > word[i + 1]) {
      // x_a x_b = x_b x_a + s(a,b)
      std::vector<int> swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      std::vector<int> contracted;
      contracted.reserve(word.size() - 2);
      for (size_t k = 0; k < word.size(); ++k)
        if (k != i && k != i + 1) contracted.push_back(word[k]);
      Rat sv = form_of(s, word[i], word[i + 1]);
      nc_insert(out, std::move(swapped), coeff, s);
      if (sv != 0) nc_insert(out, std::move(contracted), coeff * sv, s);
      return;
    }
  }
  out.add(word, coeff);
}

NCWeyl nc_mul(const NCWeyl& a, const NCWeyl& b, const VarForm& s) {
  NCWeyl out;
  out.s = &s;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      nc_insert(out, std::move(w), ca * cb, s);
    }
  return out;
}

// cleaner: symmetrize with explicit averaging
NCWeyl nc_chi_avg(const Poly& p, const VarForm& s) {
  NCWeyl out;
  out.s = &s;
  for (const auto& [mono, c] : p) {
    std::vector<int> vars;
    for (const auto& [v, e] : mono)
      for (int k = 0; k < e; ++k) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    NCWeyl local;
    local.s = &s;
    long count = 0;
    do {
      nc_insert(local, vars, 1, s);
      ++count;
    } while (std::next_permutation(vars.begin(), vars.end()));
    for (const auto& [w, v] : local.terms) out.add(w, c * v / count);
  }
  return out;
}

}  // namespace

TEST_CASE("metrized Lie validation") {
  CHECK_FALSE(MetrizedLie::sl2().validate());
  CHECK_FALSE(MetrizedLie::abelian(1).validate());
  CHECK_FALSE(MetrizedLie::abelian(4).validate());
  MetrizedLie bad = MetrizedLie::sl2();
  bad.form.assign(3, std::vector<Rat>(3, 0));
  auto msg = bad.validate();
  REQUIRE(msg);
  CHECK(msg->find("degenerate") != std::string::npos);
  MetrizedLie broken = MetrizedLie::sl2();
  broken.structure[0][1][1] = 5;  // breaks antisymmetry
  CHECK(broken.validate());
}

TEST_CASE("json round trip") {
  std::string text = R"({"dim":2,"brackets":[[0,1,[[1,"1"]]]],"form":[["0","1"],["1","0"]]})";
  MetrizedLie L = MetrizedLie::from_json_text(text);
  CHECK(L.dim == 2);
  CHECK(L.structure[0][1][1] == 1);
  CHECK(L.structure[1][0][1] == -1);
  // not a Lie algebra with invariant form; validate flags it
  CHECK(L.validate());
}

TEST_CASE("the empty diagram maps to the unit polynomial") {
  MetrizedLie sl = MetrizedLie::sl2();
  PolyT w = weight_system(Diagram{}, sl, 2);
  REQUIRE(w.count(0));
  REQUIRE(w.at(0).count(Monomial{}));
  CHECK(w.at(0).at(Monomial{}) == 1);
  CHECK(w.size() == 1);
}

TEST_CASE("abelian weight systems vanish in positive degree") {
  MetrizedLie ab = MetrizedLie::abelian(3);
  for (const auto& k : enumerate_connected(2, 2)) {
    Element e = Element::zero(2);
    e.add_key(k, 1);
    CHECK(polyt_zero(weight_system(e, ab)));
  }
}

TEST_CASE("theta against the direct contraction oracle") {
  MetrizedLie sl = MetrizedLie::sl2();
  // oracle: sum over three edge assignments of B(a1,a2,a3) B(b1,b2,b3)
  // K^{a1 b1} K^{a2 b2} K^{a3 b3} with the crossed wiring of make_Theta
  auto K = sl.form_inverse();
  int n = sl.dim;
  auto B = [&](int a, int b, int c) {
    Rat s = 0;
    for (int r = 0; r < n; ++r) s += sl.structure[a][b][r] * sl.form[r][c];
    return s;
  };
  Rat oracle = 0;
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3)
        for (int b1 = 0; b1 < n; ++b1)
          for (int b2 = 0; b2 < n; ++b2)
            for (int b3 = 0; b3 < n; ++b3)
              oracle += B(a1, a2, a3) * B(b3, b2, b1) * K[a1][b1] * K[a2][b2] * K[a3][b3];
  PolyT w = weight_system(element_of(make_Theta(), 1), sl);
  REQUIRE(w.count(2));
  REQUIRE(w.at(2).count(Monomial{}));
  CHECK(w.at(2).at(Monomial{}) == oracle);
  CHECK(oracle == 12);
}

TEST_CASE("one-vertex diagram with a repeated label maps to zero") {
  // the diagram itself carries a sign-reversing automorphism, and the
  // alternating vertex tensor kills the contraction
  MetrizedLie sl = MetrizedLie::sl2();
  Diagram d = make_Y(Label::alpha(1), Label::beta(1), Label::alpha(1));
  CHECK(canonical(d).zero);
  CHECK(polyt_zero(weight_system(d, sl, 1)));
}

TEST_CASE("moyal against the symmetrized Weyl oracle") {
  VarForm s;
  s[{0, 1}] = 1;
  s[{1, 0}] = -1;
  s[{2, 3}] = frac(2, 3);
  s[{3, 2}] = frac(-2, 3);
  auto check = [&](const Poly& pa, const Poly& pb) {
    PolyT a, b;
    a[0] = pa;
    b[0] = pb;
    PolyT prod = moyal_product(a, b, s);
    REQUIRE(prod.size() <= 1);
    // oracle route: symmetrize, multiply in the Weyl algebra
    NCWeyl wa = nc_chi_avg(pa, s), wb = nc_chi_avg(pb, s);
    NCWeyl wprod = nc_mul(wa, wb, s);
    // and symmetrize the commutative result
    Poly result = prod.count(0) ? prod.at(0) : Poly{};
    NCWeyl wres = nc_chi_avg(result, s);
    bool equal = wprod.terms.size() == wres.terms.size();
    if (equal)
      for (const auto& [w, c] : wprod.terms)
        if (!wres.terms.count(w) || wres.terms.at(w) != c) equal = false;
    CHECK(equal);
  };
  Poly x{{Monomial{{0, 1}}, Rat(1)}};
  Poly y{{Monomial{{1, 1}}, Rat(1)}};
  Poly x2{{Monomial{{0, 2}}, Rat(1)}};
  Poly y2{{Monomial{{1, 2}}, Rat(1)}};
  Poly mixed{{Monomial{{0, 1}, {3, 1}}, frac(1, 2)}, {Monomial{{2, 1}}, Rat(3)}};
  check(x, y);
  check(x2, y2);
  check(mixed, y2);
  check(x2, mixed);
}

TEST_CASE("x^2 star y^2 expansion") {
  VarForm s;
  s[{0, 1}] = frac(5, 1);
  s[{1, 0}] = frac(-5, 1);
  PolyT x2, y2;
  x2[0][Monomial{{0, 2}}] = 1;
  y2[0][Monomial{{1, 2}}] = 1;
  PolyT p = moyal_product(x2, y2, s);
  REQUIRE(p.count(0));
  const Poly& poly = p.at(0);
  // x^2 y^2 + 2 s x y + (s^2/2)
  CHECK(poly.at(Monomial{{0, 2}, {1, 2}}) == 1);
  CHECK(poly.at(Monomial{{0, 1}, {1, 1}}) == 10);   // 2 s
  CHECK(poly.at(Monomial{}) == frac(25, 2));        // s^2 / 2
}

TEST_CASE("weight systems are multiplicative for the star product") {
  MetrizedLie sl = MetrizedLie::sl2();
  int g = 2;
  VarForm s = kappa_tensor_omega(sl, g);
  auto keys = enumerate_connected(g, 1);
  for (size_t i = 0; i < keys.size(); i += 2)
    for (size_t j = 1; j < keys.size(); j += 2) {
      Element x = Element::zero(g), y = Element::zero(g);
      x.add_key(keys[i], 1);
      y.add_key(keys[j], 1);
      PolyT lhs = weight_system(star(x, y), sl);
      PolyT rhs = moyal_product(weight_system(x, sl), weight_system(y, sl), s);
      CHECK(polyt_zero(polyt_add(lhs, polyt_scale(rhs, Rat(-1)))));
    }
}
