#include "sjd/torelli.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sjd/config.hpp"
#include "sjd/hopf.hpp"

namespace sjd {

int label_id(const Label& l, int genus) {
  if (!l.is_basis() || l.index > genus) throw std::invalid_argument("label_id: bad label");
  return (l.kind == LabelKind::Alpha ? 0 : genus) + l.index - 1;
}

Label label_of_id(int id, int genus) {
  if (id < 0 || id >= 2 * genus) throw std::out_of_range("label id");
  return id < genus ? Label::alpha(id + 1) : Label::beta(id - genus + 1);
}

void Trivector::add(int a, int b, int c, Rat coeff) {
  if (coeff == 0) return;
  if (a == b || a == c || b == c) return;
  int sign = 1;
  // sort three ids, tracking the permutation sign
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (b > c) { std::swap(b, c); sign = -sign; }
  if (a > b) { std::swap(a, b); sign = -sign; }
  Triple t{a, b, c};
  auto it = terms.find(t);
  Rat v = sign > 0 ? coeff : -coeff;
  if (it == terms.end()) {
    terms.emplace(t, v);
  } else {
    it->second += v;
    if (it->second == 0) terms.erase(it);
  }
}

Trivector wedge(const Label& x, const Label& y, const Label& z, int genus) {
  Trivector t;
  t.genus = genus;
  t.add(label_id(x, genus), label_id(y, genus), label_id(z, genus), 1);
  return t;
}

Trivector wedge_omega(const Label& h, int genus) {
  Trivector t;
  t.genus = genus;
  int hid = label_id(h, genus);
  for (int i = 1; i <= genus; ++i)
    t.add(hid, label_id(Label::alpha(i), genus), label_id(Label::beta(i), genus), 1);
  return t;
}

TripleTable::TripleTable(int g) : genus(g) {
  for (int a = 0; a < 2 * g; ++a)
    for (int b = a + 1; b < 2 * g; ++b)
      for (int c = b + 1; c < 2 * g; ++c) {
        index.emplace(Triple{a, b, c}, static_cast<int>(triples.size()));
        triples.push_back({a, b, c});
      }
}

SparseVec TripleTable::vec_of(const Trivector& t) const {
  std::map<int, Rat> m;
  for (const auto& [tr, c] : t.terms) m[index.at(tr)] += c;
  return sv_from_map(m);
}

void Wedge2::add(int i, int j, const Rat& c) {
  if (c == 0 || i == j) return;
  Rat v = c;
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  auto key = std::make_pair(i, j);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == 0) terms.erase(it);
  }
}

Wedge2& Wedge2::operator+=(const Wedge2& o) {
  for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
  return *this;
}

Wedge2& Wedge2::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [k, v] : terms) v *= c;
  return *this;
}

Wedge2 wedge2_of(const Trivector& a, const Trivector& b) {
  if (a.genus != b.genus) throw std::invalid_argument("genus mismatch");
  TripleTable tt(a.genus);
  Wedge2 w;
  w.genus = a.genus;
  for (const auto& [ta, ca] : a.terms)
    for (const auto& [tb, cb] : b.terms) w.add(tt.index.at(ta), tt.index.at(tb), ca * cb);
  return w;
}

PairTable::PairTable(int g) : genus(g) {
  TripleTable tt(g);
  ntriples = tt.size();
  for (int i = 0; i < ntriples; ++i)
    for (int j = i + 1; j < ntriples; ++j) {
      index.emplace(std::make_pair(i, j), static_cast<int>(pairs.size()));
      pairs.emplace_back(i, j);
    }
}

SparseVec PairTable::vec_of(const Wedge2& w) const {
  std::map<int, Rat> m;
  for (const auto& [k, c] : w.terms) m[index.at(k)] += c;
  return sv_from_map(m);
}

Wedge2 PairTable::of_vec(const SparseVec& v) const {
  Wedge2 w;
  w.genus = genus;
  for (const auto& [i, c] : v) w.add(pairs[i].first, pairs[i].second, c);
  return w;
}

Element y_map_triple(const Triple& t, int genus) {
  return element_of(
      make_Y(label_of_id(t[0], genus), label_of_id(t[1], genus), label_of_id(t[2], genus)), genus);
}

Element y_map(const Trivector& t) {
  Element e = Element::zero(t.genus);
  for (const auto& [tr, c] : t.terms) {
    Element y = y_map_triple(tr, t.genus);
    y *= c;
    e += y;
  }
  return e;
}

Element b2_apply(const Wedge2& w) {
  TripleTable tt(w.genus);
  Element out = Element::zero(w.genus);
  for (const auto& [k, c] : w.terms) {
    Element br = bracket(y_map_triple(tt.triple(k.first), w.genus),
                         y_map_triple(tt.triple(k.second), w.genus));
    br *= c;
    out += br;
  }
  return out;
}

Trivector sp_act_trivector(const SpGenerator& g, const Trivector& t) {
  Trivector out;
  out.genus = t.genus;
  for (const auto& [tr, c] : t.terms) {
    for (int slot = 0; slot < 3; ++slot) {
      LabelImage img = sp_act(g, label_of_id(tr[slot], t.genus), t.genus);
      if (img.coeff == 0) continue;
      Triple moved = tr;
      moved[slot] = label_id(img.label, t.genus);
      out.add(moved[0], moved[1], moved[2], c * img.coeff);
    }
  }
  return out;
}

Wedge2 sp_act_wedge2(const SpGenerator& g, const Wedge2& w) {
  TripleTable tt(w.genus);
  Wedge2 out;
  out.genus = w.genus;
  for (const auto& [k, c] : w.terms) {
    for (int side = 0; side < 2; ++side) {
      int fixed = side == 0 ? k.second : k.first;
      const Triple& tr = tt.triple(side == 0 ? k.first : k.second);
      Trivector tv;
      tv.genus = w.genus;
      tv.add(tr[0], tr[1], tr[2], 1);
      Trivector img = sp_act_trivector(g, tv);
      for (const auto& [tr2, c2] : img.terms) {
        int moved = tt.index.at(tr2);
        if (side == 0)
          out.add(moved, fixed, c * c2);
        else
          out.add(fixed, moved, c * c2);
      }
    }
  }
  return out;
}

Wedge2 relation_r1(int genus) {
  Wedge2 w;
  w.genus = genus;
  if (genus < 3) throw std::invalid_argument("relations need genus >= 3");
  if (genus == 3) return w;
  Trivector a = wedge(Label::alpha(1), Label::alpha(2), Label::beta(2), genus);
  Trivector b = wedge(Label::alpha(3), Label::alpha(4), Label::beta(4), genus);
  return wedge2_of(a, b);
}

Wedge2 relation_r2(int genus) {
  if (genus < 3) throw std::invalid_argument("relations need genus >= 3");
  Trivector a = wedge(Label::alpha(1), Label::alpha(2), Label::beta(2), genus);
  Trivector b = wedge_omega(Label::alpha(genus), genus);
  return wedge2_of(a, b);
}

Echelon sp_closure_wedge2(const std::vector<Wedge2>& seeds, int genus) {
  PairTable pt(genus);
  auto gens = sp_generators(genus);
  Echelon ech;
  std::vector<SparseVec> work;
  for (const auto& s : seeds) {
    SparseVec v = pt.vec_of(s);
    if (ech.insert(v)) work.push_back(std::move(v));
  }
  while (!work.empty()) {
    SparseVec v = std::move(work.back());
    work.pop_back();
    Wedge2 lift = pt.of_vec(v);
    for (const auto& g : gens) {
      SparseVec w = pt.vec_of(sp_act_wedge2(g, lift));
      if (ech.insert(w)) work.push_back(std::move(w));
    }
  }
  return ech;
}

Echelon sp_closure_wedge2_mod_h(const std::vector<Wedge2>& seeds, int genus,
                                const TripleTable& tt, const Echelon& hspan,
                                const std::vector<int>& complement) {
  (void)tt;
  std::map<int, int> comp_pos;
  for (size_t i = 0; i < complement.size(); ++i) comp_pos[complement[i]] = static_cast<int>(i);
  int q = static_cast<int>(complement.size());
  // dense index over pairs a < b, matching the column order of c2
  std::vector<std::pair<int, int>> dense;
  std::map<std::pair<int, int>, int> dense_idx;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      dense_idx.emplace(std::make_pair(a, b), static_cast<int>(dense.size()));
      dense.emplace_back(a, b);
    }

  // project a Wedge2 to coordinates on pairs of complement triples
  auto project = [&](const Wedge2& w) {
    std::map<int, Rat> m;
    for (const auto& [k, c] : w.terms) {
      SparseVec va{{k.first, Rat(1)}}, vb{{k.second, Rat(1)}};
      hspan.reduce(va);
      hspan.reduce(vb);
      for (const auto& [ia, ca] : va)
        for (const auto& [ib, cb] : vb) {
          if (ia == ib) continue;
          int a = comp_pos.at(ia), b = comp_pos.at(ib);
          Rat v = c * ca * cb;
          if (a < b)
            m[dense_idx.at({a, b})] += v;
          else
            m[dense_idx.at({b, a})] -= v;
        }
    }
    return sv_from_map(m);
  };
  auto lift = [&](const SparseVec& v) {
    Wedge2 w;
    w.genus = genus;
    for (const auto& [i, c] : v) w.add(complement[dense[i].first], complement[dense[i].second], c);
    return w;
  };

  auto gens = sp_generators(genus);
  Echelon ech;
  std::vector<SparseVec> work;
  for (const auto& s : seeds) {
    SparseVec v = project(s);
    if (ech.insert(v)) work.push_back(std::move(v));
  }
  while (!work.empty()) {
    SparseVec v = std::move(work.back());
    work.pop_back();
    Wedge2 w = lift(v);
    for (const auto& g : gens) {
      SparseVec img = project(sp_act_wedge2(g, w));
      if (ech.insert(img)) work.push_back(std::move(img));
    }
  }
  return ech;
}

Rat theta_coefficient(const Element& x) {
  SpaceTag tag{Family::A, true, x.genus, 2, LoopRestrict::None, 0};
  const QuotientBasis& qb = quotient_basis(tag);
  SparseVec nf = qb.normal_form(x);
  Element th = element_of(make_Theta(), x.genus);
  SparseVec tnf = qb.normal_form(th);
  if (tnf.size() != 1) throw std::logic_error("theta does not reduce to a single coordinate");
  return sv_coeff(nf, tnf.front().first) / tnf.front().second;
}

namespace {
std::map<int, B2Analysis> b2_cache;
std::mutex b2_mutex;
}  // namespace

const B2Analysis& b2_analysis(int genus) {
  std::lock_guard<std::mutex> lock(b2_mutex);
  auto it = b2_cache.find(genus);
  if (it != b2_cache.end()) return it->second;

  SpaceTag tag{Family::A, true, genus, 2, LoopRestrict::None, 0};
  const QuotientBasis& qb = quotient_basis(tag);
  PairTable pt(genus);
  TripleTable tt(genus);
  std::vector<SparseVec> cols(pt.size());
  int nthreads = std::max(1, Config::get().threads);
  auto worker = [&](int offset) {
    for (int c = offset; c < pt.size(); c += nthreads) {
      auto [i, j] = pt.pairs[c];
      Element br = bracket(y_map_triple(tt.triple(i), genus), y_map_triple(tt.triple(j), genus));
      cols[c] = qb.normal_form(br);
    }
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  B2Analysis an;
  an.domain_dim = pt.size();
  an.analysis = analyze_map(cols, static_cast<int>(qb.basis.size()));
  an.rank = an.analysis.rank;
  an.kernel_dim = static_cast<int>(an.analysis.kernel.size());
  return b2_cache.emplace(genus, std::move(an)).first->second;
}

KerB2Report verify_ker_b2(int genus) {
  KerB2Report rep;
  const B2Analysis& an = b2_analysis(genus);
  rep.kernel_dim = an.kernel_dim;
  Wedge2 r1 = relation_r1(genus);
  Wedge2 r2 = relation_r2(genus);
  rep.b2r1_zero = nf_zero_graded(b2_apply(r1), Family::A, true);
  rep.b2r2_zero = nf_zero_graded(b2_apply(r2), Family::A, true);
  Echelon closure = sp_closure_wedge2({r1, r2}, genus);
  rep.closure_dim = closure.rank();
  Echelon ker;
  for (const auto& v : an.analysis.kernel) ker.insert(v);
  rep.equal = subspace_equal(ker, closure);
  return rep;
}

ImB2Report verify_im_b2(int genus) {
  ImB2Report rep;
  const B2Analysis& an = b2_analysis(genus);
  rep.image_dim = an.rank;
  SpaceTag even{Family::A, true, genus, 2, LoopRestrict::Even, 0};
  rep.even_dim = quotient_basis(even).dim;
  SpaceTag tag{Family::A, true, genus, 2, LoopRestrict::None, 0};
  const QuotientBasis& qb = quotient_basis(tag);
  bool inside = true;
  for (const auto& [pivot, row] : an.analysis.image.rows())
    for (const auto& [col, c] : row)
      if (qb.loop_of[col] % 2 != 0) inside = false;
  rep.equals_even = inside && rep.image_dim == rep.even_dim;
  return rep;
}

Wedge2 invariant_T1(int genus) {
  Wedge2 t;
  t.genus = genus;
  for (int i = 1; i <= genus; ++i)
    for (int j = 1; j <= genus; ++j)
      for (int k = 1; k <= genus; ++k) {
        Trivector a = wedge(Label::alpha(j), Label::beta(j), Label::alpha(i), genus);
        Trivector b = wedge(Label::alpha(k), Label::beta(k), Label::beta(i), genus);
        t += wedge2_of(a, b);
      }
  return t;
}

Wedge2 invariant_T2(int genus) {
  Wedge2 t;
  t.genus = genus;
  auto al = [](int i) { return Label::alpha(i); };
  auto be = [](int i) { return Label::beta(i); };
  for (int i = 1; i <= genus; ++i)
    for (int j = 1; j <= genus; ++j)
      for (int k = 1; k <= genus; ++k) {
        t += wedge2_of(wedge(al(j), al(k), al(i), genus), wedge(be(j), be(k), be(i), genus));
        Wedge2 w2 = wedge2_of(wedge(al(j), be(k), al(i), genus), wedge(be(j), al(k), be(i), genus));
        w2 *= Rat(-1);
        t += w2;
        Wedge2 w3 = wedge2_of(wedge(al(k), be(i), al(j), genus), wedge(be(k), al(i), be(j), genus));
        w3 *= Rat(-1);
        t += w3;
        Wedge2 w4 = wedge2_of(wedge(al(i), be(j), al(k), genus), wedge(be(i), al(j), be(k), genus));
        w4 *= Rat(-1);
        t += w4;
      }
  return t;
}

namespace {

// Decompose a degree-2 class as a * theta + b * strut(w,w); `exact` records
// whether the class lies in that plane at all.
struct ThetaSwo {
  Rat theta, swo;
  bool exact;
};

ThetaSwo split_theta_swo(const Element& x, const Element& swo, int genus) {
  SpaceTag tag{Family::A, true, genus, 2, LoopRestrict::None, 0};
  const QuotientBasis& qb = quotient_basis(tag);
  SparseVec nf_x = qb.normal_form(x);
  SparseVec nf_s = qb.normal_form(swo);
  SparseVec nf_t = qb.normal_form(element_of(make_Theta(), genus));
  if (nf_t.size() != 1) throw std::logic_error("theta coordinate not isolated");
  // strut(w,w) is loop-0, theta is the lone loop-2 coordinate, so b is read
  // off any loop-0 coordinate of the strut class and a from the theta slot
  Rat b = 0;
  for (const auto& [col, c] : nf_s) {
    if (qb.loop_of[col] == 0 && c != 0) {
      b = sv_coeff(nf_x, col) / c;
      break;
    }
  }
  SparseVec rem = nf_x;
  sv_axpy(rem, -b, nf_s);
  Rat a = sv_coeff(rem, nf_t.front().first) / nf_t.front().second;
  sv_axpy(rem, -a, nf_t);
  return {a, b, rem.empty()};
}

}  // namespace

T1T2Report t1_t2(int genus) {
  T1T2Report rep{0, 0, 0, 0, false, false, 0};
  Element swo = Element::zero(genus);
  {
    // expansion of the unordered (omega,omega) strut, built here directly:
    // sum_{i,j} H with legs (beta_i, alpha_j; alpha_i, beta_j)
    for (int i = 1; i <= genus; ++i)
      for (int j = 1; j <= genus; ++j)
        swo += element_of(make_H(Label::beta(i), Label::alpha(j), Label::alpha(i), Label::beta(j)),
                          genus);
  }
  Element b1 = b2_apply(invariant_T1(genus));
  Element b2v = b2_apply(invariant_T2(genus));
  ThetaSwo s1 = split_theta_swo(b1, swo, genus);
  ThetaSwo s2 = split_theta_swo(b2v, swo, genus);
  rep.t1_theta = s1.theta;
  rep.t1_swo = s1.swo;
  rep.t2_theta = s2.theta;
  rep.t2_swo = s2.swo;
  rep.t1_identity = s1.exact;
  rep.t2_identity = s2.exact;
  rep.det = s1.theta * s2.swo - s2.theta * s1.swo;
  return rep;
}

R3Report r3_preimage(int genus) {
  R3Report rep{0, 0, false, false};
  T1T2Report t = t1_t2(genus);
  // solve a*(t1_theta, t1_swo) + b*(t2_theta, t2_swo) = (1, 0)
  Rat det = t.t1_theta * t.t2_swo - t.t2_theta * t.t1_swo;
  if (det == 0) throw std::logic_error("singular T1/T2 system");
  rep.a = t.t2_swo / det;
  rep.b = -t.t1_swo / det;
  Wedge2 r3 = invariant_T1(genus);
  r3 *= rep.a;
  Wedge2 tb = invariant_T2(genus);
  tb *= rep.b;
  r3 += tb;
  Element img = b2_apply(r3);
  Element th = element_of(make_Theta(), genus);
  rep.b2_is_theta = nf_zero_graded(img - th, Family::A, true);
  SpaceTag tree{Family::A, true, genus, 2, LoopRestrict::Tree, 0};
  Element tr = tree_reduce(img);
  rep.tree_zero = tr.is_zero() || nf_zero(tr, tree);
  return rep;
}

SubalgebraReport generated_subalgebra_dims(int genus, int max_degree) {
  SubalgebraReport rep;
  SpaceTag tag1{Family::A, true, genus, 1, LoopRestrict::None, 0};
  rep.dims.push_back(quotient_basis(tag1).dim);
  // degree-d part: brackets of degree-1 generators with a basis of degree d-1
  std::vector<Element> prev;
  {
    TripleTable tt(genus);
    for (int i = 0; i < tt.size(); ++i) prev.push_back(y_map_triple(tt.triple(i), genus));
  }
  for (int d = 2; d <= max_degree; ++d) {
    SpaceTag tag{Family::A, true, genus, d, LoopRestrict::None, 0};
    const QuotientBasis& qb = quotient_basis(tag);
    TripleTable tt(genus);
    Echelon span;
    std::vector<Element> reps;
    for (const auto& p : prev) {
      for (int i = 0; i < tt.size(); ++i) {
        Element br = bracket(y_map_triple(tt.triple(i), genus), p);
        SparseVec v = qb.normal_form(br);
        if (span.insert(v)) reps.push_back(qb.element_of_vec(v));
      }
    }
    rep.dims.push_back(span.rank());
    if (d == max_degree) {
      bool even = true;
      for (const auto& [pivot, row] : span.rows())
        for (const auto& [col, c] : row)
          if (qb.loop_of[col] % 2 != 0) even = false;
      rep.top_degree_even = even;
    }
    prev = std::move(reps);
  }
  return rep;
}

}  // namespace sjd
