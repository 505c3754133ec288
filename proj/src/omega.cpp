#include "sjd/omega.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "sjd/hopf.hpp"
#include "sjd/quotient.hpp"
#include "sjd/torelli.hpp"

namespace sjd {

namespace {

// Replace leg `li` by a fresh trivalent vertex carrying two new legs.
// Cyclic order at the new vertex: (old attachment, first, second).
Diagram expand_leg_labels(const Diagram& d, int li, const Label& first, const Label& second) {
  Diagram r;
  r.nv = d.nv + 1;
  r.ordered = d.ordered;
  int w0 = 3 * d.nv;
  r.legs.reserve(d.nlegs() + 1);
  for (int j = 0; j < d.nlegs(); ++j) {
    if (j == li) {
      r.legs.push_back(first);
      r.legs.push_back(second);
    } else {
      r.legs.push_back(d.legs[j]);
    }
  }
  auto newport = [&](int p) {
    if (!d.is_leg_port(p)) return p;
    int j = d.leg_index(p);
    return r.leg_port(j < li ? j : j + 1);
  };
  r.mate.assign(r.ports(), -1);
  for (int p = 0; p < d.ports(); ++p) {
    if (d.is_leg_port(p) && d.leg_index(p) == li) continue;
    int q = d.mate[p];
    if (d.is_leg_port(q) && d.leg_index(q) == li) {
      r.mate[newport(p)] = w0;
      r.mate[w0] = newport(p);
    } else {
      r.mate[newport(p)] = newport(q);
    }
  }
  r.mate[w0 + 1] = r.leg_port(li);
  r.mate[r.leg_port(li)] = w0 + 1;
  r.mate[w0 + 2] = r.leg_port(li + 1);
  r.mate[r.leg_port(li + 1)] = w0 + 2;
  return r;
}

Diagram expand_leg(const Diagram& d, int li, int i) {
  return expand_leg_labels(d, li, Label::alpha(i), Label::beta(i));
}

void expand_rec(const Diagram& d, const Rat& coeff, int genus, Element& out) {
  int li = -1;
  for (int j = 0; j < d.nlegs(); ++j)
    if (d.legs[j].kind == LabelKind::Omega) {
      li = j;
      break;
    }
  if (li < 0) {
    out.add_diagram(d, coeff);
    return;
  }
  for (int i = 1; i <= genus; ++i) expand_rec(expand_leg(d, li, i), coeff, genus, out);
}

Diagram reorder(const Diagram& d, const std::vector<int>& perm) {
  int e = d.nlegs();
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
  return od;
}

}  // namespace

Element expand_omega(const Diagram& d, int genus) {
  Element out = Element::zero(genus, d.ordered);
  expand_rec(d, 1, genus, out);
  return out;
}

Element expand_omega_element(const Element& e) {
  Element out = Element::zero(e.genus, e.ordered);
  for (const auto& [k, c] : e.terms) expand_rec(decode_key(k, e.ordered), c, e.genus, out);
  return out;
}

Element strut_omega_omega(int genus) {
  return expand_omega(make_strut(Label::omega(), Label::omega()), genus);
}

Element y_omega(const Label& x, const Label& y, int genus) {
  return expand_omega(make_Y(x, y, Label::omega()), genus);
}

std::vector<std::string> omega_diagram_keys(int genus, int closed_degree, bool connected,
                                            int exactly) {
  struct Piece {
    std::string key;
    int cdeg;
    int nomega;
  };
  std::vector<Piece> pieces;
  for (int i = 1; i <= closed_degree; ++i) {
    for (const auto& k : enumerate_connected(genus, i, LabelSet::BasisPlusOmega)) {
      int nw = omega_count_key(k);
      if (i + nw <= closed_degree) pieces.push_back({k, i + nw, nw});
    }
  }
  if (closed_degree >= 2) {
    Canon c = canonical(make_strut(Label::omega(), Label::omega()));
    pieces.push_back({c.key, 2, 2});
  }
  for (int i = 1; i <= genus; ++i) {
    for (Label l : {Label::alpha(i), Label::beta(i)}) {
      Canon cs = canonical(make_strut(Label::omega(), l));
      pieces.push_back({cs.key, 1, 1});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.key < b.key; });

  std::set<std::string> keys;
  std::function<void(int, size_t, int, const Diagram&)> rec =
      [&](int remaining, size_t minidx, int nomega, const Diagram& acc) {
        if (remaining == 0) {
          if (nomega == 0) return;
          if (exactly >= 0 && nomega != exactly) return;
          Canon c = canonical(acc);
          if (!c.zero) keys.insert(c.key);
          return;
        }
        if (connected && !acc.empty()) return;
        for (size_t i = minidx; i < pieces.size(); ++i) {
          if (pieces[i].cdeg > remaining) continue;
          rec(remaining - pieces[i].cdeg, i, nomega + pieces[i].nomega,
              disjoint_union(acc, decode_key(pieces[i].key)));
        }
      };
  rec(closed_degree, 0, 0, Diagram{});
  return {keys.begin(), keys.end()};
}

namespace {

std::vector<std::string> omega_first_orderings(const Diagram& d) {
  int e = d.nlegs();
  std::vector<int> perm(e);
  for (int i = 0; i < e; ++i) perm[i] = i;
  std::set<std::string> keys;
  do {
    if (e > 0 && d.legs[perm[0]].kind != LabelKind::Omega) continue;
    Canon c = canonical(reorder(d, perm));
    if (!c.zero) keys.insert(c.key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {keys.begin(), keys.end()};
}

}  // namespace

std::vector<Element> ideal_span_elements(int genus, int degree, bool connected) {
  std::vector<Element> out;
  for (const auto& k : omega_diagram_keys(genus, degree, connected)) {
    Diagram d = decode_key(k);
    for (const auto& ok : omega_first_orderings(d)) {
      Element e = chi_inv(expand_omega(decode_key(ok, true), genus));
      if (!e.is_zero()) out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Element> ideal_span_elements_ordered(int genus, int degree, bool connected) {
  std::vector<Element> out;
  for (const auto& k : omega_diagram_keys(genus, degree, connected)) {
    Diagram d = decode_key(k);
    for (const auto& ok : omega_first_orderings(d)) {
      Element e = expand_omega(decode_key(ok, true), genus);
      if (!e.is_zero()) out.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

// D has its omega leg at `oi`; remove legs j, k and route their edges into
// the vertex replacing the omega. Cyclic order (attachment, k-end, j-end),
// pinned by the span comparison against the symmetrized ideal.
Diagram reroute_through_omega(const Diagram& d, int oi, int j, int k) {
  Diagram ex = expand_leg_labels(d, oi, Label::open(), Label::open());
  ex.ordered = false;
  auto shift = [&](int t) { return t < oi ? t : t + 1; };
  return glue_legs(ex, {{oi, shift(k)}, {oi + 1, shift(j)}}, /*keep_order=*/false);
}

}  // namespace

std::vector<Element> ideal_generators_formula(int genus, int degree, bool connected) {
  std::vector<Element> out;
  for (const auto& key : omega_diagram_keys(genus, degree, connected, /*exactly=*/1)) {
    Diagram d = decode_key(key);
    int oi = -1;
    for (int t = 0; t < d.nlegs(); ++t)
      if (d.legs[t].kind == LabelKind::Omega) oi = t;
    Element gen = expand_omega(d, genus);
    for (int j = 0; j < d.nlegs(); ++j) {
      if (j == oi) continue;
      for (int k2 = j + 1; k2 < d.nlegs(); ++k2) {
        if (k2 == oi) continue;
        int w = omega_basis(d.legs[j], d.legs[k2]);
        if (w == 0) continue;
        Element t = element_of(reroute_through_omega(d, oi, j, k2), genus);
        t *= frac(-w, 4);
        gen += t;
      }
    }
    if (!gen.is_zero()) out.push_back(std::move(gen));
  }
  return out;
}

OmegaLemmaReport verify_omega_lemmas(int genus) {
  OmegaLemmaReport rep;
  auto nf0 = [&](const Element& e) { return nf_zero_graded(e, Family::A, false); };
  auto value = [&](const Diagram& d, const std::vector<int>& perm) {
    return chi_inv(expand_omega(reorder(d, perm), genus));
  };

  // Single-omega exchange: [.. w < x ..] - [.. x < w ..] equals the omega-
  // weighted sum of diagrams hooking x onto the expanded vertex.
  {
    bool ok = true;
    for (Label x : {Label::alpha(1), Label::beta(1), Label::alpha(2)}) {
      Diagram d = make_Y(Label::omega(), x, Label::beta(2));
      d.ordered = true;  // order (w, x, b2)
      Element lhs = value(d, {0, 1, 2}) - value(d, {1, 0, 2});
      Element rhs = Element::zero(genus);
      for (int i = 1; i <= genus; ++i) {
        Diagram ex = expand_leg(d, 0, i);  // legs: alpha_i, beta_i, x, b2
        for (auto [fresh, lab] : {std::pair<int, Label>{0, Label::alpha(i)}, {1, Label::beta(i)}}) {
          int w = omega_basis(lab, x);
          if (w == 0) continue;
          Element val = chi_inv(element_of(glue_legs(ex, {{fresh, 2}}, true), genus));
          val *= w;
          rhs += val;
        }
      }
      if (!nf0(lhs - rhs)) ok = false;
    }
    rep.stu_single = ok;
  }

  // Commutation: an omega vertex jumps over the full leg block of a closed
  // sub-diagram.
  {
    bool ok = true;
    {
      Diagram d = disjoint_union(make_strut(Label::omega(), Label::alpha(1)),
                                 make_Y(Label::beta(1), Label::alpha(2), Label::beta(2)));
      d.ordered = true;  // legs 0=w 1=a1 | 2,3,4 = Y block
      ok = ok && nf0(value(d, {0, 2, 3, 4, 1}) - value(d, {2, 3, 4, 0, 1}));
    }
    {
      // omega first vs last within its own component
      Diagram d = make_Y(Label::omega(), Label::alpha(1), Label::beta(2));
      d.ordered = true;
      ok = ok && nf0(value(d, {0, 1, 2}) - value(d, {1, 2, 0}));
    }
    rep.commutation = ok;
  }

  // Double-omega instance: the jumped block itself carries an omega vertex.
  {
    Diagram d = disjoint_union(make_strut(Label::omega(), Label::alpha(1)),
                               make_strut(Label::omega(), Label::beta(1)));
    d.ordered = true;  // legs 0=w 1=a1 | 2=w 3=b1
    rep.stu_double = nf0(value(d, {0, 2, 3, 1}) - value(d, {2, 3, 0, 1}));
  }
  return rep;
}

C2Report c2_analysis(int genus) {
  C2Report rep;
  SpaceTag modi{Family::AModI, true, genus, 2, LoopRestrict::None, 0};
  const QuotientBasis& qb = quotient_basis(modi);
  rep.ideal_dim =
      quotient_basis(SpaceTag{Family::A, true, genus, 2, LoopRestrict::None, 0}).dim - qb.dim;

  Element swo = strut_omega_omega(genus);
  Element th = element_of(make_Theta(), genus);
  th *= frac(genus, 4);
  rep.swo_theta = nf_zero(swo - th, modi);

  // Lambda^3 H / H with H embedded by h -> h ^ omega.
  TripleTable tt(genus);
  Echelon hspan;
  for (int id = 0; id < 2 * genus; ++id)
    hspan.insert(tt.vec_of(wedge_omega(label_of_id(id, genus), genus)));
  std::vector<int> complement;
  for (int j = 0; j < tt.size(); ++j)
    if (!hspan.rows().count(j)) complement.push_back(j);
  int q = static_cast<int>(complement.size());
  rep.domain_dim = q * (q - 1) / 2;

  rep.well_defined = true;
  for (int id = 0; id < 2 * genus && rep.well_defined; ++id) {
    Element yh = y_map(wedge_omega(label_of_id(id, genus), genus));
    for (int j = 0; j < tt.size(); ++j) {
      if (!nf_zero(bracket(yh, y_map_triple(tt.triple(j), genus)), modi)) {
        rep.well_defined = false;
        break;
      }
    }
  }

  std::vector<SparseVec> cols;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      Element br = bracket(y_map_triple(tt.triple(complement[a]), genus),
                           y_map_triple(tt.triple(complement[b]), genus));
      cols.push_back(qb.normal_form(br));
    }
  MapAnalysis an = analyze_map(cols, static_cast<int>(qb.basis.size()));
  rep.image_dim = an.rank;
  rep.kernel_dim = static_cast<int>(an.kernel.size());

  Echelon cls = sp_closure_wedge2_mod_h({relation_r1(genus)}, genus, tt, hspan, complement);
  rep.closure_dim = cls.rank();
  Echelon ker;
  for (const auto& v : an.kernel) ker.insert(v);
  rep.kernel_matches = rep.kernel_dim == rep.closure_dim && subspace_equal(ker, cls);
  return rep;
}

}  // namespace sjd
