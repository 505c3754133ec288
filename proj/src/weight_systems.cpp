#include "sjd/weight_systems.hpp"

#include <functional>
#include <stdexcept>

#include "sjd/torelli.hpp"

#include "json.hpp"

namespace sjd {

MetrizedLie MetrizedLie::abelian(int n) {
  MetrizedLie L;
  L.dim = n;
  L.structure.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, 0)));
  L.form.assign(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) L.form[i][i] = 1;
  return L;
}

MetrizedLie MetrizedLie::sl2() {
  // basis (h, e, f): [h,e]=2e, [h,f]=-2f, [e,f]=h; trace form of the
  // 2-dimensional representation: k(h,h)=2, k(e,f)=k(f,e)=1.
  MetrizedLie L;
  L.dim = 3;
  L.structure.assign(3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, 0)));
  auto set = [&](int i, int j, int k, const Rat& c) {
    L.structure[i][j][k] = c;
    L.structure[j][i][k] = -c;
  };
  set(0, 1, 1, 2);   // [h,e] = 2e
  set(0, 2, 2, -2);  // [h,f] = -2f
  set(1, 2, 0, 1);   // [e,f] = h
  L.form.assign(3, std::vector<Rat>(3, 0));
  L.form[0][0] = 2;
  L.form[1][2] = 1;
  L.form[2][1] = 1;
  return L;
}

MetrizedLie MetrizedLie::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  MetrizedLie L;
  L.dim = j.at("dim").get<int>();
  L.structure.assign(L.dim, std::vector<std::vector<Rat>>(L.dim, std::vector<Rat>(L.dim, 0)));
  for (const auto& row : j.at("brackets")) {
    int a = row.at(0).get<int>();
    int b = row.at(1).get<int>();
    for (const auto& term : row.at(2)) {
      int k = term.at(0).get<int>();
      Rat c = rat_parse(term.at(1).get<std::string>());
      L.structure[a][b][k] = c;
      L.structure[b][a][k] = -c;
    }
  }
  L.form.assign(L.dim, std::vector<Rat>(L.dim, 0));
  const auto& fm = j.at("form");
  for (int a = 0; a < L.dim; ++a)
    for (int b = 0; b < L.dim; ++b) {
      const auto& v = fm.at(a).at(b);
      L.form[a][b] = v.is_string() ? rat_parse(v.get<std::string>()) : Rat(v.get<long>());
    }
  return L;
}

std::optional<std::string> MetrizedLie::validate() const {
  int n = dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (structure[i][j][k] != -structure[j][i][k])
          return "antisymmetry fails at [" + std::to_string(i) + "," + std::to_string(j) + "]";
  // Jacobi: [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Rat s = 0;
          for (int r = 0; r < n; ++r) {
            s += structure[i][j][r] * structure[r][k][m];
            s += structure[j][k][r] * structure[r][i][m];
            s += structure[k][i][r] * structure[r][j][m];
          }
          if (s != 0)
            return "Jacobi fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")";
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (form[i][j] != form[j][i]) return "form is not symmetric";
  // invariance: k([i,j],m) = k(i,[j,m])
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        Rat lhs = 0, rhs = 0;
        for (int r = 0; r < n; ++r) {
          lhs += structure[i][j][r] * form[r][m];
          rhs += structure[j][m][r] * form[i][r];
        }
        if (lhs != rhs) return "form is not invariant";
      }
  // nondegeneracy via elimination
  std::vector<std::vector<Rat>> m = form;
  int rank = 0;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int cc = 0; cc < n; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  if (rank != n) return "form is degenerate";
  return std::nullopt;
}

std::vector<std::vector<Rat>> MetrizedLie::form_inverse() const {
  int n = dim;
  std::vector<std::vector<Rat>> m = form;
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("degenerate form");
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    Rat d = m[c][c];
    for (int cc = 0; cc < n; ++cc) {
      m[c][cc] /= d;
      inv[c][cc] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int cc = 0; cc < n; ++cc) {
        m[r][cc] -= f * m[c][cc];
        inv[r][cc] -= f * inv[c][cc];
      }
    }
  }
  return inv;
}

namespace {

void poly_add_term(Poly& p, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) poly_add_term(r, mono_mul(ma, mb), ca * cb);
  return r;
}

Poly poly_derive(const Poly& a, int var) {
  Poly r;
  for (const auto& [m, c] : a) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].first != var) continue;
      Monomial d = m;
      Rat coeff = c * m[i].second;
      if (--d[i].second == 0) d.erase(d.begin() + i);
      poly_add_term(r, d, coeff);
    }
  }
  return r;
}

PolyT polyt_add(const PolyT& a, const PolyT& b) {
  PolyT r = a;
  for (const auto& [t, p] : b)
    for (const auto& [m, c] : p) poly_add_term(r[t], m, c);
  for (auto it = r.begin(); it != r.end();)
    it = it->second.empty() ? r.erase(it) : std::next(it);
  return r;
}

PolyT polyt_scale(const PolyT& a, const Rat& c) {
  PolyT r;
  if (c == 0) return r;
  for (const auto& [t, p] : a)
    for (const auto& [m, v] : p) poly_add_term(r[t], m, v * c);
  return r;
}

PolyT polyt_mul(const PolyT& a, const PolyT& b) {
  PolyT r;
  for (const auto& [ta, pa] : a)
    for (const auto& [tb, pb] : b) {
      Poly prod = poly_mul(pa, pb);
      for (const auto& [m, c] : prod) poly_add_term(r[ta + tb], m, c);
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.empty() ? r.erase(it) : std::next(it);
  return r;
}

bool polyt_zero(const PolyT& a) {
  for (const auto& [t, p] : a)
    if (!p.empty()) return false;
  return true;
}

int ws_var(int lie_index, const Label& l, int genus) {
  return lie_index * 2 * genus + label_id(l, genus);
}

PolyT weight_system(const Diagram& d, const MetrizedLie& lie, int genus) {
  for (const auto& l : d.legs)
    if (!l.is_basis()) throw std::invalid_argument("weight_system: expand omega labels first");
  int n = lie.dim;
  auto K = lie.form_inverse();
  // B(a,b,c) = kappa([e_a, e_b], e_c)
  std::vector<Rat> B(static_cast<size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Rat s = 0;
        for (int r = 0; r < n; ++r) s += lie.structure[a][b][r] * lie.form[r][c];
        B[(static_cast<size_t>(a) * n + b) * n + c] = s;
      }

  // One Lie index per port: every edge (including leg edges) carries a copy
  // of K, every internal vertex contracts against B, legs become variables.
  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < d.ports(); ++p)
    if (d.mate[p] > p) edges.emplace_back(p, d.mate[p]);
  std::vector<int> assign(d.ports(), -1);
  Poly result;
  std::function<void(size_t, Rat)> rec = [&](size_t ei, Rat w) {
    if (ei == edges.size()) {
      for (int v = 0; v < d.nv; ++v) {
        Rat f =
            B[(static_cast<size_t>(assign[3 * v]) * n + assign[3 * v + 1]) * n + assign[3 * v + 2]];
        if (f == 0) return;
        w *= f;
      }
      Monomial m;
      std::map<int, int> exps;
      for (int i = 0; i < d.nlegs(); ++i) ++exps[ws_var(assign[d.leg_port(i)], d.legs[i], genus)];
      for (const auto& [v, e] : exps) m.emplace_back(v, e);
      poly_add_term(result, m, w);
      return;
    }
    auto [p, q] = edges[ei];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (K[a][b] == 0) continue;
        assign[p] = a;
        assign[q] = b;
        rec(ei + 1, w * K[a][b]);
      }
    assign[p] = assign[q] = -1;
  };
  rec(0, 1);
  PolyT out;
  if (!result.empty()) out[d.nv] = std::move(result);
  return out;
}

PolyT weight_system(const Element& e, const MetrizedLie& lie) {
  PolyT out;
  for (const auto& [k, c] : e.terms) {
    PolyT w = weight_system(decode_key(k, e.ordered), lie, e.genus);
    out = polyt_add(out, polyt_scale(w, c));
  }
  return out;
}

VarForm kappa_tensor_omega(const MetrizedLie& lie, int genus) {
  VarForm s;
  for (int a = 0; a < lie.dim; ++a)
    for (int b = 0; b < lie.dim; ++b) {
      if (lie.form[a][b] == 0) continue;
      for (int i = 1; i <= genus; ++i) {
        Label al = Label::alpha(i), be = Label::beta(i);
        s[{ws_var(a, al, genus), ws_var(b, be, genus)}] = lie.form[a][b];
        s[{ws_var(a, be, genus), ws_var(b, al, genus)}] = -lie.form[a][b];
      }
    }
  return s;
}

PolyT moyal_product(const PolyT& a, const PolyT& b, const VarForm& s) {
  // sum_l 1/(2^l l!) (sum_{ij} s_ij d_i (x) d_j)^l, evaluated at h = 1
  PolyT out;
  for (const auto& [ta, pa] : a)
    for (const auto& [tb, pb] : b) {
      std::vector<std::pair<Poly, Poly>> layer = {{pa, pb}};
      Rat lfact = 1;
      for (int l = 0;; ++l) {
        if (l > 0) lfact *= l;
        Rat coeff = Rat(1) / (lfact * (1L << l));
        bool any = false;
        for (const auto& [pl, pr] : layer) {
          Poly prod = poly_mul(pl, pr);
          for (const auto& [m, c] : prod) {
            poly_add_term(out[ta + tb], m, c * coeff);
            any = true;
          }
        }
        (void)any;
        // next layer
        std::vector<std::pair<Poly, Poly>> next;
        for (const auto& [pl, pr] : layer) {
          for (const auto& [vars, sv] : s) {
            Poly dl = poly_derive(pl, vars.first);
            if (dl.empty()) continue;
            Poly dr = poly_derive(pr, vars.second);
            if (dr.empty()) continue;
            for (auto& [m, c] : dl) c *= sv;
            next.emplace_back(std::move(dl), std::move(dr));
          }
        }
        if (next.empty()) break;
        layer = std::move(next);
      }
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

PolyT lie_derivation(const PolyT& p, const MetrizedLie& lie, int b, int genus) {
  PolyT out;
  for (const auto& [t, poly] : p) {
    for (const auto& [m, c] : poly) {
      for (size_t i = 0; i < m.size(); ++i) {
        int var = m[i].first;
        int a = var / (2 * genus);
        int lab = var % (2 * genus);
        for (int k = 0; k < lie.dim; ++k) {
          Rat sc = lie.structure[b][a][k];
          if (sc == 0) continue;
          Monomial d = m;
          Rat coeff = c * m[i].second * sc;
          if (--d[i].second == 0) d.erase(d.begin() + i);
          Monomial add{{k * 2 * genus + lab, 1}};
          poly_add_term(out[t], mono_mul(d, add), coeff);
        }
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace sjd
