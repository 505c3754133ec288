#include "sjd/rep_theory.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sjd {

namespace {

int part(const Partition& p, int i) { return i < static_cast<int>(p.size()) ? p[i] : 0; }

int psize(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool contains(const Partition& big, const Partition& small) {
  for (size_t i = 0; i < small.size(); ++i)
    if (part(big, static_cast<int>(i)) < small[i]) return false;
  return true;
}

void check_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1]) throw std::invalid_argument("partition must be weakly decreasing");
  }
}

}  // namespace

Partition label_to_partition(const IrrepLabel& a) {
  Partition p;
  int g = static_cast<int>(a.size());
  for (int i = 0; i < g; ++i) {
    int v = 0;
    for (int j = i; j < g; ++j) v += a[j];
    if (v > 0) p.push_back(v);
  }
  return p;
}

IrrepLabel partition_to_label(const Partition& p, int genus) {
  check_partition(p);
  if (static_cast<int>(p.size()) > genus)
    throw std::invalid_argument("partition has more parts than the genus");
  IrrepLabel a(genus, 0);
  for (int i = 0; i < genus; ++i) a[i] = part(p, i) - part(p, i + 1);
  return a;
}

std::string label_str(const IrrepLabel& a) {
  std::string s;
  bool any = false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (any) s += "+";
    if (a[i] != 1) s += std::to_string(a[i]) + "*";
    s += "w" + std::to_string(i + 1);
    any = true;
  }
  return any ? "G[" + s + "]" : "G[0]";
}

long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
  check_partition(mu);
  check_partition(nu);
  check_partition(lambda);
  if (psize(mu) + psize(nu) != psize(lambda)) return 0;
  if (!contains(lambda, mu)) return 0;
  if (psize(nu) == 0) return 1;

  // Fill lambda/mu with content nu, semistandard, reverse reading word a
  // lattice word. Cells row by row, left to right; recursion per cell.
  int rows = static_cast<int>(lambda.size());
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(lambda[r], 0);
  std::vector<int> remaining(nu.begin(), nu.end());
  // counts[v] = how many entries v+1 placed so far *to the right/up* in the
  // reverse reading word; we fill rows top to bottom, each row right to left
  // contributes to the word; enforcing the lattice property incrementally
  // requires scanning cells in reverse reading order.
  struct Cell {
    int r, c;
  };
  std::vector<Cell> order;  // reverse reading order: rows top-down, right-to-left
  for (int r = 0; r < rows; ++r)
    for (int c = lambda[r] - 1; c >= part(mu, r); --c) order.push_back({r, c});

  long count = 0;
  int nvals = static_cast<int>(nu.size());
  std::vector<int> placed(nvals, 0);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == order.size()) {
      ++count;
      return;
    }
    auto [r, c] = order[k];
    for (int v = 1; v <= nvals; ++v) {
      if (placed[v - 1] == nu[v - 1]) continue;
      // lattice: after placing v, #v <= #(v-1)
      if (v > 1 && placed[v - 1] + 1 > placed[v - 2]) continue;
      // semistandard within the skew shape
      if (c + 1 < lambda[r] && fill[r][c + 1] != 0 && v > fill[r][c + 1]) continue;  // row weakly increasing
      if (r > 0 && c < lambda[r - 1] && c >= part(mu, r - 1)) {
        if (fill[r - 1][c] != 0 && v <= fill[r - 1][c]) continue;  // column strict
      } else if (r > 0 && c < part(mu, r - 1)) {
        // cell above is in mu: no constraint from it
      }
      fill[r][c] = v;
      ++placed[v - 1];
      rec(k + 1);
      --placed[v - 1];
      fill[r][c] = 0;
    }
  };
  rec(0);
  return count;
}

Rat schur_dim(const Partition& lambda, int n) {
  check_partition(lambda);
  if (static_cast<int>(lambda.size()) > n) return 0;
  Rat dim = 1;
  int rows = static_cast<int>(lambda.size());
  Partition conj;
  if (rows > 0) {
    conj.assign(lambda[0], 0);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < lambda[r]; ++c) ++conj[c];
  }
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      int hook = (lambda[r] - c) + (conj[c] - r) - 1;
      dim *= frac(n + c - r, hook);
    }
  return dim;
}

Rat sp_dim(const IrrepLabel& a, int genus) {
  if (static_cast<int>(a.size()) != genus) throw std::invalid_argument("label length != genus");
  Partition lambda = label_to_partition(a);
  std::vector<Rat> l(genus), rho(genus);
  for (int i = 0; i < genus; ++i) {
    rho[i] = genus - i;
    l[i] = part(lambda, i) + genus - i;
  }
  Rat dim = 1;
  for (int i = 0; i < genus; ++i) {
    dim *= l[i] / rho[i];  // the 2L_i roots
    for (int j = i + 1; j < genus; ++j) {
      dim *= (l[i] - l[j]) / (rho[i] - rho[j]);
      dim *= (l[i] + l[j]) / (rho[i] + rho[j]);
    }
  }
  return dim;
}

namespace {

// Partitions of n with at most maxlen parts, each part <= maxpart.
void partitions_rec(int n, int maxpart, int maxlen, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (maxlen == 0) return;
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, maxlen - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions(int n, int maxpart, int maxlen) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, maxpart, maxlen, cur, out);
  return out;
}

bool even_row_multiplicities(const Partition& p) {
  for (size_t i = 0; i < p.size();) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

// Column modification for sp_2g labels with more than g rows: replace the
// first column length p by 2g + 2 - p with a sign, or annihilate.
struct Modified {
  int sign = 0;  // 0 = the character vanishes
  Partition p;
};

Modified modify_label(Partition p, int genus) {
  int sign = 1;
  while (static_cast<int>(p.size()) > genus) {
    int col = static_cast<int>(p.size());
    int newcol = 2 * genus + 2 - col;
    if (newcol == col || newcol < 0) return {0, {}};
    // second column length
    int col2 = 0;
    for (int v : p)
      if (v >= 2) ++col2;
    if (newcol < col2) return {0, {}};
    // rebuild: decrement every row (removing the first column), then add a
    // column of height newcol
    Partition q;
    for (int v : p)
      if (v - 1 > 0) q.push_back(v - 1);
    for (int r = 0; r < newcol; ++r) {
      if (r < static_cast<int>(q.size()))
        ++q[r];
      else
        q.push_back(1);
    }
    std::sort(q.begin(), q.end(), std::greater<int>());
    p = q;
    sign = -sign;
  }
  return {sign, p};
}

}  // namespace

std::map<IrrepLabel, long> littlewood_restriction(const Partition& lambda, int genus) {
  check_partition(lambda);
  std::map<IrrepLabel, long> out;
  int n = psize(lambda);
  int rows = static_cast<int>(lambda.size());
  for (int esize = 0; esize <= n; esize += 2) {
    for (const auto& eta : partitions(esize, lambda.empty() ? 0 : lambda[0], rows)) {
      if (!even_row_multiplicities(eta)) continue;
      for (const auto& mu : partitions(n - esize, lambda.empty() ? 0 : lambda[0], rows)) {
        long c = lr_coefficient(eta, mu, lambda);
        if (c == 0) continue;
        Modified m = modify_label(mu, genus);
        if (m.sign == 0) continue;
        IrrepLabel a = partition_to_label(m.p, genus);
        out[a] += m.sign * c;
        if (out[a] == 0) out.erase(a);
      }
    }
  }
  for (const auto& [a, mult] : out)
    if (mult < 0) throw std::logic_error("negative multiplicity after modification");
  // dimension audit
  Rat total = 0;
  for (const auto& [a, mult] : out) total += Rat(mult) * sp_dim(a, genus);
  if (total != schur_dim(lambda, 2 * genus))
    throw std::logic_error("restriction dimensions do not match the Schur dimension");
  return out;
}

L2L3Report verify_l2l3(int genus) {
  L2L3Report rep;
  auto add = [&](const std::map<IrrepLabel, long>& part) {
    for (const auto& [a, m] : part) rep.computed[a] += m;
  };
  add(littlewood_restriction(Partition{1, 1, 1, 1, 1, 1}, genus));
  add(littlewood_restriction(Partition{2, 2, 1, 1}, genus));
  rep.total_dim = 0;
  for (const auto& [a, m] : rep.computed) rep.total_dim += Rat(m) * sp_dim(a, genus);
  Rat n3 = schur_dim(Partition{1, 1, 1}, 2 * genus);  // binom(2g,3)
  rep.expected_dim = n3 * (n3 - 1) / 2;
  rep.dims_match = rep.total_dim == rep.expected_dim;
  return rep;
}

std::map<IrrepLabel, long> l2l3_reference(int genus) {
  if (genus < 3 || genus > 6) throw std::invalid_argument("reference rows cover genus 3..6");
  auto L = [&](std::initializer_list<std::pair<int, int>> ws) {
    IrrepLabel a(genus, 0);
    for (auto [i, m] : ws) a[i - 1] = m;
    return a;
  };
  std::map<IrrepLabel, long> out;
  out[L({})] = 2;
  out[L({{2, 1}})] = genus == 3 ? 2 : 3;
  out[L({{2, 2}})] = 1;
  out[L({{1, 1}, {3, 1}})] = 1;
  if (genus >= 4) {
    out[L({{4, 1}})] = genus >= 5 ? 2 : 1;
    out[L({{2, 1}, {4, 1}})] = 1;
  }
  if (genus >= 6) out[L({{6, 1}})] = 1;
  return out;
}

}  // namespace sjd
