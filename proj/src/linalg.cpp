#include "sjd/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sjd {

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      Rat c = a[i].second + b[j].second;
      if (c != 0) r.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

void sv_axpy(SparseVec& y, const Rat& a, const SparseVec& x) {
  if (a == 0 || x.empty()) return;
  SparseVec r;
  r.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      r.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      r.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Rat c = y[i].second + a * x[j].second;
      if (c != 0) r.emplace_back(y[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  y = std::move(r);
}

void sv_scale(SparseVec& v, const Rat& a) {
  if (a == 0) {
    v.clear();
    return;
  }
  for (auto& [i, c] : v) c *= a;
}

SparseVec sv_from_map(const std::map<int, Rat>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto& [i, c] : m)
    if (c != 0) v.emplace_back(i, c);
  return v;
}

Rat sv_coeff(const SparseVec& v, int idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != v.end() && it->first == idx) return it->second;
  return 0;
}

void Echelon::reduce(SparseVec& v) const {
  size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Rat c = -v[pos].second;
    sv_axpy(v, c, it->second);
    // entries before pos are untouched (their indices have no pivot row)
  }
}

bool Echelon::insert(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  Rat inv = 1 / v.front().second;
  sv_scale(v, inv);
  int pivot = v.front().first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool Echelon::contains(const SparseVec& v) const {
  SparseVec w = v;
  reduce(w);
  return w.empty();
}

bool subspace_equal(const Echelon& a, const Echelon& b) {
  if (a.rank() != b.rank()) return false;
  for (const auto& [p, row] : a.rows())
    if (!b.contains(row)) return false;
  return true;
}

MapAnalysis analyze_map(const std::vector<SparseVec>& columns, int codomain_dim) {
  MapAnalysis out;
  Echelon ech;  // rows over [codomain | augmented domain] coordinates
  for (size_t j = 0; j < columns.size(); ++j) {
    SparseVec row = columns[j];
    for (const auto& [i, c] : row)
      if (i < 0 || i >= codomain_dim) throw std::out_of_range("analyze_map: bad coordinate");
    row.emplace_back(codomain_dim + static_cast<int>(j), 1);
    ech.insert(std::move(row));
  }
  for (const auto& [pivot, row] : ech.rows()) {
    if (pivot < codomain_dim) {
      SparseVec img;
      for (const auto& [i, c] : row)
        if (i < codomain_dim) img.emplace_back(i, c);
      out.image.insert(std::move(img));
      ++out.rank;
    } else {
      SparseVec ker;
      for (const auto& [i, c] : row) ker.emplace_back(i - codomain_dim, c);
      out.kernel.push_back(std::move(ker));
    }
  }
  return out;
}

}  // namespace sjd
