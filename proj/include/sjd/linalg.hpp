#pragma once

#include <map>
#include <vector>

#include "sjd/rational.hpp"

namespace sjd {

// Sparse rational vector: (index, coefficient) pairs, sorted, no zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sv_add(const SparseVec& a, const SparseVec& b);
void sv_axpy(SparseVec& y, const Rat& a, const SparseVec& x);  // y += a*x
void sv_scale(SparseVec& v, const Rat& a);
SparseVec sv_from_map(const std::map<int, Rat>& m);
Rat sv_coeff(const SparseVec& v, int idx);

// Row echelon set over column indices. Every stored row is normalized to a
// unit pivot at its minimal index; pivots are pairwise distinct. reduce()
// eliminates every pivot column from a vector, which yields the unique
// representative of its coset supported on non-pivot columns.
class Echelon {
 public:
  void reduce(SparseVec& v) const;
  // Reduces, inserts if nonzero. Returns true if the rank grew.
  bool insert(SparseVec v);
  bool contains(const SparseVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

bool subspace_equal(const Echelon& a, const Echelon& b);

// Exact analysis of the map sending domain basis vector j to columns[j].
struct MapAnalysis {
  int rank = 0;
  std::vector<SparseVec> kernel;  // echelonized, domain coordinates
  Echelon image;                  // codomain coordinates
};
MapAnalysis analyze_map(const std::vector<SparseVec>& columns, int codomain_dim);

}  // namespace sjd
