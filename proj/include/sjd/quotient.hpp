#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sjd/element.hpp"
#include "sjd/linalg.hpp"
#include "sjd/symplectic.hpp"

namespace sjd {

enum class Family { A, AOrdered, AModI, AOrderedModI };
enum class LoopRestrict { None, Even, Odd, Exact, Tree };

struct SpaceTag {
  Family family = Family::A;
  bool connected = true;
  int genus = 0;
  int degree = 1;
  LoopRestrict loop = LoopRestrict::None;
  int loop_k = 0;

  std::string str() const;
  auto tie() const { return std::tuple(family, connected, genus, degree, loop, loop_k); }
  bool operator<(const SpaceTag& o) const { return tie() < o.tie(); }
  bool ordered() const { return family == Family::AOrdered || family == Family::AOrderedModI; }
};

// Echelonized relation data for one (space, genus, degree) triple.
struct QuotientBasis {
  SpaceTag tag;
  std::vector<std::string> basis;  // free span, sorted canonical keys
  std::vector<int> loop_of;        // loop degree per column
  Echelon rel;                     // relation rows over columns
  int dim = 0;
  long relation_row_count = 0;

  int col(const std::string& key) const;  // -1 if absent
  SparseVec vec_of(const Element& e) const;
  SparseVec normal_form(const Element& e) const;
  Element element_of_vec(const SparseVec& v) const;
  // Columns that survive reduction (non-pivot), the coordinates of the quotient.
  std::vector<int> free_columns() const;
};

const QuotientBasis& quotient_basis(const SpaceTag& tag);  // memoized
void clear_quotient_cache();

// Relation rows for one basis diagram, in column coordinates of qb.
std::vector<SparseVec> ihx_rows_for(const QuotientBasis& qb, const std::string& key);
std::vector<SparseVec> stu_rows_for(const QuotientBasis& qb, const std::string& key);

bool nf_zero(const Element& e, const SpaceTag& tag);
// Splits by degree, checking each graded piece; degrees outside [1, cap] must vanish formally.
bool nf_zero_graded(const Element& e, Family family, bool connected);

// Infinitesimal symplectic action as a derivation over the legs.
Element sp_act_element(const SpGenerator& gen, const Element& e);

// Smallest subspace of the quotient containing the seeds and closed under
// every generator derivation; coordinates are quotient columns of `tag`.
Echelon sp_closure_elements(const std::vector<Element>& seeds, const SpaceTag& tag);

struct WeightReport {
  bool homogeneous = false;
  std::vector<int> weight;
  bool highest_weight = false;
};
WeightReport weight_and_hwv_check(const Element& e, const SpaceTag& tag);

}  // namespace sjd
