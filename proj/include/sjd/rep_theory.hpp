#pragma once

#include <map>
#include <string>
#include <vector>

#include "sjd/rational.hpp"

namespace sjd {

// Partition: weakly decreasing positive parts.
using Partition = std::vector<int>;
// Irrep label for sp_2g: multiplicities of the fundamental weights.
using IrrepLabel = std::vector<int>;

Partition label_to_partition(const IrrepLabel& a);
IrrepLabel partition_to_label(const Partition& p, int genus);
std::string label_str(const IrrepLabel& a);

// Littlewood-Richardson coefficient c^lambda_{mu,nu} by lattice-word
// skew tableau enumeration.
long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

// GL_n dimension of the Schur module, hook content formula.
Rat schur_dim(const Partition& lambda, int n);

// sp_2g dimension by the Weyl formula over C-type positive roots.
Rat sp_dim(const IrrepLabel& a, int genus);

// Restriction of the GL_{2g} Schur module to Sp_{2g}: multiplicities over
// even-row-multiplicity partitions, with the column modification rule for
// labels longer than g. Validated against the dimension identity.
std::map<IrrepLabel, long> littlewood_restriction(const Partition& lambda, int genus);

struct L2L3Report {
  std::map<IrrepLabel, long> computed;
  Rat total_dim;          // sum multiplicity * sp_dim
  Rat expected_dim;       // binom(binom(2g,3), 2)
  bool dims_match = false;
};
L2L3Report verify_l2l3(int genus);

// Expected decomposition rows for genus 3..6.
std::map<IrrepLabel, long> l2l3_reference(int genus);

}  // namespace sjd
