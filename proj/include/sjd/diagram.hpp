#pragma once

#include <string>
#include <vector>

#include "sjd/symplectic.hpp"

namespace sjd {

// A Jacobi diagram as a half-edge structure. Ports 0..3*nv-1 are the slots
// of the trivalent vertices (vertex v owns 3v, 3v+1, 3v+2 in cyclic order);
// port 3*nv+i is leg i. `mate` is a fixed-point-free involution pairing all
// ports. In ordered diagrams leg i sits at position i of the total order.
struct Diagram {
  int nv = 0;
  std::vector<int> mate;
  std::vector<Label> legs;
  bool ordered = false;

  int ports() const { return 3 * nv + static_cast<int>(legs.size()); }
  int leg_port(int i) const { return 3 * nv + i; }
  bool is_leg_port(int p) const { return p >= 3 * nv; }
  int leg_index(int p) const { return p - 3 * nv; }
  int vertex_of(int p) const { return p / 3; }
  int slot_of(int p) const { return p % 3; }
  int nlegs() const { return static_cast<int>(legs.size()); }
  bool empty() const { return nv == 0 && legs.empty(); }

  void check() const;  // throws on malformed port structure
};

// Canonical representative of the AS-equivalence class. `key` is a
// deterministic byte encoding; diagrams related by a cyclic-order-preserving
// isomorphism share the key, a reversed vertex contributes sign -1, and
// `zero` flags diagrams with a sign-reversing automorphism.
struct Canon {
  std::string key;
  int sign = 1;
  bool zero = false;
};

Canon canonical(const Diagram& d);
Diagram decode_key(const std::string& key, bool ordered = false);
bool key_is_connected(const std::string& key);
int key_degree(const std::string& key);  // internal vertex count

int loop_degree(const Diagram& d);  // first Betti number
int loop_degree_key(const std::string& key);
int omega_count(const Diagram& d);
int omega_count_key(const std::string& key);

// Components in index order; each ordered component's leg positions are
// compressed to 0..e-1 preserving relative order.
std::vector<Diagram> split_components(const Diagram& d);
int component_count(const Diagram& d);
// Sub-diagram spanned by the selected components, legs keeping relative order.
Diagram take_components(const Diagram& d, const std::vector<bool>& take);

Diagram disjoint_union(const Diagram& a, const Diagram& b);

// Removes the paired legs and fuses their incident edges. With keep_order
// the surviving legs keep their relative order; otherwise order is dropped.
Diagram glue_legs(const Diagram& d, const std::vector<std::pair<int, int>>& leg_pairs,
                  bool keep_order = false);

// Convenience constructors matching the text grammar.
Diagram make_Y(const Label& x, const Label& y, const Label& z);
Diagram make_H(const Label& a, const Label& b, const Label& c, const Label& d);
Diagram make_Phi(const Label& x, const Label& y);
Diagram make_Theta();
Diagram make_strut(const Label& x, const Label& y);

enum class LabelSet { Basis, BasisPlusOmega };

// All canonical no-strut diagrams of the given internal degree with labels
// from the basis (AS-zero dropped), sorted by key. With BasisPlusOmega the
// legs may also carry the omega symbol; pure-strut omega components are not
// produced here (see omega module).
std::vector<std::string> enumerate_connected(int genus, int degree, LabelSet ls = LabelSet::Basis);
std::vector<std::string> enumerate_all(int genus, int degree, LabelSet ls = LabelSet::Basis);
// Orderings of the unordered enumeration.
std::vector<std::string> enumerate_ordered(int genus, int degree, bool connected);
// Unlabeled shapes (open legs) that admit at least one nonzero labeling.
std::vector<std::string> enumerate_shapes(int degree, bool connected);
std::string shape_of_key(const std::string& key);

}  // namespace sjd
