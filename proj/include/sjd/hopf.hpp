#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sjd/element.hpp"

namespace sjd {

// Ordered concatenation product: disjoint union with the right factor's
// external vertices declared larger.
Element ordered_product(const Element& x, const Element& y);

// Star product: sum over partial matchings of the two leg sets, each glued
// pair weighted by omega of its labels, a k-pair matching by 1/2^k.
Element star(const Element& x, const Element& y);

// Commutator; only odd matchings survive, with weight 1/2^(k-1).
Element bracket(const Element& x, const Element& y);

// Symmetrization: average of all orderings of each diagram's legs.
Element chi(const Element& x);

// Inverse symmetrization: sum over partial position-pairings with omega
// weights and 1/2^p, orders forgotten.
Element chi_inv(const Element& x);

// Coproduct: split into families of connected components; component orders
// are induced. Keys are canonical; the pair (left, right) indexes the tensor.
using TensorElement = std::map<std::pair<std::string, std::string>, Rat>;
TensorElement coproduct(const Element& x);
Rat counit(const Element& x);
Element antipode(const Element& x);
bool is_primitive(const Element& x);

std::pair<Element, Element> loop_split(const Element& x);  // (even, odd)
Element tree_reduce(const Element& x);                     // drops loop degree >= 1

}  // namespace sjd
