#pragma once

#include <stdexcept>
#include <string>

#include "sjd/element.hpp"
#include "sjd/hopf.hpp"

namespace sjd {

struct parse_error : std::runtime_error {
  size_t offset;
  parse_error(size_t off, const std::string& what)
      : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct ExprValue {
  enum class Kind { Elem, Tensor } kind = Kind::Elem;
  Element elem;
  TensorElement tensor;
};

// Grammar: linear combinations of Theta, Y[..], H[..;..], Phi[..], G{..}
// and the operators star, bracket, chi, chiinv, delta, antipode, tree.
// Labels: a<i>, b<i>, w, or rational linear combinations like 3/2*a1-b2.
ExprValue parse_expression(const std::string& text, int genus);
Element parse_element(const std::string& text, int genus);

std::string element_to_string(const Element& e);
std::string tensor_to_string(const TensorElement& t, int genus);
std::string diagram_to_string(const Diagram& d);

}  // namespace sjd
