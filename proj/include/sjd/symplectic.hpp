#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "sjd/rational.hpp"

namespace sjd {

// Leg labels. Alpha/Beta index the symplectic basis (a1..aG, b1..bG),
// Omega is the formal bivector symbol, Open is an unlabeled slot used
// while enumerating topologies.
enum class LabelKind : unsigned char { Alpha = 1, Beta = 2, Omega = 3, Open = 4 };

struct Label {
  LabelKind kind = LabelKind::Open;
  int index = 0;  // 1..g for Alpha/Beta, 0 otherwise

  auto operator<=>(const Label&) const = default;

  bool is_basis() const { return kind == LabelKind::Alpha || kind == LabelKind::Beta; }

  static Label alpha(int i) { return {LabelKind::Alpha, i}; }
  static Label beta(int i) { return {LabelKind::Beta, i}; }
  static Label omega() { return {LabelKind::Omega, 0}; }
  static Label open() { return {LabelKind::Open, 0}; }

  std::string str() const;
};

// Finitely supported rational combination of basis labels.
using HVector = std::map<Label, Rat>;

HVector hvec(const Label& l);
void hvec_add(HVector& v, const Label& l, const Rat& c);

// omega(alpha_i, beta_j) = delta_ij; alpha-alpha and beta-beta pair to 0.
int omega_basis(const Label& u, const Label& v);
Rat omega_form(const HVector& u, const HVector& v, int genus);

// The bivector dual to the form: one (alpha_i, beta_i) pair per handle.
std::vector<std::pair<Label, Label>> omega_bivector(int genus);

// Chevalley-style generators of sp_2g acting on the basis-coordinate
// convention (alpha_1..alpha_g, beta_1..beta_g) = coordinates 1..2g.
struct SpGenerator {
  enum class Kind { X, Y, Z, U, V, H } kind;
  int i = 0;
  int j = 0;  // unused for U/V/H
  std::string str() const;
};

std::vector<SpGenerator> sp_generators(int genus);
// Raising operators: X_{i<j}, Y_{i,j}, U_i.
std::vector<SpGenerator> sp_raising(int genus);

// Action of a generator on one basis label; coeff 0 means the label dies.
// Omega and Open labels are fixed (coefficient 0 contribution).
struct LabelImage {
  int coeff = 0;  // -1, 0, +1 for the elementary generators
  Label label;
};
LabelImage sp_act(const SpGenerator& gen, const Label& l, int genus);

// alpha_i -> +L_i, beta_i -> -L_i; omega/open carry weight 0.
std::vector<int> weight_of(const Label& l, int genus);

}  // namespace sjd
