#include "sjd/symplectic.hpp"

#include <cstdlib>
#include <stdexcept>

#include "sjd/config.hpp"

namespace sjd {

std::string Label::str() const {
  switch (kind) {
    case LabelKind::Alpha: return "a" + std::to_string(index);
    case LabelKind::Beta: return "b" + std::to_string(index);
    case LabelKind::Omega: return "w";
    case LabelKind::Open: return "_";
  }
  return "?";
}

HVector hvec(const Label& l) {
  HVector v;
  v[l] = 1;
  return v;
}

void hvec_add(HVector& v, const Label& l, const Rat& c) {
  if (c == 0) return;
  auto it = v.find(l);
  if (it == v.end()) {
    v.emplace(l, c);
  } else {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

int omega_basis(const Label& u, const Label& v) {
  if (!u.is_basis() || !v.is_basis()) throw std::invalid_argument("omega needs basis labels");
  if (u.index != v.index) return 0;
  if (u.kind == LabelKind::Alpha && v.kind == LabelKind::Beta) return 1;
  if (u.kind == LabelKind::Beta && v.kind == LabelKind::Alpha) return -1;
  return 0;
}

Rat omega_form(const HVector& u, const HVector& v, int genus) {
  Rat acc = 0;
  for (const auto& [lu, cu] : u) {
    if (lu.index > genus) throw std::out_of_range("label index exceeds genus");
    for (const auto& [lv, cv] : v) {
      if (lv.index > genus) throw std::out_of_range("label index exceeds genus");
      int w = omega_basis(lu, lv);
      if (w != 0) acc += cu * cv * w;
    }
  }
  return acc;
}

std::vector<std::pair<Label, Label>> omega_bivector(int genus) {
  std::vector<std::pair<Label, Label>> out;
  out.reserve(genus);
  for (int i = 1; i <= genus; ++i) out.emplace_back(Label::alpha(i), Label::beta(i));
  return out;
}

std::string SpGenerator::str() const {
  switch (kind) {
    case Kind::X: return "X" + std::to_string(i) + "," + std::to_string(j);
    case Kind::Y: return "Y" + std::to_string(i) + "," + std::to_string(j);
    case Kind::Z: return "Z" + std::to_string(i) + "," + std::to_string(j);
    case Kind::U: return "U" + std::to_string(i);
    case Kind::V: return "V" + std::to_string(i);
    case Kind::H: return "H" + std::to_string(i);
  }
  return "?";
}

std::vector<SpGenerator> sp_generators(int genus) {
  std::vector<SpGenerator> out;
  using K = SpGenerator::Kind;
  for (int i = 1; i <= genus; ++i)
    for (int j = 1; j <= genus; ++j)
      if (i != j) out.push_back({K::X, i, j});
  for (int i = 1; i <= genus; ++i)
    for (int j = i + 1; j <= genus; ++j) {
      out.push_back({K::Y, i, j});
      out.push_back({K::Z, i, j});
    }
  for (int i = 1; i <= genus; ++i) {
    out.push_back({K::U, i, 0});
    out.push_back({K::V, i, 0});
    out.push_back({K::H, i, 0});
  }
  return out;
}

std::vector<SpGenerator> sp_raising(int genus) {
  std::vector<SpGenerator> out;
  using K = SpGenerator::Kind;
  for (int i = 1; i <= genus; ++i)
    for (int j = i + 1; j <= genus; ++j) out.push_back({K::X, i, j});
  for (int i = 1; i <= genus; ++i)
    for (int j = i + 1; j <= genus; ++j) out.push_back({K::Y, i, j});
  for (int i = 1; i <= genus; ++i) out.push_back({K::U, i, 0});
  return out;
}

// Matrix conventions, with e_1..e_g = alpha, e_{g+1}..e_{2g} = beta:
//   X_{i,j} = E_{i,j} - E_{g+j,g+i}
//   Y_{i,j} = E_{i,g+j} + E_{j,g+i}
//   Z_{i,j} = E_{g+i,j} + E_{g+j,i}
//   U_i    = E_{i,g+i},  V_i = E_{g+i,i},  H_i = E_{i,i} - E_{g+i,g+i}
LabelImage sp_act(const SpGenerator& gen, const Label& l, int genus) {
  using K = SpGenerator::Kind;
  if (!l.is_basis()) return {0, l};  // omega-vertices and open slots are fixed
  if (l.index > genus || gen.i > genus || gen.j > genus)
    throw std::out_of_range("sp_act: index exceeds genus");
  bool alpha = l.kind == LabelKind::Alpha;
  int n = l.index;
  switch (gen.kind) {
    case K::X:
      if (alpha && n == gen.j) return {1, Label::alpha(gen.i)};
      if (!alpha && n == gen.i) return {-1, Label::beta(gen.j)};
      return {0, l};
    case K::Y:
      if (!alpha && n == gen.j) return {1, Label::alpha(gen.i)};
      if (!alpha && n == gen.i) return {1, Label::alpha(gen.j)};
      return {0, l};
    case K::Z:
      if (alpha && n == gen.j) return {1, Label::beta(gen.i)};
      if (alpha && n == gen.i) return {1, Label::beta(gen.j)};
      return {0, l};
    case K::U:
      if (!alpha && n == gen.i) return {1, Label::alpha(gen.i)};
      return {0, l};
    case K::V:
      if (alpha && n == gen.i) return {1, Label::beta(gen.i)};
      return {0, l};
    case K::H:
      if (n == gen.i) return {alpha ? 1 : -1, l};
      return {0, l};
  }
  return {0, l};
}

std::vector<int> weight_of(const Label& l, int genus) {
  std::vector<int> w(genus, 0);
  if (l.is_basis()) {
    if (l.index > genus) throw std::out_of_range("label index exceeds genus");
    w[l.index - 1] = l.kind == LabelKind::Alpha ? 1 : -1;
  }
  return w;
}

Config& Config::get() {
  static Config cfg = [] {
    Config c;
    if (const char* v = std::getenv("SJD_MAX_DEGREE")) c.caps.max_degree = std::atoi(v);
    if (const char* v = std::getenv("SJD_MAX_GENUS")) c.caps.max_genus = std::atoi(v);
    if (const char* v = std::getenv("SJD_MAX_ROWS")) c.caps.max_rows = std::atol(v);
    if (const char* v = std::getenv("SJD_THREADS")) c.threads = std::atoi(v);
    if (const char* v = std::getenv("SJD_CACHE_DIR")) c.cache_dir = v;
    return c;
  }();
  return cfg;
}

}  // namespace sjd
