#pragma once

#include <stdexcept>
#include <string>

namespace sjd {

struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Resource ceilings for quotient builds. The defaults cover every stock
// verification; the CLI and environment can raise them.
struct Caps {
  int max_degree = 3;
  int max_genus = 6;
  long max_rows = 200000;
  int ordered_max_degree = 2;
  int ordered_max_genus = 3;
  int canon_max_vertices = 8;
};

struct Config {
  Caps caps;
  int threads = 1;
  std::string cache_dir;  // empty = no disk cache
  static Config& get();
};

}  // namespace sjd
