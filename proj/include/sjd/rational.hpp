#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sjd {

// Exact arbitrary-precision rationals. The whole kernel is float-free.
using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// mpq_class(p, q) does not canonicalize; always build fractions through this.
inline Rat frac(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("bad rational literal: " + s);
  }
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace sjd
