#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ainf {

// All coefficients in this library are exact rationals. GMP keeps them
// canonical (reduced, positive denominator), so structural equality of
// containers is mathematical equality.
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Parses "p", "-p", or "p/q".
inline Rat rat_from_string(const std::string& s) {
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace ainf
