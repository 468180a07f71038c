#pragma once

#include <optional>
#include <stdexcept>

namespace ainf {

// Ambient ring data: number of variables, optional group weight structure
// (genus g gives the diagonal subgroup of SL(3) with (2g+1)-th roots of
// unity), and the maximum total degree retained by polynomial arithmetic.
struct RingConfig {
  int n = 3;
  std::optional<int> genus;
  int truncation_order = 12;

  RingConfig() = default;
  RingConfig(int n_, std::optional<int> genus_, int trunc)
      : n(n_), genus(genus_), truncation_order(trunc) {
    validate();
  }

  void validate() const {
    if (n < 1 || n > 16) throw std::invalid_argument("variable count must be in [1,16]");
    if (truncation_order < 1) throw std::invalid_argument("truncation order must be positive");
    if (genus) {
      if (*genus < 2) throw std::invalid_argument("genus must be >= 2");
      if (truncation_order < 2 * *genus + 2)
        throw std::invalid_argument("truncation order must be >= 2g+2 when genus is set");
    }
  }

  int group_order() const {
    if (!genus) throw std::logic_error("no group structure without genus");
    return 2 * *genus + 1;
  }

  bool compatible(const RingConfig& o) const {
    return n == o.n && genus == o.genus && truncation_order == o.truncation_order;
  }
};

// Character of the diagonal group G = (Z/(2g+1))^2 in SL(3). Stored reduced
// mod 2g+1. z1, z2, z3 carry (1,0), (0,1), (-1,-1); xi_k the negatives.
struct Weight {
  int a = 0;
  int b = 0;

  friend bool operator==(const Weight&, const Weight&) = default;
};

inline Weight weight_reduce(int a, int b, int m) {
  return Weight{((a % m) + m) % m, ((b % m) + m) % m};
}

inline Weight weight_add(const Weight& x, const Weight& y, int m) {
  return weight_reduce(x.a + y.a, x.b + y.b, m);
}

inline Weight var_weight(int k, int m) {
  switch (k) {
    case 1: return weight_reduce(1, 0, m);
    case 2: return weight_reduce(0, 1, m);
    case 3: return weight_reduce(-1, -1, m);
    default: throw std::invalid_argument("weights defined only for n = 3");
  }
}

}  // namespace ainf
