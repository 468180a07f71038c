#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainf/rational.hpp"
#include "ainf/ring.hpp"

namespace ainf {

struct Monomial {
  std::vector<std::uint16_t> e;

  static Monomial unit(int n) { return Monomial{std::vector<std::uint16_t>(n, 0)}; }
  static Monomial var(int n, int i, int power = 1) {
    Monomial m = unit(n);
    m.e[i - 1] = static_cast<std::uint16_t>(power);
    return m;
  }

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] + o.e[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical monomial order: total degree, then lexicographic exponents.
struct DegLex {
  bool operator()(const Monomial& x, const Monomial& y) const {
    int dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy;
    return x.e < y.e;
  }
};

constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

// Truncated formal power series over exact rationals. Zero coefficients are
// never stored; the term map's order is the canonical one, so structural
// equality is mathematical equality. Every arithmetic result remembers
// whether the truncation cap dropped any term.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rat, DegLex>;

  Polynomial() = default;
  explicit Polynomial(const RingConfig& cfg) : cfg_(cfg) {}

  static Polynomial zero(const RingConfig& cfg) { return Polynomial(cfg); }
  static Polynomial constant(const RingConfig& cfg, const Rat& c);
  static Polynomial variable(const RingConfig& cfg, int i);
  static Polynomial monomial(const RingConfig& cfg, const Monomial& m, const Rat& c);

  const RingConfig& config() const { return cfg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool truncated() const { return truncated_; }
  int filtration_order() const;  // min total degree of a stored term; infinite for 0
  int top_degree() const;        // max total degree; -1 for 0

  void add_term(const Monomial& m, const Rat& c);
  Rat coeff(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;

  Polynomial partial(int i) const;         // formal d/dz_i, 1-based
  Polynomial graded_part(int d) const;     // total-degree-d piece
  Polynomial truncate_below(int d) const;  // keep degrees >= d
  Polynomial truncate_to(int order) const; // keep degrees < order

  // Weight of a weight-homogeneous polynomial; nullopt when inhomogeneous.
  std::optional<Weight> weight() const;

  std::string str() const;  // human-readable, canonical order

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const;

  RingConfig cfg_;
  Terms terms_;
  bool truncated_ = false;
};

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
inline Polynomial poly_partial(const Polynomial& p, int i) { return p.partial(i); }

// The superpotential -z1 z2 z3 + z1^{2g+1} + z2^{2g+1} + z3^{2g+1}.
Polynomial superpotential(const RingConfig& cfg);

}  // namespace ainf
