#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ainf/exterior.hpp"
#include "ainf/polynomial.hpp"

namespace ainf {

// Parity, auxiliary Z-degree (2i - j + k for Sym^i x Lambda^j(Vdual) x
// Lambda^k(V)), and group weight of a homogeneous tensor.
struct TriGrade {
  int parity = 0;
  int aux_degree = 0;
  std::optional<Weight> weight;
};

// Canonical tensor form of an endomorphism of Omega(V): the term
// (m, beta, theta) with coefficient c is the operator c * m * dz_beta ^ iota_theta(.).
struct BKey {
  Monomial m;
  Mask beta = 0;
  Mask theta = 0;

  friend bool operator==(const BKey&, const BKey&) = default;
};

struct BKeyLess {
  bool operator()(const BKey& x, const BKey& y) const {
    DegLex dl;
    if (dl(x.m, y.m)) return true;
    if (dl(y.m, x.m)) return false;
    return std::tie(x.beta, x.theta) < std::tie(y.beta, y.theta);
  }
};

class BElement {
 public:
  using Terms = std::map<BKey, Rat, BKeyLess>;

  BElement() = default;
  explicit BElement(const RingConfig& cfg) : cfg_(cfg) {}

  static BElement zero(const RingConfig& cfg) { return BElement(cfg); }
  static BElement identity(const RingConfig& cfg);
  // i(theta) = 1 (x) theta
  static BElement from_ext(const RingConfig& cfg, const ExtElement& theta);
  static BElement term(const RingConfig& cfg, const Monomial& m, Mask beta, Mask theta,
                       const Rat& c);

  const RingConfig& config() const { return cfg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BKey& k, const Rat& c);
  void add(const BElement& o);
  BElement operator+(const BElement& o) const;
  BElement operator-(const BElement& o) const;
  BElement operator-() const;
  BElement operator*(const Rat& c) const;

  // Parity-homogeneous pieces (0 = even, 1 = odd).
  BElement parity_part(int p) const;
  std::optional<int> parity() const;
  std::optional<int> aux_degree() const;
  std::optional<Weight> g_weight() const;

  static TriGrade term_grade(const RingConfig& cfg, const BKey& k);

  std::string str() const;

  friend bool operator==(const BElement& a, const BElement& b) { return a.terms_ == b.terms_; }

 private:
  RingConfig cfg_;
  Terms terms_;
};

inline int bkey_parity(const BKey& k) { return (mask_degree(k.beta) + mask_degree(k.theta)) & 1; }

// Operator composition a o b in canonical tensor form (Leibniz expansion of
// the interior products). Agrees with the matrix product of b_to_matrix.
BElement b_compose(const BElement& a, const BElement& b);

// 2^n x 2^n matrix of the endomorphism over the Lambda(Vdual) basis; row =
// output mask, column = input mask.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix b_to_matrix(const BElement& a);
BElement matrix_to_b(const PolyMatrix& m, const RingConfig& cfg);

}  // namespace ainf
