#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ainf/rational.hpp"
#include "ainf/ring.hpp"

namespace ainf {

using Mask = std::uint32_t;

enum class Side { V, Vdual };

inline int mask_degree(Mask m) { return __builtin_popcount(m); }

// Sign of xi_A ^ xi_B as a multiple of xi_{A|B}; 0 when the masks overlap.
int wedge_sign(Mask a, Mask b);

// Sign of the single contraction iota_{k} on a basis form with index set t
// (left odd derivation); 0 when k is not in t. 1-based k.
int contract_sign(Mask t, int k);

// Iterated interior product convention: iota_{xi_S} = iota_{s1} o ... o iota_{sk}
// for ascending s1 < ... < sk, so that iota_{a ^ b} = iota_a o iota_b.
// Returns the sign of iota_{xi_S}(e_T) as a multiple of e_{T \ S}; 0 unless S <= T.
int iterated_contract_sign(Mask s, Mask t);

// Element of the exterior algebra on xi_1..xi_n (side V) or dz_1..dz_n
// (side Vdual), with exact rational coefficients keyed by generator subsets.
class ExtElement {
 public:
  using Terms = std::map<Mask, Rat>;

  ExtElement() = default;
  ExtElement(int n, Side side) : n_(n), side_(side) {}

  static ExtElement zero(int n, Side side) { return ExtElement(n, side); }
  static ExtElement basis(int n, Side side, Mask m, const Rat& c = Rat(1));
  static ExtElement generator(int n, Side side, int k);  // 1-based
  static ExtElement one(int n, Side side) { return basis(n, side, 0); }

  int n() const { return n_; }
  Side side() const { return side_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Mask m, const Rat& c);
  Rat coeff(Mask m) const;

  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement operator-() const;
  ExtElement operator*(const Rat& c) const;

  // Degree of a homogeneous nonzero element; nullopt when mixed or zero.
  std::optional<int> degree() const;
  std::optional<int> parity() const;

  std::optional<Weight> g_weight(const RingConfig& cfg) const;

  std::string str() const;

  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.side_ == b.side_ && a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  Side side_ = Side::V;
  Terms terms_;
};

ExtElement wedge(const ExtElement& a, const ExtElement& b);

// Interior product of theta against a form on the opposite side; works for
// both iota_theta on Lambda(Vdual) and iota_{dz}-contractions on Lambda(V).
ExtElement contract(const ExtElement& theta, const ExtElement& target);

}  // namespace ainf
