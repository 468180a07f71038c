#include "ainf/exterior.hpp"

#include <sstream>
#include <stdexcept>

namespace ainf {

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count transpositions needed to merge: pairs (i in a, j in b) with j < i.
  int inv = 0;
  for (Mask x = a; x; x &= x - 1) {
    int i = __builtin_ctz(x);
    inv += __builtin_popcount(b & ((1u << i) - 1));
  }
  return (inv & 1) ? -1 : 1;
}

int contract_sign(Mask t, int k) {
  Mask bit = 1u << (k - 1);
  if (!(t & bit)) return 0;
  int before = __builtin_popcount(t & (bit - 1));
  return (before & 1) ? -1 : 1;
}

int iterated_contract_sign(Mask s, Mask t) {
  if ((s & t) != s) return 0;
  int sign = 1;
  // Apply the largest index first: iota_{xi_S} = iota_{s1} o ... o iota_{sk}.
  Mask rem = t;
  while (s) {
    int k = 31 - __builtin_clz(s);  // 0-based top bit
    sign *= contract_sign(rem, k + 1);
    rem &= ~(1u << k);
    s &= ~(1u << k);
  }
  return sign;
}

ExtElement ExtElement::basis(int n, Side side, Mask m, const Rat& c) {
  ExtElement x(n, side);
  x.add_term(m, c);
  return x;
}

ExtElement ExtElement::generator(int n, Side side, int k) {
  if (k < 1 || k > n) throw std::out_of_range("generator index");
  return basis(n, side, 1u << (k - 1));
}

void ExtElement::add_term(Mask m, const Rat& c) {
  if (ainf::is_zero(c)) return;
  if (m >= (1u << n_)) throw std::out_of_range("mask exceeds generator count");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (ainf::is_zero(it->second)) terms_.erase(it);
  }
}

Rat ExtElement::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
  if (side_ != o.side_ || n_ != o.n_) throw std::invalid_argument("mixed exterior algebras");
  ExtElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

ExtElement ExtElement::operator-(const ExtElement& o) const { return *this + (-o); }

ExtElement ExtElement::operator-() const {
  ExtElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ExtElement ExtElement::operator*(const Rat& c) const {
  ExtElement r(n_, side_);
  if (ainf::is_zero(c)) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

std::optional<int> ExtElement::degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int k = mask_degree(m);
    if (!d) d = k;
    else if (*d != k) return std::nullopt;
  }
  return d;
}

std::optional<int> ExtElement::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int k = mask_degree(m) & 1;
    if (!p) p = k;
    else if (*p != k) return std::nullopt;
  }
  return p;
}

std::optional<Weight> ExtElement::g_weight(const RingConfig& cfg) const {
  if (!cfg.genus || cfg.n != 3) throw std::logic_error("weights need genus and n = 3");
  int mm = cfg.group_order();
  std::optional<Weight> w;
  for (const auto& [m, c] : terms_) {
    (void)c;
    Weight t{0, 0};
    for (int k = 1; k <= 3; ++k) {
      if (!(m & (1u << (k - 1)))) continue;
      Weight vk = var_weight(k, mm);
      // xi_k carries the opposite weight of z_k; dz_k the same as z_k.
      if (side_ == Side::V)
        t = weight_reduce(t.a - vk.a, t.b - vk.b, mm);
      else
        t = weight_add(t, vk, mm);
    }
    if (!w) w = t;
    else if (!(*w == t)) return std::nullopt;
  }
  return w ? w : std::optional<Weight>(Weight{0, 0});
}

std::string ExtElement::str() const {
  if (terms_.empty()) return "0";
  const char* gen = side_ == Side::V ? "xi" : "dz";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = rat_to_string(c);
    if (!first) os << (cs[0] == '-' ? " - " : " + ");
    if (first && cs[0] == '-') os << "-";
    first = false;
    std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
    if (mag != "1" || m == 0) os << mag;
    for (int k = 0; k < n_; ++k)
      if (m & (1u << k)) os << gen << (k + 1);
  }
  return os.str();
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
  if (a.side() != b.side() || a.n() != b.n()) throw std::invalid_argument("mixed sides in wedge");
  ExtElement r(a.n(), a.side());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      r.add_term(ma | mb, ca * cb * s);
    }
  return r;
}

ExtElement contract(const ExtElement& theta, const ExtElement& target) {
  if (theta.side() == target.side()) throw std::invalid_argument("contract needs opposite sides");
  if (theta.n() != target.n()) throw std::invalid_argument("mixed generator counts");
  ExtElement r(target.n(), target.side());
  for (const auto& [ms, cs] : theta.terms())
    for (const auto& [mt, ct] : target.terms()) {
      int sign = iterated_contract_sign(ms, mt);
      if (sign == 0) continue;
      r.add_term(mt & ~ms, cs * ct * sign);
    }
  return r;
}

}  // namespace ainf
