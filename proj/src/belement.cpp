#include "ainf/belement.hpp"

#include <sstream>
#include <stdexcept>

namespace ainf {

BElement BElement::identity(const RingConfig& cfg) {
  BElement b(cfg);
  b.add_term(BKey{Monomial::unit(cfg.n), 0, 0}, Rat(1));
  return b;
}

BElement BElement::from_ext(const RingConfig& cfg, const ExtElement& theta) {
  if (theta.side() != Side::V) throw std::invalid_argument("i() takes Lambda(V)");
  BElement b(cfg);
  for (const auto& [m, c] : theta.terms()) b.add_term(BKey{Monomial::unit(cfg.n), 0, m}, c);
  return b;
}

BElement BElement::term(const RingConfig& cfg, const Monomial& m, Mask beta, Mask theta,
                        const Rat& c) {
  BElement b(cfg);
  b.add_term(BKey{m, beta, theta}, c);
  return b;
}

void BElement::add_term(const BKey& k, const Rat& c) {
  if (ainf::is_zero(c)) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (ainf::is_zero(it->second)) terms_.erase(it);
  }
}

void BElement::add(const BElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
}

BElement BElement::operator+(const BElement& o) const {
  BElement r = *this;
  r.add(o);
  return r;
}

BElement BElement::operator-(const BElement& o) const { return *this + (-o); }

BElement BElement::operator-() const {
  BElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BElement BElement::operator*(const Rat& c) const {
  BElement r(cfg_);
  if (ainf::is_zero(c)) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

BElement BElement::parity_part(int p) const {
  BElement r(cfg_);
  for (const auto& [k, c] : terms_)
    if (bkey_parity(k) == p) r.terms_.emplace(k, c);
  return r;
}

std::optional<int> BElement::parity() const {
  std::optional<int> p;
  for (const auto& [k, c] : terms_) {
    (void)c;
    int q = bkey_parity(k);
    if (!p) p = q;
    else if (*p != q) return std::nullopt;
  }
  return p;
}

std::optional<int> BElement::aux_degree() const {
  std::optional<int> d;
  for (const auto& [k, c] : terms_) {
    (void)c;
    int a = 2 * k.m.degree() - mask_degree(k.beta) + mask_degree(k.theta);
    if (!d) d = a;
    else if (*d != a) return std::nullopt;
  }
  return d;
}

TriGrade BElement::term_grade(const RingConfig& cfg, const BKey& k) {
  TriGrade g;
  g.parity = bkey_parity(k);
  g.aux_degree = 2 * k.m.degree() - mask_degree(k.beta) + mask_degree(k.theta);
  if (cfg.genus && cfg.n == 3) {
    int mm = cfg.group_order();
    Weight w{0, 0};
    for (int v = 1; v <= 3; ++v) {
      Weight c = var_weight(v, mm);
      int e = k.m.e[v - 1];
      if (k.beta & (1u << (v - 1))) ++e;            // dz_v weighs like z_v
      w = weight_reduce(w.a + c.a * e, w.b + c.b * e, mm);
      if (k.theta & (1u << (v - 1))) w = weight_reduce(w.a - c.a, w.b - c.b, mm);
    }
    g.weight = w;
  }
  return g;
}

std::optional<Weight> BElement::g_weight() const {
  std::optional<Weight> w;
  for (const auto& [k, c] : terms_) {
    (void)c;
    TriGrade g = term_grade(cfg_, k);
    if (!g.weight) return std::nullopt;
    if (!w) w = g.weight;
    else if (!(*w == *g.weight)) return std::nullopt;
  }
  return w ? w : std::optional<Weight>(Weight{0, 0});
}

std::string BElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_to_string(c) << ")*" << Polynomial::monomial(cfg_, k.m, Rat(1)).str();
    for (int v = 0; v < cfg_.n; ++v)
      if (k.beta & (1u << v)) os << " dz" << (v + 1);
    os << " (x)";
    if (k.theta == 0) os << " 1";
    for (int v = 0; v < cfg_.n; ++v)
      if (k.theta & (1u << v)) os << " xi" << (v + 1);
  }
  return os.str();
}

namespace {

// (f2 b2 (x) xi_S) o (f1 b1 (x) theta1): peel the largest generator s of S
// (iota_{xi_S} = iota_{xi_{S\s}} o iota_s, with iota_s acting innermost):
//   iota_s(f1 b1 ^ X) = f1 iota_s(b1) ^ X + (-1)^{|b1|} f1 b1 ^ iota_{xi_s ^ theta1}(.)
void compose_rec(const RingConfig& cfg, const BKey& a, Mask s_left, const BKey& b, const Rat& coef,
                 BElement& out) {
  if (s_left == 0) {
    int sgn = wedge_sign(a.beta, b.beta);
    if (sgn == 0) return;
    out.add_term(BKey{a.m * b.m, static_cast<Mask>(a.beta | b.beta), b.theta}, coef * sgn);
    return;
  }
  int k = 31 - __builtin_clz(s_left);  // 0-based
  Mask bit = 1u << k;
  Mask rest = s_left & ~bit;
  // Contraction hits b's form part.
  int cs = contract_sign(b.beta, k + 1);
  if (cs != 0) {
    BKey nb = b;
    nb.beta &= ~bit;
    compose_rec(cfg, a, rest, nb, coef * cs, out);
  }
  // Contraction passes through; xi_s joins b's theta.
  int ws = wedge_sign(bit, b.theta);
  if (ws != 0) {
    BKey nb = b;
    nb.theta |= bit;
    int sgn = (mask_degree(b.beta) & 1) ? -1 : 1;
    compose_rec(cfg, a, rest, nb, coef * ws * sgn, out);
  }
}

}  // namespace

BElement b_compose(const BElement& a, const BElement& b) {
  if (!a.config().compatible(b.config())) throw std::invalid_argument("incompatible rings");
  BElement out(a.config());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) compose_rec(a.config(), ka, ka.theta, kb, ca * cb, out);
  return out;
}

PolyMatrix b_to_matrix(const BElement& a) {
  const RingConfig& cfg = a.config();
  std::size_t dim = 1u << cfg.n;
  PolyMatrix m(dim, std::vector<Polynomial>(dim, Polynomial::zero(cfg)));
  for (const auto& [k, c] : a.terms()) {
    for (Mask col = 0; col < dim; ++col) {
      int cs = iterated_contract_sign(k.theta, col);
      if (cs == 0) continue;
      Mask mid = col & ~k.theta;
      int ws = wedge_sign(k.beta, mid);
      if (ws == 0) continue;
      m[k.beta | mid][col].add_term(k.m, c * cs * ws);
    }
  }
  return m;
}

BElement matrix_to_b(const PolyMatrix& mat, const RingConfig& cfg) {
  std::size_t dim = 1u << cfg.n;
  if (mat.size() != dim) throw std::invalid_argument("matrix dimension mismatch");
  for (const auto& row : mat)
    if (row.size() != dim) throw std::invalid_argument("matrix dimension mismatch");

  // Triangular reconstruction over columns ordered by popcount: after the
  // contributions of all theta' < theta are subtracted, column theta reads
  // off the (., ., theta) terms directly.
  std::vector<Mask> cols(dim);
  for (Mask i = 0; i < dim; ++i) cols[i] = i;
  std::sort(cols.begin(), cols.end(), [](Mask x, Mask y) {
    int px = mask_degree(x), py = mask_degree(y);
    return px != py ? px < py : x < y;
  });

  BElement b(cfg);
  PolyMatrix residue = mat;
  for (Mask col : cols) {
    int cs = iterated_contract_sign(col, col);
    BElement found(cfg);
    for (Mask row = 0; row < dim; ++row) {
      const Polynomial& p = residue[row][col];
      for (const auto& [mono, c] : p.terms()) found.add_term(BKey{mono, row, col}, c * cs);
    }
    if (found.is_zero()) continue;
    b.add(found);
    PolyMatrix fm = b_to_matrix(found);
    for (Mask r = 0; r < dim; ++r)
      for (Mask c2 = 0; c2 < dim; ++c2) residue[r][c2] = residue[r][c2] - fm[r][c2];
  }
  for (Mask r = 0; r < dim; ++r)
    for (Mask c2 = 0; c2 < dim; ++c2)
      if (!residue[r][c2].is_zero()) throw std::invalid_argument("matrix is not Lambda-linear");
  return b;
}

}  // namespace ainf
