#include "ainf/mf.hpp"

#include <stdexcept>

namespace ainf {

MFData gamma_from_W(const RingConfig& cfg, const Polynomial& w) {
  if (w.is_zero() || w.filtration_order() < 2)
    throw std::invalid_argument("W must have no constant or linear part");
  MFData mf{cfg, w, {}};
  mf.gamma.reserve(cfg.n);
  for (int k = 1; k <= cfg.n; ++k) {
    Polynomial gk(cfg);
    for (int d = w.filtration_order(); d <= w.top_degree(); ++d) {
      Polynomial part = w.graded_part(d);
      if (part.is_zero()) continue;
      gk = gk + part.partial(k) * Rat(1, d);
    }
    mf.gamma.push_back(gk);
  }
  return mf;
}

MFData standard_mf(const RingConfig& cfg) { return gamma_from_W(cfg, superpotential(cfg)); }

BElement koszul_diff(const BElement& b) {
  const RingConfig& cfg = b.config();
  BElement out(cfg);
  for (const auto& [k, c] : b.terms()) {
    for (int v = 1; v <= cfg.n; ++v) {
      int cs = contract_sign(k.beta, v);
      if (cs == 0) continue;
      Monomial m = k.m;
      m.e[v - 1]++;
      out.add_term(BKey{m, static_cast<Mask>(k.beta & ~(1u << (v - 1))), k.theta}, c * cs);
    }
  }
  return out;
}

BElement deform_diff(const BElement& b, const MFData& mf) {
  const RingConfig& cfg = b.config();
  BElement out(cfg);
  for (const auto& [k, c] : b.terms()) {
    int sgn = (mask_degree(k.beta) & 1) ? 1 : -1;  // (-1)^{|beta| - 1}
    for (int v = 1; v <= cfg.n; ++v) {
      int cs = contract_sign(k.theta, v);
      if (cs == 0) continue;
      Mask th = k.theta & ~(1u << (v - 1));
      for (const auto& [gm, gc] : mf.g(v).terms())
        out.add_term(BKey{k.m * gm, k.beta, th}, c * gc * cs * sgn);
    }
  }
  return out;
}

BElement retract_h(const BElement& b) {
  const RingConfig& cfg = b.config();
  BElement out(cfg);
  for (const auto& [k, c] : b.terms()) {
    int r = k.m.degree(), s = mask_degree(k.beta);
    int w = r + s;
    if (w == 0) continue;  // h kills scalars
    if (r == 0) continue;  // df = 0
    Rat scale = -c / w;
    for (int v = 1; v <= cfg.n; ++v) {
      int e = k.m.e[v - 1];
      if (e == 0) continue;
      int ws = wedge_sign(1u << (v - 1), k.beta);
      if (ws == 0) continue;
      Monomial m = k.m;
      m.e[v - 1]--;
      out.add_term(BKey{m, static_cast<Mask>(k.beta | (1u << (v - 1))), k.theta}, scale * e * ws);
    }
  }
  return out;
}

ExtElement retract_p(const BElement& b) {
  const RingConfig& cfg = b.config();
  ExtElement out(cfg.n, Side::V);
  for (const auto& [k, c] : b.terms())
    if (k.m.degree() == 0 && k.beta == 0) out.add_term(k.theta, c);
  return out;
}

BElement retract_i(const RingConfig& cfg, const ExtElement& a) {
  return BElement::from_ext(cfg, a);
}

BElement delta_E(const MFData& mf) {
  const RingConfig& cfg = mf.cfg;
  BElement d(cfg);
  for (int v = 1; v <= cfg.n; ++v) {
    d.add_term(BKey{Monomial::var(cfg.n, v), 0, static_cast<Mask>(1u << (v - 1))}, Rat(1));
    for (const auto& [gm, gc] : mf.g(v).terms())
      d.add_term(BKey{gm, static_cast<Mask>(1u << (v - 1)), 0}, gc);
  }
  return d;
}

bool delta_squared_check(const MFData& mf) {
  BElement d = delta_E(mf);
  BElement sq = b_compose(d, d);
  BElement expect(mf.cfg);
  for (const auto& [m, c] : mf.w.terms()) expect.add_term(BKey{m, 0, 0}, c);
  return sq == expect;
}

}  // namespace ainf
