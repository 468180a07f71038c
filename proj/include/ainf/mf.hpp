#pragma once

#include <vector>

#include "ainf/belement.hpp"

namespace ainf {

// Koszul matrix factorization data: W with gamma = sum g_k dz_k built from
// the graded parts of W, so that the Euler identity sum z_k g_k = W holds.
struct MFData {
  RingConfig cfg;
  Polynomial w;
  std::vector<Polynomial> gamma;  // g_1..g_n

  const Polynomial& g(int k) const { return gamma[k - 1]; }
};

MFData gamma_from_W(const RingConfig& cfg, const Polynomial& w);

// The pipeline factorization for the superpotential of the configured genus.
MFData standard_mf(const RingConfig& cfg);

// Koszul differential d(f b (x) theta) = iota_eta(f b) (x) theta.
BElement koszul_diff(const BElement& b);

// Deformation part (d~ - d)(f b (x) theta) = (-1)^{|b|-1} sum g_k f b (x) iota_{dz_k} theta.
BElement deform_diff(const BElement& b, const MFData& mf);

// Differential of the matrix factorization endomorphism algebra.
inline BElement tilde_diff(const BElement& b, const MFData& mf) {
  return koszul_diff(b) + deform_diff(b, mf);
}

// Homotopy retract of B onto Lambda(V). The homotopy is normalized so that
// ip - id = dh + hd together with h^2 = ph = hi = 0 and pi = id.
BElement retract_h(const BElement& b);
ExtElement retract_p(const BElement& b);
BElement retract_i(const RingConfig& cfg, const ExtElement& a);

// The odd operator iota_eta + gamma ^ . ; its square is W times the identity.
BElement delta_E(const MFData& mf);
bool delta_squared_check(const MFData& mf);

}  // namespace ainf
