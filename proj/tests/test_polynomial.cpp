#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/polynomial.hpp"
#include "ainf/prng.hpp"

using namespace ainf;

namespace {

RingConfig cfg_g3() { return RingConfig(3, 3, 16); }

Polynomial z(const RingConfig& c, int i) { return Polynomial::variable(c, i); }

Polynomial random_poly(Prng& rng, const RingConfig& cfg, int max_deg, int nterms) {
  Polynomial p(cfg);
  for (int t = 0; t < nterms; ++t) {
    Monomial m = Monomial::unit(cfg.n);
    int deg = rng.range(0, max_deg);
    for (int d = 0; d < deg; ++d) m.e[rng.range(0, cfg.n - 1)]++;
    p.add_term(m, rng.small_rat(9, 4));
  }
  return p;
}

}  // namespace

TEST_CASE("monomial products and canonical order") {
  RingConfig c = cfg_g3();
  auto z1 = z(c, 1), z2 = z(c, 2);
  CHECK(z1 * z2 == z2 * z1);
  CHECK((z1 * z2).terms().size() == 1);

  Polynomial p = (z1 + z2) * (z1 + z2);
  Polynomial expect(c);
  expect.add_term(Monomial::var(3, 1, 2), Rat(1));
  expect.add_term(Monomial::var(3, 2, 2), Rat(1));
  Monomial mixed = Monomial::unit(3);
  mixed.e = {1, 1, 0};
  expect.add_term(mixed, Rat(2));
  CHECK(p == expect);
}

TEST_CASE("multiplication by zero annihilates") {
  RingConfig c = cfg_g3();
  Prng rng(7);
  Polynomial p = random_poly(rng, c, 5, 8);
  CHECK((p * Polynomial::zero(c)).is_zero());
}

TEST_CASE("partial derivatives") {
  RingConfig c = cfg_g3();
  // d/dz3 of W at g = 3 is -z1 z2 + 7 z3^6 (hand differentiation).
  Polynomial w = superpotential(c);
  Polynomial d3 = poly_partial(w, 3);
  Polynomial expect(c);
  Monomial m12 = Monomial::unit(3);
  m12.e = {1, 1, 0};
  expect.add_term(m12, Rat(-1));
  expect.add_term(Monomial::var(3, 3, 6), Rat(7));
  CHECK(d3 == expect);

  CHECK(poly_partial(z(c, 2), 1).is_zero());
  for (int k = 1; k <= 6; ++k) {
    Polynomial zk = Polynomial::monomial(c, Monomial::var(3, 1, k), Rat(1));
    Polynomial expect_d(c);
    expect_d.add_term(Monomial::var(3, 1, k - 1), Rat(k));
    CHECK(poly_partial(zk, 1) == expect_d);
  }
  CHECK_THROWS(poly_partial(w, 0));
  CHECK_THROWS(poly_partial(w, 4));
}

TEST_CASE("truncation is recorded and exact below the cap") {
  RingConfig c(3, std::nullopt, 4);
  Polynomial p = z(c, 1) * z(c, 1);
  CHECK(!p.truncated());
  Polynomial q = p * p;  // degree 4: retained
  CHECK(!q.truncated());
  Polynomial r = q * z(c, 1);  // degree 5: dropped
  CHECK(r.truncated());
  CHECK(r.is_zero());
}

TEST_CASE("filtration order is superadditive under products") {
  RingConfig c = cfg_g3();
  Prng rng(13);
  for (int it = 0; it < 50; ++it) {
    Polynomial a = random_poly(rng, c, 4, 4);
    Polynomial b = random_poly(rng, c, 4, 4);
    Polynomial ab = a * b;
    if (ab.is_zero()) continue;
    CHECK(ab.filtration_order() >= a.filtration_order() + b.filtration_order());
  }
}

TEST_CASE("mismatched variable count is an error") {
  RingConfig c3 = cfg_g3();
  RingConfig c2(2, std::nullopt, 8);
  CHECK_THROWS(z(c3, 1) * Polynomial::variable(c2, 1));
}

TEST_CASE("g-weights") {
  RingConfig c = cfg_g3();
  // W is G-invariant.
  CHECK(superpotential(c).weight() == Weight{0, 0});
  // z1 carries the first standard character.
  CHECK(z(c, 1).weight() == Weight{1, 0});
  // z1 + z2^2 is inhomogeneous.
  CHECK(!(z(c, 1) + z(c, 2) * z(c, 2)).weight().has_value());
}
