#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/belement.hpp"
#include "ainf/prng.hpp"

using namespace ainf;

namespace {

RingConfig cfg_g3() { return RingConfig(3, 3, 20); }

BElement random_b(Prng& rng, const RingConfig& cfg, int nterms, int max_deg) {
  BElement b(cfg);
  for (int t = 0; t < nterms; ++t) {
    Monomial m = Monomial::unit(cfg.n);
    int deg = rng.range(0, max_deg);
    for (int d = 0; d < deg; ++d) m.e[rng.range(0, cfg.n - 1)]++;
    b.add_term(BKey{m, static_cast<Mask>(rng.bounded(8)), static_cast<Mask>(rng.bounded(8))},
               rng.small_rat(7, 3));
  }
  return b;
}

PolyMatrix mat_prod(const PolyMatrix& a, const PolyMatrix& b, const RingConfig& cfg) {
  std::size_t n = a.size();
  PolyMatrix r(n, std::vector<Polynomial>(n, Polynomial::zero(cfg)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

bool mat_eq(const PolyMatrix& a, const PolyMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

}  // namespace

TEST_CASE("identity and round trips") {
  RingConfig cfg = cfg_g3();
  BElement id = BElement::identity(cfg);
  PolyMatrix m = b_to_matrix(id);
  for (Mask i = 0; i < 8; ++i)
    for (Mask j = 0; j < 8; ++j) CHECK(m[i][j] == (i == j ? Polynomial::constant(cfg, 1)
                                                          : Polynomial::zero(cfg)));
  Prng rng(3);
  for (int it = 0; it < 25; ++it) {
    BElement b = random_b(rng, cfg, 6, 3);
    CHECK(matrix_to_b(b_to_matrix(b), cfg) == b);
    CHECK(b_compose(id, b) == b);
    CHECK(b_compose(b, id) == b);
  }
}

TEST_CASE("exhaustive matrix round trip on the tensor basis") {
  RingConfig cfg = cfg_g3();
  for (Mask beta = 0; beta < 8; ++beta)
    for (Mask theta = 0; theta < 8; ++theta) {
      BElement b = BElement::term(cfg, Monomial::var(3, 1, 1), beta, theta, Rat(1));
      CHECK(matrix_to_b(b_to_matrix(b), cfg) == b);
    }
}

TEST_CASE("1 (x) xi1 acts as the contraction operator") {
  RingConfig cfg = cfg_g3();
  BElement b = BElement::from_ext(cfg, ExtElement::generator(3, Side::V, 1));
  PolyMatrix m = b_to_matrix(b);
  // Column dz1 -> 1, column dz1^dz2 -> dz2, etc.
  CHECK(m[0b000][0b001] == Polynomial::constant(cfg, 1));
  CHECK(m[0b010][0b011] == Polynomial::constant(cfg, 1));
  CHECK(m[0b110][0b111] == Polynomial::constant(cfg, 1));
  CHECK(m[0b000][0b010].is_zero());
}

TEST_CASE("composition of pure contraction operators is the wedge") {
  RingConfig cfg = cfg_g3();
  Prng rng(17);
  for (int it = 0; it < 60; ++it) {
    ExtElement t1(3, Side::V), t2(3, Side::V);
    t1.add_term(rng.bounded(8), rng.small_rat(5, 2));
    t2.add_term(rng.bounded(8), rng.small_rat(5, 2));
    BElement lhs = b_compose(BElement::from_ext(cfg, t1), BElement::from_ext(cfg, t2));
    CHECK(lhs == BElement::from_ext(cfg, wedge(t1, t2)));
  }
}

TEST_CASE("composition agrees with the matrix oracle") {
  RingConfig cfg = cfg_g3();
  Prng rng(19);
  for (int it = 0; it < 30; ++it) {
    BElement a = random_b(rng, cfg, 4, 2);
    BElement b = random_b(rng, cfg, 4, 2);
    PolyMatrix expect = mat_prod(b_to_matrix(a), b_to_matrix(b), cfg);
    CHECK(mat_eq(b_to_matrix(b_compose(a, b)), expect));
  }
}

TEST_CASE("composition is associative") {
  RingConfig cfg = cfg_g3();
  Prng rng(23);
  for (int it = 0; it < 15; ++it) {
    BElement a = random_b(rng, cfg, 3, 2);
    BElement b = random_b(rng, cfg, 3, 2);
    BElement c = random_b(rng, cfg, 3, 2);
    CHECK(b_compose(b_compose(a, b), c) == b_compose(a, b_compose(b, c)));
  }
}

TEST_CASE("tri-grading is additive under composition") {
  RingConfig cfg = cfg_g3();
  Prng rng(31);
  int checked = 0;
  while (checked < 40) {
    BElement a = random_b(rng, cfg, 1, 2);
    BElement b = random_b(rng, cfg, 1, 2);
    BElement ab = b_compose(a, b);
    if (a.is_zero() || b.is_zero() || ab.is_zero()) continue;
    ++checked;
    REQUIRE(a.aux_degree().has_value());
    REQUIRE(ab.aux_degree().has_value());
    CHECK(*ab.aux_degree() == *a.aux_degree() + *b.aux_degree());
    auto wa = a.g_weight(), wb = b.g_weight(), wab = ab.g_weight();
    REQUIRE(wa.has_value());
    REQUIRE(wab.has_value());
    CHECK(*wab == weight_add(*wa, *wb, cfg.group_order()));
    CHECK(*ab.parity() == ((*a.parity() + *b.parity()) & 1));
  }
}

TEST_CASE("weights are additive under wedge and poly_mul on homogeneous inputs") {
  RingConfig cfg = cfg_g3();
  int m = cfg.group_order();
  Polynomial p = Polynomial::variable(cfg, 1) * Polynomial::variable(cfg, 2);
  CHECK(p.weight() == weight_add(Weight{1, 0}, Weight{0, 1}, m));
  ExtElement w12 = wedge(ExtElement::generator(3, Side::V, 1), ExtElement::generator(3, Side::V, 2));
  CHECK(w12.g_weight(cfg) ==
        weight_add(ExtElement::generator(3, Side::V, 1).g_weight(cfg).value(),
                   ExtElement::generator(3, Side::V, 2).g_weight(cfg).value(), m));
}
