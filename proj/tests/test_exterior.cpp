#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/exterior.hpp"
#include "ainf/prng.hpp"

using namespace ainf;

namespace {

ExtElement xi(int k) { return ExtElement::generator(3, Side::V, k); }
ExtElement dz(int k) { return ExtElement::generator(3, Side::Vdual, k); }

ExtElement random_ext(Prng& rng, Side side, int nterms) {
  ExtElement x(3, side);
  for (int t = 0; t < nterms; ++t) x.add_term(rng.bounded(8), rng.small_rat(7, 3));
  return x;
}

}  // namespace

TEST_CASE("wedge basics") {
  CHECK(wedge(xi(1), xi(2)) == ExtElement::basis(3, Side::V, 0b011));
  CHECK(wedge(xi(1), xi(1)).is_zero());
  CHECK(wedge(xi(2), xi(1)) == ExtElement::basis(3, Side::V, 0b011, Rat(-1)));
  CHECK_THROWS(wedge(xi(1), dz(1)));
}

TEST_CASE("wedge is graded-commutative") {
  Prng rng(11);
  for (int it = 0; it < 80; ++it) {
    Mask a = static_cast<Mask>(rng.bounded(8)), b = static_cast<Mask>(rng.bounded(8));
    ExtElement xa = ExtElement::basis(3, Side::V, a);
    ExtElement xb = ExtElement::basis(3, Side::V, b);
    int sign = (mask_degree(a) * mask_degree(b)) % 2 ? -1 : 1;
    CHECK(wedge(xa, xb) == wedge(xb, xa) * Rat(sign));
  }
}

TEST_CASE("wedge is associative") {
  Prng rng(5);
  for (int it = 0; it < 30; ++it) {
    ExtElement a = random_ext(rng, Side::V, 3);
    ExtElement b = random_ext(rng, Side::V, 3);
    ExtElement c = random_ext(rng, Side::V, 3);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("single contractions pair duals") {
  CHECK(contract(xi(1), dz(1)) == ExtElement::one(3, Side::Vdual));
  CHECK(contract(xi(1), dz(2)).is_zero());
}

TEST_CASE("fixed convention for higher contraction") {
  // iota_{xi1 ^ xi2} = iota_{xi1} o iota_{xi2}; on dz1 ^ dz2 this gives -1.
  ExtElement theta = wedge(xi(1), xi(2));
  ExtElement target = wedge(dz(1), dz(2));
  CHECK(contract(theta, target) == ExtElement::basis(3, Side::Vdual, 0, Rat(-1)));
}

TEST_CASE("contraction is an algebra action: iota_{a^b} = iota_a iota_b") {
  Prng rng(23);
  for (int it = 0; it < 60; ++it) {
    ExtElement a = random_ext(rng, Side::V, 2);
    ExtElement b = random_ext(rng, Side::V, 2);
    ExtElement t = random_ext(rng, Side::Vdual, 3);
    CHECK(contract(wedge(a, b), t) == contract(a, contract(b, t)));
  }
}

TEST_CASE("single contraction is an odd derivation") {
  Prng rng(29);
  for (int it = 0; it < 60; ++it) {
    ExtElement a = random_ext(rng, Side::Vdual, 2);
    ExtElement b = random_ext(rng, Side::Vdual, 2);
    for (int k = 1; k <= 3; ++k) {
      ExtElement lhs = contract(xi(k), wedge(a, b));
      ExtElement rhs(3, Side::Vdual);
      // Split a by parity for the Koszul sign.
      for (int p = 0; p < 2; ++p) {
        ExtElement ap(3, Side::Vdual);
        for (const auto& [m, c] : a.terms())
          if ((mask_degree(m) & 1) == p) ap.add_term(m, c);
        rhs = rhs + wedge(contract(xi(k), ap), b) + wedge(ap, contract(xi(k), b)) * Rat(p ? -1 : 1);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("weights of exterior generators oppose coordinates") {
  RingConfig c(3, 3, 16);
  CHECK(xi(1).g_weight(c) == Weight{6, 0});   // -(1,0) mod 7
  CHECK(dz(1).g_weight(c) == Weight{1, 0});
  CHECK(wedge(wedge(xi(1), xi(2)), xi(3)).g_weight(c) == Weight{0, 0});
}
