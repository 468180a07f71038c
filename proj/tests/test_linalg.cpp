#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/linalg.hpp"
#include "ainf/prng.hpp"

using namespace ainf;

namespace {

RatMat random_mat(Prng& rng, std::size_t r, std::size_t c) {
  RatMat m = mat_zero(r, c);
  for (auto& row : m)
    for (auto& x : row)
      if (rng.bounded(3) != 0) x = rng.small_rat(5, 3);
  return m;
}

}  // namespace

TEST_CASE("rref solves exactly") {
  Prng rng(101);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 + rng.bounded(5), m = 2 + rng.bounded(5);
    RatMat a = random_mat(rng, n, m);
    RatVec x0(m, Rat(0));
    for (auto& v : x0) v = rng.small_rat(4, 2);
    RatVec b = mat_apply(a, x0);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(mat_apply(a, *x) == b);
  }
}

TEST_CASE("inconsistent systems are detected") {
  RatMat a = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  RatVec b = {Rat(1), Rat(3)};
  CHECK(!solve(a, b).has_value());
}

TEST_CASE("kernel vectors annihilate and span") {
  Prng rng(55);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 + rng.bounded(4), m = 2 + rng.bounded(5);
    RatMat a = random_mat(rng, n, m);
    auto ker = kernel(a);
    for (const auto& v : ker) {
      RatVec av = mat_apply(a, v);
      for (const auto& x : av) CHECK(is_zero(x));
    }
    CHECK(ker.size() + rank(a) == m);
  }
}

TEST_CASE("rank of identity") {
  CHECK(rank(mat_identity(5)) == 5);
}
