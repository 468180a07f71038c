#pragma once

#include <optional>
#include <vector>

#include "ainf/rational.hpp"

namespace ainf {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major, rectangular

RatMat mat_zero(std::size_t rows, std::size_t cols);
RatMat mat_identity(std::size_t n);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_apply(const RatMat& a, const RatVec& x);

// In-place reduced row echelon form with first-nonzero pivoting (canonical,
// deterministic). Returns pivot column indices.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

// One solution of A x = b (free variables set to zero, pivots canonical),
// or nullopt when inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// Basis of the null space of A, canonical order.
std::vector<RatVec> kernel(const RatMat& a);

// Does v lie in the column span of A?
bool in_span(const RatMat& a, const RatVec& v);

}  // namespace ainf
