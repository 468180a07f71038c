#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ainf/mf.hpp"
#include "ainf/prng.hpp"

namespace ainf {

// Planar rooted tree with ordered leaves, trivalent product vertices and
// bivalent deformation vertices. Stored as an expression DAG in a pool;
// nodes[root] is the vertex adjacent to the outgoing edge.
struct RibbonTree {
  enum class Kind : std::uint8_t { Leaf, Deform, Pair };
  struct Node {
    Kind kind;
    int leaf = 0;   // Leaf only; 1 = rightmost argument
    int child = -1; // Deform
    int hi = -1;    // Pair: branch holding the higher argument indices
    int lo = -1;    // Pair: branch holding the lower argument indices
  };
  std::vector<Node> nodes;
  int root = -1;
  int arity = 0;
  int bivalent = 0;

  std::string str() const;
};

// All trees with d leaves and exactly b bivalent vertices, deterministic
// order. Binary skeletons are enumerated by the split position; bivalent
// vertices are distributed over the 2d-1 edges (incoming, finite, outgoing).
std::vector<RibbonTree> enumerate_trees(int d, int b);

// Number of binary skeletons (no bivalent vertices): Catalan(d-1).
long long skeleton_count(int d);

// Literal evaluation of one tree per the vertex/edge assignment: incoming i,
// bivalent (-1)^{|b|} (d~ - d), finite edge (-1)^{|b|} h, trivalent
// (b2, b1) -> (-1)^{|b1|} b2 b1, outgoing p.
ExtElement tree_evaluate(const RibbonTree& t, const std::vector<ExtElement>& args,
                         const MFData& mf);

// Fast tree-sum evaluator: memoized interval recursion with exact pruning by
// the hbar power and the remaining-homotopy budget. Results are exact sums
// over all contributing trees.
class TransferEngine {
 public:
  explicit TransferEngine(const MFData& mf);

  // mu^d on a tuple of Lambda(V) basis masks (args[0] is the rightmost
  // argument a_1). k_filter = -1 sums all hbar components; k >= 0 extracts
  // mu_k^d.
  ExtElement mu(const std::vector<Mask>& args, int k_filter = -1) const;

  // Multilinear extension to arbitrary Lambda(V) elements.
  ExtElement mu_elem(const std::vector<ExtElement>& args, int k_filter = -1) const;

  // Evaluation on the generic element (the HKR diagonal): the result maps
  // each output mask to a polynomial in z1..zn. Optionally restricted to
  // coefficients of monomials dividing one of `targets` (exact extraction of
  // those coefficients).
  std::map<Mask, Polynomial> hkr_diagonal(int d, int k_filter,
                                          const std::vector<Monomial>& targets = {}) const;

  // Quasi-isomorphism components f_d on basis masks, built inductively from
  // the perturbed retract: f_1 = K i and f_d = -h' E_d where E_d is the
  // lower-arity defect of the morphism equations. The same recursion
  // reproduces mu^d as -p' E_d, which mu_from_defect exposes for
  // cross-checking against the tree sum.
  BElement f_component(const std::vector<Mask>& args) const;
  ExtElement mu_from_defect(const std::vector<Mask>& args) const;

  // Left-hand side minus right-hand side of the arity-d morphism equation
  //   sum mu_B(f (x) ... (x) f) = sum +- f(.., mu^m(..), ..)
  // for f = f_component and mu_B the endomorphism DG algebra structure.
  BElement morphism_residual(const std::vector<Mask>& args) const;

  const MFData& mf() const { return mf_; }

 private:
  friend struct EngineImpl;
  MFData mf_;
  // gamma split into (monomial, coefficient, hbar increment) triples.
  struct GammaPart {
    std::array<std::uint16_t, 3> e;
    Rat c;
    int q;
  };
  std::vector<std::vector<GammaPart>> gparts_;
  bool graded_ = false;  // genus-mode pruning available
};

struct HypothesisClause {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct HypothesisReport {
  int genus = 0;
  bool lambda_present = false;
  Rat lambda = Rat(0);
  std::vector<HypothesisClause> clauses;
  bool all_pass() const {
    for (const auto& c : clauses)
      if (!c.pass) return false;
    return true;
  }
};

// Theorem-hypothesis checks for the transferred structure: mu^1 = 0, mu^2 is
// the signed wedge, the two HKR diagonal values, the vanishing range for the
// first hbar component, and weight additivity on sampled tuples.
HypothesisReport theorem52_hypothesis_check(const TransferEngine& eng, int samples, Prng& rng,
                                            bool diagonal_only_top = false);

struct AuxAuditEntry {
  int arity = 0;
  int k = 0;
  int degree = 0;
  bool pass = false;
};

struct AuxAuditReport {
  std::vector<AuxAuditEntry> entries;
  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// Checks that every nonzero component found on sampled tuples sits in aux
// degree 6 - 3d + (4g-4)k for a unique k >= 0.
AuxAuditReport aux_degree_audit(const TransferEngine& eng, int max_arity, int samples, Prng& rng);

}  // namespace ainf
