#pragma once

#include <cstdint>
#include <optional>

#include "postlie/product.hpp"

namespace postlie {

// Exhaustive enumeration of post-Lie products on a pair over F_p.
//
// raw_tensor: iterate all p^(dim^3) product tensors and keep those passing
// the axioms; only sensible for dim <= 2 and rejected above that.
//
// hom_through_derivations (dim 3, g with [e1,e2] = e3 central): the left
// multiplication is a homomorphism into the derivation algebra of n, so a
// candidate is determined by the pair (L(e1), L(e2)) in Der(n)^2; L(e3) is
// the forced bracket image and must commute back, and the skew axiom is the
// only remaining filter. All p^(2 dim Der) pairs are covered; an index on
// one forced column equality skips provably rejected pairs without changing
// the accepted set or its order.
//
// Every accepted candidate is re-verified through the generic checker
// before it is returned.
enum class SearchStrategy { raw_tensor, hom_through_derivations };

struct SearchSpec {
  LieAlgebra g;
  LieAlgebra n;
  SearchStrategy strategy;
  std::optional<std::uint64_t> max_candidates;  // cap on examined candidates
  std::optional<std::size_t> max_results;       // cap on accepted structures
  int jobs = 1;
};

struct SearchResult {
  std::vector<BilinearProduct> found;  // lexicographic candidate order
  std::uint64_t candidates = 0;        // size of the candidate space covered
  bool truncated = false;              // a resource limit cut the run short
};

SearchResult enumerate_pa(const SearchSpec& spec);

// Runs the (heis3, heis3) enumeration over F_p (p in {3, 5, 7}) and checks
// every found structure against the properties the classification
// guarantees, plus membership of every reduced catalog family instance.
// Violations are counted and reported, never hidden.
struct CorroborationReport {
  long p = 0;
  std::uint64_t candidates = 0;
  std::size_t found = 0;
  std::size_t left_rule_violations = 0;      // L(e3) != -1/2 Ad(e3)
  std::size_t nilpotency_violations = 0;     // some L(x) not nilpotent
  std::size_t triple_violations = 0;         // x.{y,z} != 0 or [x,y].z != z.[x,y]
  std::size_t symmetrization_violations = 0; // symmetrized product not CPA on g
  std::size_t invariant_violations = 0;      // h0 = 0 but n not nilpotent
  std::size_t family_instances = 0;          // reduced family members checked
  std::size_t family_missing = 0;            // members absent from the finds
  std::vector<std::string> details;          // capped human-readable notes

  bool ok() const {
    return left_rule_violations == 0 && nilpotency_violations == 0 &&
           triple_violations == 0 && symmetrization_violations == 0 &&
           invariant_violations == 0 && family_missing == 0;
  }
};

CorroborationReport corroborate_heisenberg_pairs(long p, int jobs = 1);

}  // namespace postlie
