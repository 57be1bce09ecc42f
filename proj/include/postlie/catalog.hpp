#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "postlie/product.hpp"

namespace postlie {

// Typed builders. Every builder validates its parameter constraints
// (constraint_error with the violated predicate) and re-verifies the built
// object, so a transcription error cannot produce an invalid catalog object.

// 2-dim pair (abelian g, n with {e1,e2} = e1); product family
// e1.e1 = a e1, e1.e2 = b e1, e2.e1 = (b+1) e1, e2.e2 = c e1 with
// a c = b (b+1).
PAPair build_ex25(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

// 3-dim pair (solvable r3(lambda), Heisenberg n) with non-nilpotent left
// multiplication L(e1); lambda nonzero.
PAPair build_ex36(const Scalar& lambda, const Scalar& alpha,
                  const Scalar& beta, const Scalar& gamma);

// 5-dim Heisenberg pair whose symmetrization fails the g-compatibility
// identity.
PAPair build_ex45(const Field& f);

// 3-dim Heisenberg pair whose symmetrization fails the n-side conditions
// (the r7 = 1, alpha = beta = 0 member of family 6).
PAPair build_ex47(const Field& f);

// Heisenberg structure-constant families on K^3 (nine constants r1..r9
// filled from the family shape).
LieAlgebra build_heis_type_a(const Scalar& r1, const Scalar& r2, const Scalar& r3);
LieAlgebra build_heis_type_a0(const Scalar& r1, const Scalar& r3);
LieAlgebra build_heis_type_b(const Scalar& r4, const Scalar& r5);
LieAlgebra build_heis_type_c(const Scalar& r7);

// The six families of post-Lie structures on (heis3, n) with n of type
// A/B/C, given by their left multiplication operators; L(e3) is always
// -1/2 Ad(e3). `family` is 1..6; params in catalog order.
PAPair build_pa52(int family, const std::vector<Scalar>& params);

// Pair (abelian, n) with product x.y = -{x,y}/2 on any 2-step nilpotent n.
PAPair build_half_bracket_pair(const LieAlgebra& n);

// The 3-dim pair (abelian, heis3) with e2.e1 = e3, e2.e2 = -e2,
// e2.e3 = -e3, e3.e2 = -e3; its LR orientation is not complete.
PAPair build_lr_a4(const Field& f);

// String-keyed registry backing the CLI.
struct CatalogEntry {
  std::string name;
  std::string kind;  // "lie" | "pair"
  std::vector<std::string> params;
  std::string constraints;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

struct BuiltObject {
  std::optional<LieAlgebra> algebra;
  std::optional<PAPair> pair;
};

// Builds entry `name` over field `f` from textual parameter values
// (field literals; lr.halfbracket's `m` is a positive integer). Throws
// unknown_entry_error / constraint_error.
BuiltObject catalog_build(const std::string& name, const Field& f,
                          const std::map<std::string, std::string>& params);

}  // namespace postlie
