#pragma once

#include <optional>

#include "postlie/product.hpp"

namespace postlie {

// The symmetrized product (x o y) = (x.y + y.x)/2 of a pair; no validity
// claim by itself.
BilinearProduct symmetrize(const PAPair& pair);

// The compatibility identity governing whether the symmetrization is a
// commutative structure on g, in its three algebraically equivalent forms:
//   g-compat       (operator, pairs):  [L(x)+R(x), ad(y)] = ad(x.y + y.x)
//   g-compat-elem  (element, triples): x.[y,z] + [y,z].x =
//                       [y,x.z] + [y,z.x] - [z,x.y] - [z,y.x]
//   g-compat-alt   (operator, pairs):  L([y,z]) + R([y,z]) =
//                       ad(y)(L(z)+R(z)) - ad(z)(L(y)+R(y))
// The three verdicts agree on any bilinear data, valid pair or not.
struct GCompatibility {
  Verdict operator_form;
  Verdict element_form;
  Verdict alt_form;
  bool ok() const { return operator_form.ok; }
  bool forms_agree() const {
    return operator_form.ok == element_form.ok &&
           element_form.ok == alt_form.ok;
  }
};

GCompatibility check_g_compatibility(const LieAlgebra& g, const LieAlgebra& n,
                                     const BilinearProduct& prod);
GCompatibility check_g_compatibility(const PAPair& pair);

// Consequences of g-compat (one-directional):
//   g-compat-sym:   [L(x)+R(x), ad(y)] = [L(y)+R(y), ad(x)]
//   g-compat-mixed: 2[L(x),ad(y)] + 2[ad(x),L(y)] = [ad(y),Ad(x)] + [Ad(y),ad(x)]
struct GCompatConsequences {
  Verdict symmetric_form;
  Verdict mixed_form;
};
GCompatConsequences check_g_compat_consequences(const PAPair& pair);

// Conditions for the symmetrization to be a commutative structure on n:
//   n-compat-ad (pairs): [ad(x), Ad(y)] = Ad([x,y])
//   n-compat-l  (pairs): L({x,y}) - L([x,y]) =
//                        (ad({x,y}) + [ad(y),L(x)] + [L(y),ad(x)]) / 2
struct NCompatibility {
  Verdict ad_form;
  Verdict left_form;
  bool ok() const { return ad_form.ok && left_form.ok; }
};
NCompatibility check_n_compatibility(const LieAlgebra& g, const LieAlgebra& n,
                                     const BilinearProduct& prod);
NCompatibility check_n_compatibility(const PAPair& pair);

// Outcome of a conditional symmetrization: `product` is set exactly when
// `condition` holds; otherwise `condition` carries the failing identity tag
// and basis witnesses.
struct SymmetrizationOutcome {
  Verdict condition;
  std::optional<BilinearProduct> product;
  bool ok() const { return condition.ok; }
};

// Symmetrization onto g. Requires both algebras nilpotent of class <= 2
// (hypothesis_error otherwise). On success the product is a commutative
// post-Lie structure on g; on failure check_cpa fails as well.
SymmetrizationOutcome symmetrize_to_g(const PAPair& pair);

// Symmetrization onto n under the two n-side conditions.
SymmetrizationOutcome symmetrize_to_n(const PAPair& pair);

// Pre-Lie special case: prod must be a pre-Lie structure on g (class <= 2).
// Succeeds iff every L(e_i) is a derivation of g; witnesses tagged
// "prelie-der" name the failing basis operator.
SymmetrizationOutcome symmetrize_prelie(const LieAlgebra& g,
                                        const BilinearProduct& prod);

// Completeness of an LR-structure m on a 2-step nilpotent n: true iff all
// left multiplications are nilpotent. Throws hypothesis_error when m is not
// an LR-structure on n.
bool lr_completeness(const LieAlgebra& n, const BilinearProduct& m);

enum class CheckStatus { ok, failed, hypothesis_not_met };

struct CheckOutcome {
  CheckStatus status = CheckStatus::ok;
  Verdict verdict;
  std::string reason;  // set for hypothesis_not_met
  bool ok() const { return status == CheckStatus::ok; }
};

// For pairs with abelian g and 2-step nilpotent n: whenever {x,p} = {x,q} = 0,
// x.{p,q} = 0. Scans all basis triples plus `trials` random triples drawn
// from the centralizer of a random x (the condition set is not a subspace in
// (x,p,q) jointly, so basis scanning alone is incomplete).
CheckOutcome check_centralizer_identity(const PAPair& pair,
                                        int trials = 100,
                                        std::uint64_t seed = 0x9e3779b97f4a7c15ull);

// For pairs with abelian g and Heisenberg n of dimension >= 5:
// Z(n).n = n.Z(n) = 0.
CheckOutcome check_center_annihilation(const PAPair& pair);

}  // namespace postlie
