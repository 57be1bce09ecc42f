#include <doctest.h>

#include "postlie/catalog.hpp"
#include "postlie/rng.hpp"
#include "postlie/symmetrize.hpp"

using namespace postlie;

namespace {
const Field Q = Field::rationals();
Scalar q(long n, long d = 1) { return Scalar::of_fraction(Q, n, d); }

std::vector<PAPair> two_step_corpus() {
  std::vector<PAPair> pairs;
  pairs.push_back(build_ex45(Q));
  pairs.push_back(build_ex47(Q));
  pairs.push_back(build_pa52(1, {q(2), q(1), q(3), q(1), q(-1)}));
  pairs.push_back(build_pa52(2, {q(1), q(2), q(0), q(5)}));
  pairs.push_back(build_pa52(3, {q(2), q(1), q(1), q(0), q(3)}));
  pairs.push_back(build_pa52(4, {q(1), q(0), q(2), q(3), q(1)}));
  pairs.push_back(build_pa52(5, {q(1), q(2), q(0), q(1)}));
  pairs.push_back(build_pa52(6, {q(3), q(1), q(2)}));
  pairs.push_back(build_half_bracket_pair(LieAlgebra::heisenberg(Q, 2)));
  pairs.push_back(build_lr_a4(Q));
  LieAlgebra h = LieAlgebra::heisenberg(Q, 1);
  pairs.push_back(PAPair::create(h, h, BilinearProduct::zero(Q, 3)));
  return pairs;
}

}  // namespace

TEST_CASE("symmetrize fixes commutative products and the zero product") {
  LieAlgebra h = LieAlgebra::heisenberg(Q, 1);
  PAPair zero = PAPair::create(h, h, BilinearProduct::zero(Q, 3));
  CHECK(symmetrize(zero) == BilinearProduct::zero(Q, 3));

  PAPair f6 = build_pa52(6, {q(1), q(0), q(0)});
  BilinearProduct sym = symmetrize(f6);
  CHECK(sym.is_commutative());
  CHECK(sym.symmetrized() == sym);
  // e1 o e2 = e3/2; the e2/e3 products cancel against the forced L(e3).
  CHECK(format_vec(sym.pair(0, 1)) == "1/2*e3");
  CHECK(vec_is_zero(sym.pair(1, 2)));
  CHECK(vec_is_zero(sym.pair(2, 1)));
}

TEST_CASE("five-dim counterexample fails the g-compatibility identity") {
  PAPair pair = build_ex45(Q);
  GCompatibility compat = check_g_compatibility(pair);
  CHECK_FALSE(compat.ok());
  CHECK(compat.forms_agree());
  const Witness& w = compat.element_form.witnesses.front();
  CHECK(w.where == std::vector<int>{2, 0, 2});  // (e3, e1, e3)
  CHECK(format_vec(w.residual) == "2*e5");

  SymmetrizationOutcome out = symmetrize_to_g(pair);
  CHECK_FALSE(out.ok());
  CHECK_FALSE(out.product.has_value());
  CHECK_FALSE(check_cpa(pair.g(), symmetrize(pair)).ok);
}

TEST_CASE("three-dim counterexample fails the n-side conditions") {
  PAPair pair = build_ex47(Q);
  NCompatibility compat = check_n_compatibility(pair);
  CHECK_FALSE(compat.ad_form.ok);
  bool found = false;
  for (const Witness& w : compat.ad_form.witnesses) {
    if (w.where.size() == 3 && w.where[0] == 1 && w.where[1] == 2 && w.where[2] == 1) {
      // applied to e2: lhs e3, rhs 0
      CHECK(format_vec(w.lhs) == "e3");
      CHECK(format_vec(w.rhs) == "0");
      found = true;
    }
  }
  CHECK(found);
  CHECK_FALSE(compat.left_form.ok);
  bool found18 = false;
  for (const Witness& w : compat.left_form.witnesses)
    if (w.where.size() >= 2 && w.where[0] == 0 && w.where[1] == 1) found18 = true;
  CHECK(found18);
  CHECK_FALSE(symmetrize_to_n(pair).ok());
  CHECK_FALSE(check_cpa(pair.n(), symmetrize(pair)).ok);
}

TEST_CASE("g-compatibility forms agree on arbitrary bilinear data") {
  Rng rng(41);
  LieAlgebra h = LieAlgebra::heisenberg(Q, 1);
  LieAlgebra r3 = LieAlgebra::solvable_r3(q(1));
  for (int t = 0; t < 25; ++t) {
    BilinearProduct p(Q, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (rng.int_in(0, 1)) p.set_pair(i, j, rng.vector(Q, 3));
    const LieAlgebra& g = t % 2 ? h : r3;
    GCompatibility compat = check_g_compatibility(g, h, p);
    CHECK(compat.forms_agree());
    bool elem_ok = compat.element_form.failure_count == 0;
    CHECK(elem_ok == compat.alt_form.ok);
  }
}

TEST_CASE("g-compatibility is trivially satisfied when g is abelian") {
  PAPair half5 = build_half_bracket_pair(LieAlgebra::heisenberg(Q, 2));
  GCompatibility compat = check_g_compatibility(half5);
  CHECK(compat.ok());
  PAPair a4 = build_lr_a4(Q);
  CHECK(check_g_compatibility(a4).ok());
}

TEST_CASE("symmetrization iff-properties over the 2-step corpus") {
  for (const PAPair& pair : two_step_corpus()) {
    BilinearProduct sym = symmetrize(pair);
    GCompatibility gcomp = check_g_compatibility(pair);
    CHECK(gcomp.forms_agree());
    CHECK(gcomp.ok() == check_cpa(pair.g(), sym).ok);
    SymmetrizationOutcome to_g = symmetrize_to_g(pair);
    CHECK(to_g.ok() == gcomp.ok());
    if (to_g.ok()) CHECK(*to_g.product == sym);

    NCompatibility ncomp = check_n_compatibility(pair);
    CHECK(ncomp.ok() == check_cpa(pair.n(), sym).ok);
    SymmetrizationOutcome to_n = symmetrize_to_n(pair);
    CHECK(to_n.ok() == ncomp.ok());

    // One-directional consequences of the g-side condition.
    if (gcomp.ok()) {
      GCompatConsequences cons = check_g_compat_consequences(pair);
      CHECK(cons.symmetric_form.ok);
      CHECK(cons.mixed_form.ok);
    }
  }
}

TEST_CASE("two-step hypothesis is enforced") {
  PAPair ex36 = build_ex36(q(1), q(0), q(0), q(0));
  CHECK_THROWS_AS(symmetrize_to_g(ex36), hypothesis_error);
  CHECK_THROWS_AS(symmetrize_to_n(ex36), hypothesis_error);
  PAPair ex25 = build_ex25(q(1), q(0), q(0));
  CHECK_THROWS_AS(symmetrize_to_g(ex25), hypothesis_error);
}

TEST_CASE("abelian-g pairs satisfy the n-side condition iff {n,n}.n = 0") {
  std::vector<PAPair> pairs = {build_half_bracket_pair(LieAlgebra::heisenberg(Q, 1)),
                               build_half_bracket_pair(LieAlgebra::heisenberg(Q, 2)),
                               build_lr_a4(Q)};
  for (const PAPair& pair : pairs) {
    const LieAlgebra& n = pair.n();
    bool derived_killed = true;
    Subspace der = n.derived_algebra();
    for (int b = 0; b < der.dim(); ++b)
      for (int j = 0; j < n.dim(); ++j)
        if (!vec_is_zero(pair.product().mul(der.basis_vector(b),
                                            unit_vec(Q, n.dim(), j))))
          derived_killed = false;
    NCompatibility comp = check_n_compatibility(pair);
    CHECK(comp.ad_form.ok);  // trivially satisfied for abelian g
    CHECK(comp.ok() == derived_killed);
    // And then n.{n,n} = 0 as well.
    if (derived_killed) {
      for (int b = 0; b < der.dim(); ++b)
        for (int j = 0; j < n.dim(); ++j)
          CHECK(vec_is_zero(pair.product().mul(unit_vec(Q, n.dim(), j),
                                               der.basis_vector(b))));
    }
  }
}

TEST_CASE("half-bracket pair on heis5 satisfies the n-side conditions") {
  PAPair pair = build_half_bracket_pair(LieAlgebra::heisenberg(Q, 2));
  SymmetrizationOutcome out = symmetrize_to_n(pair);
  CHECK(out.ok());
  CHECK(check_cpa(pair.n(), *out.product).ok);
}

TEST_CASE("pre-Lie symmetrization via the derivation condition") {
  LieAlgebra h = LieAlgebra::heisenberg(Q, 1);

  // The zero product is pre-Lie only when the bracket vanishes.
  CHECK_FALSE(check_prelie(h, BilinearProduct::zero(Q, 3)).ok);
  SymmetrizationOutcome zero =
      symmetrize_prelie(LieAlgebra::abelian(Q, 3), BilinearProduct::zero(Q, 3));
  CHECK(zero.ok());

  // x.y = [x,y]/2 is pre-Lie on a 2-step algebra; L(x) = ad(x)/2 are inner
  // derivations, so the condition holds and the left action is nilpotent.
  BilinearProduct halfbr(Q, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      halfbr.set_pair(i, j, vec_scale(q(1, 2), h.tensor().pair(i, j)));
  REQUIRE(check_prelie(h, halfbr).ok);
  SymmetrizationOutcome out = symmetrize_prelie(h, halfbr);
  CHECK(out.ok());
  if (h.is_stem()) {
    PAPair pair = PAPair::create(h, LieAlgebra::abelian(Q, 3), halfbr);
    CHECK(all_left_mults_nilpotent(pair));
  }

  // A pre-Lie product whose L(e_i) is not a derivation: commutative
  // associative product on an abelian algebra with L(e1) = identity-like.
  LieAlgebra ab2 = LieAlgebra::abelian(Q, 2);
  BilinearProduct unital(Q, 2);
  unital.set_pair(0, 0, unit_vec(Q, 2, 0));
  unital.set_pair(0, 1, unit_vec(Q, 2, 1));
  unital.set_pair(1, 0, unit_vec(Q, 2, 1));
  REQUIRE(check_prelie(ab2, unital).ok);
  CHECK(symmetrize_prelie(ab2, unital).ok());  // every map is a derivation of 0

  // Non-pre-Lie input is a hypothesis violation.
  BilinearProduct bad(Q, 3);
  bad.set_pair(0, 1, unit_vec(Q, 3, 0));
  CHECK_THROWS_AS(symmetrize_prelie(h, bad), hypothesis_error);
}

TEST_CASE("pre-Lie products failing the derivation condition exist") {
  // Sparse fuzz over integer products on heis3, keep the first pre-Lie hit
  // whose left operators are not all derivations.
  Rng rng(59);
  LieAlgebra h = LieAlgebra::heisenberg(Q, 1);
  bool found = false;
  for (int t = 0; t < 4000 && !found; ++t) {
    BilinearProduct p(Q, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (rng.int_in(0, 3) == 0)
          p.set_pair(i, j, vec_scale(Scalar::of_long(Q, rng.int_in(-2, 2)),
                                     unit_vec(Q, 3, static_cast<int>(rng.int_in(0, 2)))));
    if (!check_prelie(h, p).ok) continue;
    SymmetrizationOutcome out = symmetrize_prelie(h, p);
    if (!out.ok()) {
      found = true;
      CHECK(out.condition.witnesses.front().identity == "prelie-der");
    }
  }
  CHECK(found);
}

TEST_CASE("LR completeness: half-bracket complete, dim-3 exception not") {
  LieAlgebra h5 = LieAlgebra::heisenberg(Q, 2);
  PAPair half = build_half_bracket_pair(h5);
  CHECK(lr_completeness(h5, lr_from_pa(half)));

  PAPair a4 = build_lr_a4(Q);
  CHECK_FALSE(lr_completeness(a4.n(), lr_from_pa(a4)));

  // Abelian n with the zero product is trivially complete.
  LieAlgebra ab = LieAlgebra::abelian(Q, 3);
  CHECK(lr_completeness(ab, BilinearProduct::zero(Q, 3)));

  CHECK_THROWS_AS(lr_completeness(h5, BilinearProduct::zero(Q, 5)),
                  hypothesis_error);
}

TEST_CASE("completeness holds when n is stem and the derived algebra acts as zero") {
  // Cor-4.9-shaped property over the half-bracket family.
  for (int m = 2; m <= 3; ++m) {
    LieAlgebra n = LieAlgebra::heisenberg(Q, m);
    PAPair pair = build_half_bracket_pair(n);
    REQUIRE(n.is_stem());
    CHECK(lr_completeness(n, lr_from_pa(pair)));
  }
}

TEST_CASE("centralizer identity and center annihilation") {
  PAPair half5 = build_half_bracket_pair(LieAlgebra::heisenberg(Q, 2));
  CheckOutcome c1 = check_centralizer_identity(half5);
  CHECK(c1.ok());
  CheckOutcome c2 = check_center_annihilation(half5);
  CHECK(c2.ok());

  PAPair a4 = build_lr_a4(Q);
  CheckOutcome c3 = check_center_annihilation(a4);
  CHECK(c3.status == CheckStatus::hypothesis_not_met);  // dim 3 < 5
  CheckOutcome c4 = check_centralizer_identity(a4);
  CHECK(c4.ok());

  // Vacuous on an abelian n.
  LieAlgebra ab = LieAlgebra::abelian(Q, 3);
  PAPair pair = PAPair::create(LieAlgebra::abelian(Q, 3), ab,
                               BilinearProduct::zero(Q, 3));
  CHECK(check_centralizer_identity(pair).ok());

  // Non-abelian g is a hypothesis violation, not a failure.
  PAPair f6 = build_pa52(6, {q(1), q(0), q(0)});
  CHECK(check_centralizer_identity(f6).status == CheckStatus::hypothesis_not_met);
}

TEST_CASE("fuzzed LR structures on heis5 are complete") {
  // Family: x.y = -{x,y}/2 + s(x,y) e5 with s symmetric and s(., e5) = 0.
  Rng rng(61);
  LieAlgebra h5 = LieAlgebra::heisenberg(Q, 2);
  for (int t = 0; t < 20; ++t) {
    BilinearProduct p(Q, 5);
    std::vector<std::vector<Scalar>> s(4, std::vector<Scalar>(4, Scalar::zero(Q)));
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) s[i][j] = s[j][i] = rng.scalar(Q);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        Vec v = vec_scale(q(-1, 2), h5.tensor().pair(i, j));
        if (i < 4 && j < 4) v[4] += s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        p.set_pair(i, j, v);
      }
    REQUIRE(check_pa(LieAlgebra::abelian(Q, 5), h5, p).ok);
    PAPair pair = PAPair::create(LieAlgebra::abelian(Q, 5), h5, p);
    CHECK(lr_completeness(h5, lr_from_pa(pair)));
    CHECK(check_center_annihilation(pair).ok());
    CHECK(check_centralizer_identity(pair, 25).ok());
    CHECK(symmetrize_to_n(pair).ok());
  }
}
