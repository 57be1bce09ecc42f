// Acceptance suite: end-to-end regressions over the catalog, the
// counterexamples, the property batteries, and the finite-field
// corroboration. Prints one pass/fail line per criterion and exits
// nonzero if any fails. All checks are exact; the per-criterion wall-time
// budgets are asserted as part of the criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "postlie/catalog.hpp"
#include "postlie/ffsearch.hpp"
#include "postlie/grading.hpp"
#include "postlie/rng.hpp"
#include "postlie/symmetrize.hpp"

using namespace postlie;

namespace {

const Field Q = Field::rationals();
Scalar q(long n, long d = 1) { return Scalar::of_fraction(Q, n, d); }

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void(std::vector<std::string>&)> body;
};

void expect(std::vector<std::string>& errs, bool cond, const std::string& msg) {
  if (!cond) errs.push_back(msg);
}

// ---- shared corpora ----

PAPair random_family(Rng& rng, int family) {
  switch (family) {
    case 1:
      return build_pa52(1, {rng.scalar(Q), rng.nonzero_scalar(Q),
                            rng.nonzero_scalar(Q), rng.scalar(Q), rng.scalar(Q)});
    case 2:
      return build_pa52(2, {rng.scalar(Q), rng.nonzero_scalar(Q), rng.scalar(Q),
                            rng.scalar(Q)});
    case 3:
      return build_pa52(3, {rng.nonzero_scalar(Q), rng.scalar(Q),
                            rng.nonzero_scalar(Q), rng.scalar(Q), rng.scalar(Q)});
    case 4: {
      Scalar alpha = rng.scalar(Q), gamma = rng.scalar(Q);
      if (rng.int_in(0, 1))
        alpha = Scalar::zero(Q);
      else
        gamma = Scalar::zero(Q);
      return build_pa52(4, {rng.nonzero_scalar(Q), alpha, rng.scalar(Q), gamma,
                            rng.scalar(Q)});
    }
    case 5:
      return build_pa52(5, {rng.scalar(Q), rng.nonzero_scalar(Q), rng.scalar(Q),
                            rng.scalar(Q)});
    default:
      return build_pa52(6, {rng.nonzero_scalar(Q), rng.scalar(Q), rng.scalar(Q)});
  }
}

// A scaled variant of the 5-dim counterexample: e3.e3 = t e2 keeps the
// axioms and still fails the g-compatibility identity for every t != 0.
PAPair ex45_variant(const Scalar& t) {
  PAPair base = build_ex45(Q);
  BilinearProduct p = base.product();
  p.set_pair(2, 2, vec_scale(t, unit_vec(Q, 5, 1)));
  return PAPair::create(base.g(), base.n(), p);
}

// LR-family fuzz on heis5: x.y = -{x,y}/2 + s(x,y) e5, s symmetric with
// s(., e5) = 0.
PAPair heis5_lr_fuzz(Rng& rng) {
  LieAlgebra h5 = LieAlgebra::heisenberg(Q, 2);
  BilinearProduct p(Q, 5);
  std::vector<std::vector<Scalar>> s(4, std::vector<Scalar>(4, Scalar::zero(Q)));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) s[i][j] = s[j][i] = rng.scalar(Q);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Vec v = vec_scale(q(-1, 2), h5.tensor().pair(i, j));
      if (i < 4 && j < 4)
        v[4] += s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      p.set_pair(i, j, v);
    }
  return PAPair::create(LieAlgebra::abelian(Q, 5), h5, p);
}

std::vector<std::pair<std::string, PAPair>> catalog_corpus(Rng& rng) {
  std::vector<std::pair<std::string, PAPair>> corpus;
  corpus.emplace_back("ex2.5(1,0,0)", build_ex25(q(1), q(0), q(0)));
  corpus.emplace_back("ex2.5(0,0,5)", build_ex25(q(0), q(0), q(5)));
  corpus.emplace_back("ex3.6(2,0,0,0)", build_ex36(q(2), q(0), q(0), q(0)));
  corpus.emplace_back("ex4.5", build_ex45(Q));
  corpus.emplace_back("ex4.7", build_ex47(Q));
  for (int family = 1; family <= 6; ++family)
    for (int t = 0; t < 3; ++t)
      corpus.emplace_back("pa52." + std::to_string(family) + "#" + std::to_string(t),
                          random_family(rng, family));
  corpus.emplace_back("lr.halfbracket(m=1)",
                      build_half_bracket_pair(LieAlgebra::heisenberg(Q, 1)));
  corpus.emplace_back("lr.halfbracket(m=2)",
                      build_half_bracket_pair(LieAlgebra::heisenberg(Q, 2)));
  corpus.emplace_back("lr.A4", build_lr_a4(Q));
  LieAlgebra h3 = LieAlgebra::heisenberg(Q, 1);
  corpus.emplace_back("zero-on-heis3",
                      PAPair::create(h3, h3, BilinearProduct::zero(Q, 3)));
  return corpus;
}

// ---- criterion 1 ----

void criterion_dim2_family(std::vector<std::string>& errs) {
  Rng rng(1001);
  int checked = 0;
  while (checked < 200) {
    Scalar alpha = Scalar::zero(Q), beta = Scalar::zero(Q), gamma = Scalar::zero(Q);
    switch (checked % 4) {
      case 0:  // beta = gamma = 0, alpha free
        alpha = rng.scalar(Q);
        break;
      case 1:  // alpha = beta = 0, gamma free
        gamma = rng.scalar(Q);
        break;
      case 2: {  // beta in {0, -1}, alpha and gamma with alpha*gamma = 0
        beta = rng.int_in(0, 1) ? q(-1) : q(0);
        if (rng.int_in(0, 1))
          alpha = rng.scalar(Q);
        else
          gamma = rng.scalar(Q);
        break;
      }
      default:  // generic: alpha != 0, gamma determined
        alpha = rng.nonzero_scalar(Q);
        beta = rng.scalar(Q);
        gamma = beta * (beta + q(1)) / alpha;
        break;
    }
    PAPair pair = build_ex25(alpha, beta, gamma);
    ++checked;

    Subspace al = ann_left(pair), ar = ann_right(pair), h = h0(pair);
    expect(errs, al.dim() == 1 && ar.dim() == 1 && h.dim() == 1,
           "annihilator dimensions differ from 1");
    bool bg_zero = beta.is_zero() && gamma.is_zero();
    Vec span_l = bg_zero ? Vec{q(1), -alpha} : Vec{gamma, -beta};
    expect(errs, al == Subspace::span(Q, 2, {span_l}),
           "left annihilator span mismatch");
    bool ab_zero = alpha.is_zero() && beta.is_zero();
    Vec span_r = ab_zero ? Vec{gamma, q(-1)} : Vec{beta, -alpha};
    Subspace expect_r = Subspace::span(Q, 2, {span_r});
    expect(errs, ar == expect_r, "right annihilator span mismatch");
    expect(errs, h == expect_r, "invariant space differs from right annihilator");
  }

  // 200 violating triples must fail the axioms.
  LieAlgebra g = LieAlgebra::abelian(Q, 2);
  LieAlgebra n = LieAlgebra::solvable_r2(Q);
  int violating = 0;
  while (violating < 200) {
    Scalar alpha = rng.scalar(Q), beta = rng.scalar(Q), gamma = rng.scalar(Q);
    if (alpha * gamma == beta * (beta + q(1))) continue;
    BilinearProduct p(Q, 2);
    p.set_pair(0, 0, {alpha, q(0)});
    p.set_pair(0, 1, {beta, q(0)});
    p.set_pair(1, 0, {beta + q(1), q(0)});
    p.set_pair(1, 1, {gamma, q(0)});
    expect(errs, !check_pa(g, n, p).ok, "violating triple passed the axioms");
    ++violating;
  }
}

// ---- criterion 2 ----

void criterion_solvable_pair(std::vector<std::string>& errs) {
  Rng rng(1002);
  for (const Scalar& lambda : {q(1), q(2), q(-1), q(1, 2)}) {
    for (int t = 0; t < 10; ++t) {
      PAPair pair = build_ex36(lambda, rng.scalar(Q), rng.scalar(Q), rng.scalar(Q));
      expect(errs, pair.left_op(0).trace() == q(2) * lambda,
             "tr L(e1) != 2 lambda");
      expect(errs, !all_left_mults_nilpotent(pair),
             "left action unexpectedly nilpotent");
    }
  }
}

// ---- criterion 3 ----

void criterion_counterexamples(std::vector<std::string>& errs) {
  PAPair e45 = build_ex45(Q);
  GCompatibility compat = check_g_compatibility(e45);
  expect(errs, !compat.ok(), "5-dim pair unexpectedly satisfies g-compat");
  expect(errs, compat.forms_agree(), "equivalent forms disagree");
  if (!compat.element_form.witnesses.empty()) {
    const Witness& w = compat.element_form.witnesses.front();
    expect(errs, (w.where == std::vector<int>{2, 0, 2}),
           "first witness is not (e3,e1,e3)");
    expect(errs, format_vec(w.residual) == "2*e5", "residual is not 2*e5");
  } else {
    errs.push_back("no witness recorded for the 5-dim counterexample");
  }

  PAPair e47 = build_ex47(Q);
  NCompatibility ncomp = check_n_compatibility(e47);
  expect(errs, !ncomp.ad_form.ok, "3-dim pair unexpectedly satisfies the ad condition");
  bool witness_found = false;
  for (const Witness& w : ncomp.ad_form.witnesses)
    if (w.where.size() == 3 && w.where[0] == 1 && w.where[1] == 2 &&
        w.where[2] == 1 && format_vec(w.lhs) == "e3" && format_vec(w.rhs) == "0")
      witness_found = true;
  expect(errs, witness_found, "(e2,e3) witness producing e3 vs 0 not reported");
}

// ---- criterion 4 ----

void criterion_family_suite(std::vector<std::string>& errs) {
  Rng rng(1004);
  const Scalar minus_half = q(-1, 2);
  for (int t = 0; t < 500; ++t) {
    int family = 1 + static_cast<int>(t % 6);
    PAPair pair = random_family(rng, family);  // construction checks the axioms
    const LieAlgebra& g = pair.g();
    const LieAlgebra& n = pair.n();
    const BilinearProduct& p = pair.product();

    if (pair.left_op(2) != pair.Ad(2).scaled(minus_half)) {
      errs.push_back("family " + std::to_string(family) + ": L(e3) rule violated");
      continue;
    }
    if (!all_left_mults_nilpotent(pair)) {
      errs.push_back("family " + std::to_string(family) + ": L not nilpotent");
      continue;
    }
    // x.{y,z} = 0 and [x,y].z + z.[x,y] = 0 on all basis triples (the
    // second is the elementwise form of L([x,y]) + R([x,y]) = 0).
    bool triples_ok = true;
    for (int x = 0; x < 3 && triples_ok; ++x)
      for (int y = 0; y < 3 && triples_ok; ++y)
        for (int z = 0; z < 3; ++z) {
          Vec ex = unit_vec(Q, 3, x), ez = unit_vec(Q, 3, z);
          Vec b = g.tensor().pair(x, y);
          if (!vec_is_zero(p.mul(ex, n.tensor().pair(y, z))) ||
              !vec_is_zero(vec_add(p.mul(b, ez), p.mul(ez, b)))) {
            triples_ok = false;
            break;
          }
        }
    if (!triples_ok) {
      errs.push_back("family " + std::to_string(family) + ": triple identity violated");
      continue;
    }
    if (!check_cpa(g, symmetrize(pair)).ok)
      errs.push_back("family " + std::to_string(family) +
                     ": symmetrization is not commutative post-Lie on g");
  }
}

// ---- criterion 5 ----

void criterion_iff_properties(std::vector<std::string>& errs) {
  Rng rng(1005);
  std::vector<PAPair> pairs;
  for (auto& [name, pair] : catalog_corpus(rng)) {
    (void)name;
    pairs.push_back(pair);
  }
  // 100 fuzzed valid pairs: family draws, scaled 5-dim variants, LR fuzz.
  for (int t = 0; t < 80; ++t) pairs.push_back(random_family(rng, 1 + t % 6));
  for (int t = 0; t < 10; ++t) pairs.push_back(ex45_variant(rng.nonzero_scalar(Q)));
  for (int t = 0; t < 10; ++t) pairs.push_back(heis5_lr_fuzz(rng));

  int both_directions_g = 0, both_directions_n = 0;
  for (const PAPair& pair : pairs) {
    GCompatibility gcomp = check_g_compatibility(pair);
    expect(errs, gcomp.forms_agree(), "equivalent g-compat forms disagree");
    if (!pair.g().is_two_step() || !pair.n().is_two_step()) continue;
    BilinearProduct sym = symmetrize(pair);
    bool cpa_g = check_cpa(pair.g(), sym).ok;
    expect(errs, gcomp.ok() == cpa_g, "g-direction equivalence violated");
    if (cpa_g) ++both_directions_g;

    NCompatibility ncomp = check_n_compatibility(pair);
    bool cpa_n = check_cpa(pair.n(), sym).ok;
    expect(errs, ncomp.ok() == cpa_n, "n-direction equivalence violated");
    if (!cpa_n) ++both_directions_n;
  }
  // Both truth values of both equivalences must actually occur.
  expect(errs, both_directions_g > 0, "no positive g-direction instance");
  expect(errs, both_directions_g < static_cast<int>(pairs.size()),
         "no negative g-direction instance");
  expect(errs, both_directions_n > 0, "no negative n-direction instance");
}

// ---- criterion 6 ----

void criterion_nilpotency_structure(std::vector<std::string>& errs) {
  Rng rng(1006);
  std::vector<std::pair<std::string, PAPair>> corpus = catalog_corpus(rng);

  // Extra instances with trivial invariant space and nilpotent g.
  LieAlgebra ab1 = LieAlgebra::abelian(Q, 1);
  BilinearProduct unit1(Q, 1);
  unit1.set_pair(0, 0, {q(1)});
  corpus.emplace_back("unital-dim1", PAPair::create(ab1, ab1, unit1));
  LieAlgebra ab2 = LieAlgebra::abelian(Q, 2);
  BilinearProduct dual(Q, 2);
  dual.set_pair(0, 0, unit_vec(Q, 2, 0));
  dual.set_pair(0, 1, unit_vec(Q, 2, 1));
  dual.set_pair(1, 0, unit_vec(Q, 2, 1));
  corpus.emplace_back("dual-numbers", PAPair::create(ab2, ab2, dual));

  // All finds of the F3 enumeration.
  Field f3 = Field::prime(3);
  SearchSpec spec{LieAlgebra::heisenberg(f3, 1), LieAlgebra::heisenberg(f3, 1),
                  SearchStrategy::hom_through_derivations, std::nullopt,
                  std::nullopt, 2};
  SearchResult finds = enumerate_pa(spec);
  for (std::size_t i = 0; i < finds.found.size(); ++i)
    corpus.emplace_back("f3-find-" + std::to_string(i),
                        PAPair::create(spec.g, spec.n, finds.found[i]));

  int h0_zero_cases = 0;
  for (const auto& [name, pair] : corpus) {
    if (!pair.g().is_nilpotent()) continue;
    expect(errs, pair.n().is_solvable(), name + ": n is not solvable");
    if (h0(pair).is_zero()) {
      ++h0_zero_cases;
      expect(errs, pair.n().is_nilpotent(), name + ": h0 = 0 but n not nilpotent");
    }
  }
  expect(errs, h0_zero_cases > 0, "no instance with trivial invariant space");
}

// ---- criterion 7 ----

void criterion_finite_field(std::vector<std::string>& errs) {
  // dim-2 enumeration over F5: exactly the 30-member family.
  Field f5 = Field::prime(5);
  SearchSpec spec{LieAlgebra::abelian(f5, 2), LieAlgebra::solvable_r2(f5),
                  SearchStrategy::raw_tensor, std::nullopt, std::nullopt, 1};
  SearchResult r = enumerate_pa(spec);
  expect(errs, r.candidates == 390625, "candidate count is not 5^8");
  expect(errs, r.found.size() == 30, "dim-2 count over F5 is not 30");

  std::set<std::vector<long>> expected;
  for (long a = 0; a < 5; ++a)
    for (long b = 0; b < 5; ++b)
      for (long c = 0; c < 5; ++c) {
        if ((a * c) % 5 != (b * (b + 1)) % 5) continue;
        PAPair member = build_ex25(Scalar::of_long(f5, a), Scalar::of_long(f5, b),
                                   Scalar::of_long(f5, c));
        const BilinearProduct& p = member.product();
        std::vector<long> key;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) key.push_back(p.at(i, j, k).residue());
        expected.insert(key);
      }
  expect(errs, expected.size() == 30, "family count over F5 is not 30");
  std::set<std::vector<long>> got;
  for (const BilinearProduct& p : r.found) {
    std::vector<long> key;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) key.push_back(p.at(i, j, k).residue());
    got.insert(key);
  }
  expect(errs, got == expected, "accepted set differs from the 2-dim family");

  // (heis3, heis3) corroboration over F3 within its budget.
  CorroborationReport rep = corroborate_heisenberg_pairs(3, 2);
  expect(errs, rep.candidates == 531441, "hom candidate space is not 3^12");
  expect(errs, rep.ok(), "corroboration reported violations");
  expect(errs, rep.family_missing == 0, "reduced family member missing");
  for (const std::string& d : rep.details) errs.push_back("corroboration: " + d);
}

// ---- criterion 8 ----

void criterion_lr_completeness(std::vector<std::string>& errs) {
  Rng rng(1008);
  LieAlgebra h5 = LieAlgebra::heisenberg(Q, 2);
  PAPair half = build_half_bracket_pair(h5);
  expect(errs, lr_completeness(h5, lr_from_pa(half)),
         "half-bracket structure on heis5 is not complete");
  for (int t = 0; t < 20; ++t) {
    PAPair pair = heis5_lr_fuzz(rng);
    expect(errs, lr_completeness(h5, lr_from_pa(pair)),
           "fuzzed LR structure on heis5 is not complete");
    expect(errs, check_center_annihilation(pair).ok(),
           "fuzzed LR structure does not annihilate the center");
  }
  PAPair a4 = build_lr_a4(Q);
  expect(errs, !lr_completeness(a4.n(), lr_from_pa(a4)),
         "the dim-3 exceptional structure is unexpectedly complete");
}

// ---- criterion 9 ----

void criterion_gradings(std::vector<std::string>& errs) {
  Grading g3 = make_grading(LieAlgebra::heisenberg(Q, 1), {{1, 0}, {0, 1}, {1, 1}});
  Grading g5 = make_grading(LieAlgebra::heisenberg(Q, 2),
                            {{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 1}});
  expect(errs, grading_check(g3).ok, "heis3 grading incompatible");
  expect(errs, grading_check(g5).ok, "heis5 grading incompatible");

  expect(errs, nilpotency_class_bound({{1}}) == 1, "bound for |X| = 1");
  expect(errs, nilpotency_class_bound({{1}, {2}}) == 16, "bound for |X| = 2");
  expect(errs, nilpotency_class_bound({{1, 0}, {0, 1}, {1, 1}}) == 6561,
         "bound for |X| = 3");

  StructureTensor c(Q, 4);
  c.set_bracket(0, 1, unit_vec(Q, 4, 2));
  c.set_bracket(0, 2, unit_vec(Q, 4, 3));
  std::vector<Grading> gradings = {
      g3, g5, make_grading(LieAlgebra::create(c), {{1}, {2}, {3}, {4}}),
      make_grading(LieAlgebra::abelian(Q, 2), {{7}, {7}})};
  for (const Grading& gr : gradings) {
    if (!grading_check(gr).ok) {
      errs.push_back("constructed grading incompatible");
      continue;
    }
    Support x = support(gr);
    if (!is_arithmetically_free(x)) {
      errs.push_back("constructed support not arithmetically-free");
      continue;
    }
    auto cls = gr.algebra.nilpotency_class();
    expect(errs, cls.has_value(), "graded algebra not nilpotent");
    if (cls)
      expect(errs, mpz_class(*cls) <= nilpotency_class_bound(x),
             "nilpotency class exceeds the bound");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1. dim-2 family regression (200 admissible + 200 violating draws)", 1.0,
       criterion_dim2_family},
      {"2. solvable/Heisenberg pair: valid but non-nilpotent left action", 1.0,
       criterion_solvable_pair},
      {"3. counterexample fidelity (witness tuples and residuals)", 1.0,
       criterion_counterexamples},
      {"4. classification family suite (500 admissible draws)", 10.0,
       criterion_family_suite},
      {"5. symmetrization equivalences in both directions", 10.0,
       criterion_iff_properties},
      {"6. nilpotency structure over the verified corpus", 30.0,
       criterion_nilpotency_structure},
      {"7. finite-field corroboration (F5 dim-2 count, F3 Heisenberg pairs)", 60.0,
       criterion_finite_field},
      {"8. LR completeness on heis5 and the dim-3 exception", 10.0,
       criterion_lr_completeness},
      {"9. gradings: compatibility, bounds, class comparison", 1.0,
       criterion_gradings},
  };

  int failed = 0;
  for (const Criterion& crit : criteria) {
    std::vector<std::string> errs;
    auto start = std::chrono::steady_clock::now();
    try {
      crit.body(errs);
    } catch (const std::exception& e) {
      errs.push_back(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > crit.budget_seconds)
      errs.push_back("time budget exceeded: " + std::to_string(elapsed) + " s > " +
                     std::to_string(crit.budget_seconds) + " s");
    std::ostringstream line;
    line << (errs.empty() ? "PASS" : "FAIL") << "  " << crit.name << "  ("
         << elapsed << " s)";
    std::cout << line.str() << "\n";
    for (const std::string& e : errs) std::cout << "      - " << e << "\n";
    if (!errs.empty()) ++failed;
  }
  if (failed) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
