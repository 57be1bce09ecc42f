#include "postlie/symmetrize.hpp"

#include "postlie/rng.hpp"

namespace postlie {

BilinearProduct symmetrize(const PAPair& pair) {
  return pair.product().symmetrized();
}

namespace {

void operator_witness(const char* tag, std::vector<int> where,
                      const Matrix& lhs, const Matrix& rhs, Verdict& v) {
  if (lhs == rhs) return;
  for (int k = 0; k < lhs.cols(); ++k) {
    Vec l = lhs.col(k), r = rhs.col(k);
    if (!vec_eq(l, r)) {
      where.push_back(k);
      v.record({tag, std::move(where), l, r, vec_sub(r, l)});
      return;
    }
  }
}

void require_two_step(const LieAlgebra& a, const char* which) {
  if (!a.is_two_step())
    throw hypothesis_error(std::string(which) +
                           " is not nilpotent of class <= 2");
}

}  // namespace

GCompatibility check_g_compatibility(const LieAlgebra& g, const LieAlgebra& n,
                                     const BilinearProduct& prod) {
  GCompatibility out;
  const Field& f = prod.field();
  int d = prod.dim();

  // Operator form on ordered pairs (x, y).
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      Matrix lhs = Matrix::commutator(
          prod.left_operator_basis(x) + prod.right_operator_basis(x),
          g.adjoint_basis(y));
      Matrix rhs = g.adjoint(vec_add(prod.pair(x, y), prod.pair(y, x)));
      operator_witness("g-compat", {x, y}, lhs, rhs, out.operator_form);
    }

  // Element form on triples (x, y, z); antisymmetric in (y, z).
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = y + 1; z < d; ++z) {
        Vec ex = unit_vec(f, d, x);
        Vec lhs = vec_add(prod.mul(ex, g.tensor().pair(y, z)),
                          prod.mul(g.tensor().pair(y, z), ex));
        Vec ey = unit_vec(f, d, y), ez = unit_vec(f, d, z);
        Vec rhs = vec_sub(
            vec_add(g.bracket(ey, prod.pair(x, z)), g.bracket(ey, prod.pair(z, x))),
            vec_add(g.bracket(ez, prod.pair(x, y)), g.bracket(ez, prod.pair(y, x))));
        if (!vec_eq(lhs, rhs))
          out.element_form.record(
              {"g-compat-elem", {x, y, z}, lhs, rhs, vec_sub(rhs, lhs)});
      }

  // Alternative operator form on pairs (y, z).
  for (int y = 0; y < d; ++y)
    for (int z = 0; z < d; ++z) {
      Vec byz = g.tensor().pair(y, z);
      Matrix lhs = prod.left_operator(byz) + prod.right_operator(byz);
      Matrix sum_z = prod.left_operator_basis(z) + prod.right_operator_basis(z);
      Matrix sum_y = prod.left_operator_basis(y) + prod.right_operator_basis(y);
      Matrix rhs = g.adjoint_basis(y) * sum_z - g.adjoint_basis(z) * sum_y;
      operator_witness("g-compat-alt", {y, z}, lhs, rhs, out.alt_form);
    }
  return out;
}

GCompatibility check_g_compatibility(const PAPair& pair) {
  return check_g_compatibility(pair.g(), pair.n(), pair.product());
}

GCompatConsequences check_g_compat_consequences(const PAPair& pair) {
  GCompatConsequences out;
  int d = pair.dim();
  const Scalar two = Scalar::of_long(pair.field(), 2);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      Matrix sum_x = pair.left_op(x) + pair.right_op(x);
      Matrix sum_y = pair.left_op(y) + pair.right_op(y);
      Matrix lhs = Matrix::commutator(sum_x, pair.ad(y));
      Matrix rhs = Matrix::commutator(sum_y, pair.ad(x));
      operator_witness("g-compat-sym", {x, y}, lhs, rhs, out.symmetric_form);

      Matrix lhs2 = Matrix::commutator(pair.left_op(x), pair.ad(y)).scaled(two) +
                    Matrix::commutator(pair.ad(x), pair.left_op(y)).scaled(two);
      Matrix rhs2 = Matrix::commutator(pair.ad(y), pair.Ad(x)) +
                    Matrix::commutator(pair.Ad(y), pair.ad(x));
      operator_witness("g-compat-mixed", {x, y}, lhs2, rhs2, out.mixed_form);
    }
  return out;
}

NCompatibility check_n_compatibility(const LieAlgebra& g, const LieAlgebra& n,
                                     const BilinearProduct& prod) {
  NCompatibility out;
  int d = prod.dim();
  const Scalar half = Scalar::of_fraction(prod.field(), 1, 2);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      Matrix lhs = Matrix::commutator(g.adjoint_basis(x), n.adjoint_basis(y));
      Matrix rhs = n.adjoint(g.tensor().pair(x, y));
      operator_witness("n-compat-ad", {x, y}, lhs, rhs, out.ad_form);

      Matrix lhs2 = prod.left_operator(n.tensor().pair(x, y)) -
                    prod.left_operator(g.tensor().pair(x, y));
      Matrix rhs2 =
          (g.adjoint(n.tensor().pair(x, y)) +
           Matrix::commutator(g.adjoint_basis(y), prod.left_operator_basis(x)) +
           Matrix::commutator(prod.left_operator_basis(y), g.adjoint_basis(x)))
              .scaled(half);
      operator_witness("n-compat-l", {x, y}, lhs2, rhs2, out.left_form);
    }
  return out;
}

NCompatibility check_n_compatibility(const PAPair& pair) {
  return check_n_compatibility(pair.g(), pair.n(), pair.product());
}

SymmetrizationOutcome symmetrize_to_g(const PAPair& pair) {
  require_two_step(pair.g(), "g");
  require_two_step(pair.n(), "n");
  GCompatibility compat = check_g_compatibility(pair);
  SymmetrizationOutcome out;
  out.condition = compat.element_form;
  if (compat.ok()) out.product = symmetrize(pair);
  return out;
}

SymmetrizationOutcome symmetrize_to_n(const PAPair& pair) {
  require_two_step(pair.g(), "g");
  require_two_step(pair.n(), "n");
  NCompatibility compat = check_n_compatibility(pair);
  SymmetrizationOutcome out;
  out.condition = compat.ad_form;
  out.condition.merge(compat.left_form);
  if (compat.ok()) out.product = symmetrize(pair);
  return out;
}

SymmetrizationOutcome symmetrize_prelie(const LieAlgebra& g,
                                        const BilinearProduct& prod) {
  require_two_step(g, "g");
  Verdict pre = check_prelie(g, prod);
  if (!pre.ok)
    throw hypothesis_error("product is not a pre-Lie structure: " +
                           format_witness(pre.witnesses.front()));
  SymmetrizationOutcome out;
  int d = prod.dim();
  for (int i = 0; i < d; ++i) {
    Matrix L = prod.left_operator_basis(i);
    if (g.is_derivation(L)) continue;
    // Locate a failing Leibniz instance for the witness.
    for (int y = 0; y < d && out.condition.witnesses.size() < Verdict::max_witnesses; ++y)
      for (int z = y + 1; z < d; ++z) {
        Vec lhs = L.apply(g.tensor().pair(y, z));
        Vec rhs = vec_add(g.bracket(L.col(y), unit_vec(g.field(), d, z)),
                          g.bracket(unit_vec(g.field(), d, y), L.col(z)));
        if (!vec_eq(lhs, rhs)) {
          out.condition.record({"prelie-der", {i, y, z}, lhs, rhs, vec_sub(rhs, lhs)});
          y = d;
          break;
        }
      }
  }
  if (out.condition.ok) out.product = prod.symmetrized();
  return out;
}

bool lr_completeness(const LieAlgebra& n, const BilinearProduct& m) {
  require_two_step(n, "n");
  Verdict lr = check_lr(n, m);
  if (!lr.ok)
    throw hypothesis_error("product is not an LR-structure: " +
                           format_witness(lr.witnesses.front()));
  PAPair pair = pa_from_lr(n, m);
  return all_left_mults_nilpotent(pair);
}

CheckOutcome check_centralizer_identity(const PAPair& pair, int trials,
                                        std::uint64_t seed) {
  CheckOutcome out;
  if (!pair.g().is_abelian()) {
    out.status = CheckStatus::hypothesis_not_met;
    out.reason = "g is not abelian";
    return out;
  }
  if (!pair.n().is_two_step()) {
    out.status = CheckStatus::hypothesis_not_met;
    out.reason = "n is not nilpotent of class <= 2";
    return out;
  }
  const LieAlgebra& n = pair.n();
  const BilinearProduct& p = pair.product();
  int d = pair.dim();
  const Field& f = pair.field();

  auto check_triple = [&](const Vec& x, const Vec& pp, const Vec& qq,
                          std::vector<int> where) {
    Vec lhs = p.mul(x, n.bracket(pp, qq));
    if (!vec_is_zero(lhs))
      out.verdict.record({"centralizer-prod", std::move(where), lhs,
                          zero_vec(f, d), vec_neg(lhs)});
  };

  for (int x = 0; x < d; ++x)
    for (int i = 0; i < d; ++i) {
      if (!vec_is_zero(n.tensor().pair(x, i))) continue;
      for (int j = 0; j < d; ++j) {
        if (!vec_is_zero(n.tensor().pair(x, j))) continue;
        check_triple(unit_vec(f, d, x), unit_vec(f, d, i), unit_vec(f, d, j),
                     {x, i, j});
      }
    }

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Vec x = rng.vector(f, d);
    Subspace cent = kernel(n.adjoint(x));
    if (cent.dim() == 0) continue;
    auto sample = [&]() {
      Vec v = zero_vec(f, d);
      for (int b = 0; b < cent.dim(); ++b)
        v = vec_add(v, vec_scale(rng.scalar(f), cent.basis_vector(b)));
      return v;
    };
    // Random triples are reported without basis indices.
    check_triple(x, sample(), sample(), {});
  }

  if (!out.verdict.ok) out.status = CheckStatus::failed;
  return out;
}

CheckOutcome check_center_annihilation(const PAPair& pair) {
  CheckOutcome out;
  if (!pair.g().is_abelian()) {
    out.status = CheckStatus::hypothesis_not_met;
    out.reason = "g is not abelian";
    return out;
  }
  if (!pair.n().is_heisenberg() || pair.dim() < 5) {
    out.status = CheckStatus::hypothesis_not_met;
    out.reason = "n is not a Heisenberg algebra of dimension >= 5";
    return out;
  }
  const BilinearProduct& p = pair.product();
  int d = pair.dim();
  const Field& f = pair.field();
  Subspace z = pair.n().center();
  for (int zi = 0; zi < z.dim(); ++zi) {
    Vec zv = z.basis_vector(zi);
    for (int j = 0; j < d; ++j) {
      Vec ej = unit_vec(f, d, j);
      Vec left = p.mul(zv, ej);
      if (!vec_is_zero(left))
        out.verdict.record({"center-prod", {zi, j}, left, zero_vec(f, d), vec_neg(left)});
      Vec right = p.mul(ej, zv);
      if (!vec_is_zero(right))
        out.verdict.record({"center-prod", {j, zi}, right, zero_vec(f, d), vec_neg(right)});
    }
  }
  if (!out.verdict.ok) out.status = CheckStatus::failed;
  return out;
}

}  // namespace postlie
