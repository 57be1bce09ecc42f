#include "postlie/catalog.hpp"

#include <algorithm>

namespace postlie {

namespace {

Scalar sc(const Field& f, long v) { return Scalar::of_long(f, v); }

Matrix mat3(const Field& f, const std::vector<Scalar>& rows) {
  Matrix m(f, 3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r) * 3 + c];
  return m;
}

LieAlgebra heis_from_r(const std::vector<Scalar>& r) {
  const Field& f = r.front().field();
  StructureTensor c(f, 3);
  c.set_bracket(0, 1, {r[0], r[1], r[2]});
  c.set_bracket(0, 2, {r[3], r[4], r[5]});
  c.set_bracket(1, 2, {r[6], r[7], r[8]});
  return LieAlgebra::create(std::move(c));
}

void require_nonzero(const Scalar& s, const char* predicate) {
  if (s.is_zero()) throw constraint_error(std::string("constraint violated: ") + predicate);
}

}  // namespace

PAPair build_ex25(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  const Field& f = alpha.field();
  Scalar one = Scalar::one(f);
  if (alpha * gamma != beta * (beta + one))
    throw constraint_error("constraint violated: alpha*gamma == beta*(beta+1)");
  LieAlgebra g = LieAlgebra::abelian(f, 2);
  LieAlgebra n = LieAlgebra::solvable_r2(f);
  BilinearProduct p(f, 2);
  p.set_pair(0, 0, {alpha, sc(f, 0)});
  p.set_pair(0, 1, {beta, sc(f, 0)});
  p.set_pair(1, 0, {beta + one, sc(f, 0)});
  p.set_pair(1, 1, {gamma, sc(f, 0)});
  return PAPair::create(std::move(g), std::move(n), std::move(p));
}

PAPair build_ex36(const Scalar& lambda, const Scalar& alpha,
                  const Scalar& beta, const Scalar& gamma) {
  const Field& f = lambda.field();
  require_nonzero(lambda, "lambda != 0");
  Scalar one = Scalar::one(f);
  LieAlgebra g = LieAlgebra::solvable_r3(lambda);
  LieAlgebra n = LieAlgebra::heisenberg(f, 1);
  BilinearProduct p(f, 3);
  p.set_pair(0, 0, {lambda - one, alpha, beta});
  p.set_pair(0, 1, {sc(f, 0), one, gamma});
  p.set_pair(0, 2, {sc(f, 0), sc(f, 0), lambda});
  p.set_pair(1, 0, {sc(f, 0), sc(f, 0), gamma + one});
  return PAPair::create(std::move(g), std::move(n), std::move(p));
}

PAPair build_ex45(const Field& f) {
  StructureTensor cg(f, 5);
  cg.set_bracket(0, 1, unit_vec(f, 5, 4));
  cg.set_bracket(2, 3, unit_vec(f, 5, 4));
  StructureTensor cn(f, 5);
  cn.set_bracket(0, 3, unit_vec(f, 5, 4));
  cn.set_bracket(1, 2, unit_vec(f, 5, 4));
  BilinearProduct p(f, 5);
  p.set_pair(1, 0, vec_neg(unit_vec(f, 5, 4)));
  p.set_pair(2, 1, unit_vec(f, 5, 4));
  p.set_pair(2, 2, unit_vec(f, 5, 1));
  p.set_pair(3, 0, unit_vec(f, 5, 4));
  p.set_pair(3, 2, vec_neg(unit_vec(f, 5, 4)));
  return PAPair::create(LieAlgebra::create(std::move(cg)),
                        LieAlgebra::create(std::move(cn)), std::move(p));
}

PAPair build_ex47(const Field& f) {
  return build_pa52(6, {sc(f, 1), sc(f, 0), sc(f, 0)});
}

LieAlgebra build_heis_type_a(const Scalar& r1, const Scalar& r2, const Scalar& r3) {
  require_nonzero(r3, "r3 != 0");
  return heis_from_r({r1, r2, r3, -(r1 * r2) / r3, -(r2 * r2) / r3, -r2,
                      (r1 * r1) / r3, (r1 * r2) / r3, r1});
}

LieAlgebra build_heis_type_a0(const Scalar& r1, const Scalar& r3) {
  return build_heis_type_a(r1, Scalar::zero(r1.field()), r3);
}

LieAlgebra build_heis_type_b(const Scalar& r4, const Scalar& r5) {
  require_nonzero(r5, "r5 != 0");
  const Field& f = r4.field();
  Scalar z = sc(f, 0);
  return heis_from_r({z, z, z, r4, r5, z, -(r4 * r4) / r5, -r4, z});
}

LieAlgebra build_heis_type_c(const Scalar& r7) {
  require_nonzero(r7, "r7 != 0");
  const Field& f = r7.field();
  Scalar z = sc(f, 0);
  return heis_from_r({z, z, z, z, z, z, r7, z, z});
}

PAPair build_pa52(int family, const std::vector<Scalar>& params) {
  if (params.empty()) throw constraint_error("missing parameters");
  const Field& f = params.front().field();
  Scalar z = sc(f, 0), one = sc(f, 1), two = sc(f, 2);
  Scalar half = Scalar::of_fraction(f, 1, 2);

  LieAlgebra g = LieAlgebra::heisenberg(f, 1);
  std::optional<LieAlgebra> n;
  std::optional<Matrix> L1, L2;

  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw constraint_error("wrong parameter count for family " +
                             std::to_string(family));
  };

  switch (family) {
    case 1: {
      need(5);
      const Scalar &r1 = params[0], &r2 = params[1], &r3 = params[2],
                   &alpha = params[3], &beta = params[4];
      require_nonzero(r2, "r2 != 0");
      require_nonzero(r3, "r3 != 0");
      n = build_heis_type_a(r1, r2, r3);
      Scalar r2sq = r2 * r2;
      Scalar top = two * r1 * alpha + r2sq;  // 2 r1 alpha + r2^2
      L1 = mat3(f, {r1 * alpha / r2, -(r1 * top) / (two * r2sq), r1 * r2 / (two * r3),
                    alpha, -top / (two * r2), r2sq / (two * r3),
                    beta, -(two * r1 * beta + r2 * r3) / (two * r2), r2 * half});
      Scalar top2 = r2sq - two * r1 * alpha;  // r2^2 - 2 r1 alpha
      L2 = mat3(f, {r1 * top2 / (two * r2sq), r1 * r1 * r1 * alpha / (r2 * r2sq),
                    -(r1 * r1) / (two * r3),
                    top2 / (two * r2), r1 * r1 * alpha / r2sq, -(r1 * r2) / (two * r3),
                    (r2 * (r3 - two) - two * r1 * beta) / (two * r2),
                    r1 * (r1 * beta + r2) / r2sq, -r1 * half});
      break;
    }
    case 2: {
      need(4);
      const Scalar &r1 = params[0], &r3 = params[1], &alpha = params[2],
                   &beta = params[3];
      require_nonzero(r3, "r3 != 0");
      n = build_heis_type_a0(r1, r3);
      L1 = mat3(f, {z, -r1 * half, z,
                    z, z, z,
                    z, (two - r3) * half, z});
      L2 = mat3(f, {r1 * half, alpha, -(r1 * r1) / (two * r3),
                    z, z, z,
                    r3 * half, beta, -r1 * half});
      break;
    }
    case 3: {
      need(5);
      const Scalar &r3 = params[0], &alpha = params[1], &beta = params[2],
                   &gamma = params[3], &delta = params[4];
      require_nonzero(r3, "r3 != 0");
      require_nonzero(beta, "beta != 0");
      n = build_heis_type_a(z, z, r3);
      Scalar bsq = beta * beta;
      L1 = mat3(f, {alpha, -(alpha * alpha) / beta, z,
                    beta, -alpha, z,
                    gamma, delta, z});
      L2 = mat3(f, {-(alpha * alpha) / beta, alpha * alpha * alpha / bsq, z,
                    -alpha, alpha * alpha / beta, z,
                    r3 - one + delta,
                    alpha * (beta * (one - r3) - alpha * gamma - two * beta * delta) / bsq,
                    z});
      break;
    }
    case 4: {
      need(5);
      const Scalar &r3 = params[0], &alpha = params[1], &beta = params[2],
                   &gamma = params[3], &delta = params[4];
      require_nonzero(r3, "r3 != 0");
      if (!(alpha * gamma).is_zero())
        throw constraint_error("constraint violated: alpha*gamma == 0");
      n = build_heis_type_a(z, z, r3);
      L1 = mat3(f, {z, z, z,
                    z, z, z,
                    alpha, beta, z});
      L2 = mat3(f, {z, gamma, z,
                    z, z, z,
                    r3 - one + beta, delta, z});
      break;
    }
    case 5: {
      need(4);
      const Scalar &r4 = params[0], &r5 = params[1], &alpha = params[2],
                   &beta = params[3];
      require_nonzero(r5, "r5 != 0");
      n = build_heis_type_b(r4, r5);
      Scalar r5sq = r5 * r5;
      L1 = mat3(f, {r4 * alpha / r5, -(r4 * r4 * alpha) / r5sq, -r4 * half,
                    alpha, -(r4 * alpha) / r5, -r5 * half,
                    beta, -(r4 * beta) / r5, z});
      L2 = mat3(f, {-(r4 * r4 * alpha) / r5sq, r4 * r4 * r4 * alpha / (r5 * r5sq),
                    r4 * r4 / (two * r5),
                    -(r4 * alpha) / r5, r4 * r4 * alpha / r5sq, r4 * half,
                    -(r4 * beta + r5) / r5, r4 * (r4 * beta + r5) / r5sq, z});
      break;
    }
    case 6: {
      need(3);
      const Scalar &r7 = params[0], &alpha = params[1], &beta = params[2];
      require_nonzero(r7, "r7 != 0");
      n = build_heis_type_c(r7);
      L1 = mat3(f, {z, z, z,
                    z, z, z,
                    z, one, z});
      L2 = mat3(f, {z, alpha, -r7 * half,
                    z, z, z,
                    z, beta, z});
      break;
    }
    default:
      throw unknown_entry_error("no such family: " + std::to_string(family));
  }

  Matrix L3 = n->adjoint_basis(2).scaled(-half);
  BilinearProduct prod = BilinearProduct::from_left_operators({*L1, *L2, L3});
  return PAPair::create(std::move(g), std::move(*n), std::move(prod));
}

PAPair build_half_bracket_pair(const LieAlgebra& n) {
  if (!n.is_two_step())
    throw hypothesis_error("half-bracket pair needs n nilpotent of class <= 2");
  const Field& f = n.field();
  int d = n.dim();
  Scalar mhalf = Scalar::of_fraction(f, -1, 2);
  BilinearProduct p(f, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      p.set_pair(i, j, vec_scale(mhalf, n.tensor().pair(i, j)));
  return PAPair::create(LieAlgebra::abelian(f, d), n, std::move(p));
}

PAPair build_lr_a4(const Field& f) {
  LieAlgebra n = LieAlgebra::heisenberg(f, 1);
  BilinearProduct p(f, 3);
  p.set_pair(1, 0, unit_vec(f, 3, 2));
  p.set_pair(1, 1, vec_neg(unit_vec(f, 3, 1)));
  p.set_pair(1, 2, vec_neg(unit_vec(f, 3, 2)));
  p.set_pair(2, 1, vec_neg(unit_vec(f, 3, 2)));
  return PAPair::create(LieAlgebra::abelian(f, 3), std::move(n), std::move(p));
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"ex2.5", "pair", {"alpha", "beta", "gamma"},
       "alpha*gamma == beta*(beta+1)",
       "2-dim pair (abelian g, solvable n): the full product family with "
       "1-dimensional annihilators"},
      {"ex3.6", "pair", {"lambda", "alpha", "beta", "gamma"}, "lambda != 0",
       "3-dim pair (solvable non-nilpotent g, Heisenberg n) with "
       "non-nilpotent L(e1)"},
      {"ex4.5", "pair", {}, "",
       "5-dim Heisenberg pair whose symmetrization fails the "
       "g-compatibility identity"},
      {"ex4.7", "pair", {}, "",
       "3-dim Heisenberg pair whose symmetrization fails the n-side "
       "conditions"},
      {"heis.typeA", "lie", {"r1", "r2", "r3"}, "r3 != 0",
       "Heisenberg-isomorphic bracket, generic type A constants"},
      {"heis.typeA0", "lie", {"r1", "r3"}, "r3 != 0",
       "Heisenberg-isomorphic bracket, type A with r2 = 0"},
      {"heis.typeB", "lie", {"r4", "r5"}, "r5 != 0",
       "Heisenberg-isomorphic bracket, type B constants"},
      {"heis.typeC", "lie", {"r7"}, "r7 != 0",
       "Heisenberg-isomorphic bracket, type C constants"},
      {"pa52.1", "pair", {"r1", "r2", "r3", "alpha", "beta"},
       "r2 != 0, r3 != 0", "post-Lie family 1 on (heis3, type A n)"},
      {"pa52.2", "pair", {"r1", "r3", "alpha", "beta"}, "r3 != 0",
       "post-Lie family 2 on (heis3, type A n with r2 = 0)"},
      {"pa52.3", "pair", {"r3", "alpha", "beta", "gamma", "delta"},
       "r3 != 0, beta != 0", "post-Lie family 3 on (heis3, type A n with r1 = r2 = 0)"},
      {"pa52.4", "pair", {"r3", "alpha", "beta", "gamma", "delta"},
       "r3 != 0, alpha*gamma == 0",
       "post-Lie family 4 on (heis3, type A n with r1 = r2 = 0)"},
      {"pa52.5", "pair", {"r4", "r5", "alpha", "beta"}, "r5 != 0",
       "post-Lie family 5 on (heis3, type B n)"},
      {"pa52.6", "pair", {"r7", "alpha", "beta"}, "r7 != 0",
       "post-Lie family 6 on (heis3, type C n)"},
      {"lr.halfbracket", "pair", {"m"}, "m >= 1",
       "pair (abelian, heis_{2m+1}) with product x.y = -{x,y}/2"},
      {"lr.A4", "pair", {}, "",
       "3-dim pair (abelian, heis3) whose LR orientation is not complete"},
  };
  return entries;
}

BuiltObject catalog_build(const std::string& name, const Field& f,
                          const std::map<std::string, std::string>& params) {
  const auto& entries = catalog_entries();
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw unknown_entry_error("unknown catalog entry '" + name + "'");

  for (const auto& [key, value] : params) {
    (void)value;
    if (std::find(it->params.begin(), it->params.end(), key) == it->params.end())
      throw constraint_error("entry '" + name + "' has no parameter '" + key + "'");
  }
  auto get = [&](const std::string& pname) {
    auto p = params.find(pname);
    if (p == params.end())
      throw constraint_error("missing parameter '" + pname + "' for entry '" + name + "'");
    return Scalar::parse(f, p->second);
  };

  BuiltObject out;
  if (name == "ex2.5") {
    out.pair = build_ex25(get("alpha"), get("beta"), get("gamma"));
  } else if (name == "ex3.6") {
    out.pair = build_ex36(get("lambda"), get("alpha"), get("beta"), get("gamma"));
  } else if (name == "ex4.5") {
    out.pair = build_ex45(f);
  } else if (name == "ex4.7") {
    out.pair = build_ex47(f);
  } else if (name == "heis.typeA") {
    out.algebra = build_heis_type_a(get("r1"), get("r2"), get("r3"));
  } else if (name == "heis.typeA0") {
    out.algebra = build_heis_type_a0(get("r1"), get("r3"));
  } else if (name == "heis.typeB") {
    out.algebra = build_heis_type_b(get("r4"), get("r5"));
  } else if (name == "heis.typeC") {
    out.algebra = build_heis_type_c(get("r7"));
  } else if (name == "pa52.1") {
    out.pair = build_pa52(1, {get("r1"), get("r2"), get("r3"), get("alpha"), get("beta")});
  } else if (name == "pa52.2") {
    out.pair = build_pa52(2, {get("r1"), get("r3"), get("alpha"), get("beta")});
  } else if (name == "pa52.3") {
    out.pair = build_pa52(3, {get("r3"), get("alpha"), get("beta"), get("gamma"), get("delta")});
  } else if (name == "pa52.4") {
    out.pair = build_pa52(4, {get("r3"), get("alpha"), get("beta"), get("gamma"), get("delta")});
  } else if (name == "pa52.5") {
    out.pair = build_pa52(5, {get("r4"), get("r5"), get("alpha"), get("beta")});
  } else if (name == "pa52.6") {
    out.pair = build_pa52(6, {get("r7"), get("alpha"), get("beta")});
  } else if (name == "lr.halfbracket") {
    auto p = params.find("m");
    if (p == params.end()) throw constraint_error("missing parameter 'm'");
    long m;
    try {
      m = std::stol(p->second);
    } catch (const std::exception&) {
      throw constraint_error("parameter m must be a positive integer");
    }
    if (m < 1 || m > 64) throw constraint_error("constraint violated: m >= 1 (and small)");
    out.pair = build_half_bracket_pair(LieAlgebra::heisenberg(f, static_cast<int>(m)));
  } else if (name == "lr.A4") {
    out.pair = build_lr_a4(f);
  }
  return out;
}

}  // namespace postlie
