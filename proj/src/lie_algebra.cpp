#include "postlie/lie_algebra.hpp"

namespace postlie {

StructureTensor::StructureTensor(const Field& f, int dim)
    : field_(f), dim_(dim) {
  if (dim < 0) throw shape_error("negative dimension");
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, Scalar::zero(f));
}

Vec StructureTensor::pair(int i, int j) const {
  Vec v = zero_vec(field_, dim_);
  for (int k = 0; k < dim_; ++k) v[static_cast<std::size_t>(k)] = at(i, j, k);
  return v;
}

void StructureTensor::set_pair(int i, int j, const Vec& v) {
  for (int k = 0; k < dim_; ++k) at(i, j, k) = v[static_cast<std::size_t>(k)];
}

void StructureTensor::set_bracket(int i, int j, const Vec& v) {
  set_pair(i, j, v);
  set_pair(j, i, vec_neg(v));
}

Verdict antisymmetry_check(const StructureTensor& c) {
  Verdict v;
  int n = c.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vec lhs = c.pair(i, j);
      Vec rhs = vec_neg(c.pair(j, i));
      if (!vec_eq(lhs, rhs))
        v.record({"antisym", {i, j}, lhs, rhs, vec_sub(rhs, lhs)});
    }
  return v;
}

Verdict jacobi_verdict(const StructureTensor& c) {
  Verdict v;
  int n = c.dim();
  const Field& f = c.field();
  auto br = [&](const Vec& x, const Vec& y) {
    Vec r = zero_vec(f, n);
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y[static_cast<std::size_t>(j)].is_zero()) continue;
        Scalar cij = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] += cij * c.at(i, j, k);
      }
    }
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec ei = unit_vec(f, n, i), ej = unit_vec(f, n, j), ek = unit_vec(f, n, k);
        Vec sum = vec_add(vec_add(br(c.pair(i, j), ek), br(c.pair(j, k), ei)),
                          br(c.pair(k, i), ej));
        if (!vec_is_zero(sum))
          v.record({"jacobi", {i, j, k}, sum, zero_vec(f, n), vec_neg(sum)});
      }
  return v;
}

bool jacobi_check(const StructureTensor& c) { return jacobi_verdict(c).ok; }

LieAlgebra LieAlgebra::create(StructureTensor c) {
  Verdict anti = antisymmetry_check(c);
  if (!anti.ok)
    throw constraint_error("structure constants not antisymmetric: " +
                           format_witness(anti.witnesses.front()));
  Verdict jac = jacobi_verdict(c);
  if (!jac.ok)
    throw constraint_error("Jacobi identity fails: " +
                           format_witness(jac.witnesses.front()));
  return LieAlgebra(std::move(c));
}

LieAlgebra LieAlgebra::abelian(const Field& f, int dim) {
  return LieAlgebra(StructureTensor(f, dim));
}

LieAlgebra LieAlgebra::heisenberg(const Field& f, int m) {
  if (m < 1) throw constraint_error("heisenberg requires m >= 1");
  int n = 2 * m + 1;
  StructureTensor c(f, n);
  for (int i = 0; i < m; ++i)
    c.set_bracket(2 * i, 2 * i + 1, unit_vec(f, n, n - 1));
  return LieAlgebra(std::move(c));
}

LieAlgebra LieAlgebra::solvable_r3(const Scalar& lambda) {
  const Field& f = lambda.field();
  if (lambda.is_zero()) throw constraint_error("lambda must be nonzero");
  StructureTensor c(f, 3);
  c.set_bracket(0, 1, unit_vec(f, 3, 1));
  c.set_bracket(0, 2, vec_scale(lambda, unit_vec(f, 3, 2)));
  return LieAlgebra(std::move(c));
}

LieAlgebra LieAlgebra::solvable_r2(const Field& f) {
  StructureTensor c(f, 2);
  c.set_bracket(0, 1, unit_vec(f, 2, 0));
  return LieAlgebra(std::move(c));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  int n = dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw shape_error("vector length mismatch");
  Vec r = zero_vec(field(), n);
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      Scalar cij = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k)
        r[static_cast<std::size_t>(k)] += cij * c_.at(i, j, k);
    }
  }
  return r;
}

Matrix LieAlgebra::adjoint(const Vec& x) const {
  int n = dim();
  if (static_cast<int>(x.size()) != n) throw shape_error("vector length mismatch");
  Matrix m(field(), n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int k = 0; k < n; ++k)
        m.at(k, j) += x[static_cast<std::size_t>(i)] * c_.at(i, j, k);
    }
  }
  return m;
}

Matrix LieAlgebra::adjoint_basis(int i) const {
  return adjoint(unit_vec(field(), dim(), i));
}

Subspace LieAlgebra::bracket_span(const Subspace& u, const Subspace& w) const {
  std::vector<Vec> rows;
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j)
      rows.push_back(bracket(u.basis_vector(i), w.basis_vector(j)));
  return Subspace::span(field(), dim(), rows);
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  std::vector<Subspace> series;
  Subspace full = Subspace::full(field(), dim());
  series.push_back(full);
  while (true) {
    Subspace next = bracket_span(full, series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.is_zero()) break;
  }
  return series;
}

std::vector<Subspace> LieAlgebra::derived_series() const {
  std::vector<Subspace> series;
  series.push_back(Subspace::full(field(), dim()));
  while (true) {
    Subspace next = bracket_span(series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.is_zero()) break;
  }
  return series;
}

std::optional<int> LieAlgebra::nilpotency_class() const {
  std::vector<Subspace> series = lower_central_series();
  if (!series.back().is_zero()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

bool LieAlgebra::is_solvable() const { return derived_series().back().is_zero(); }

bool LieAlgebra::is_abelian() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      if (!vec_is_zero(c_.pair(i, j))) return false;
  return true;
}

bool LieAlgebra::is_two_step() const {
  auto cls = nilpotency_class();
  return cls.has_value() && *cls <= 2;
}

Subspace LieAlgebra::center() const {
  // Kernel of x -> ad(x), with ad(e_i) flattened into the columns of an
  // (n^2 x n) matrix.
  int n = dim();
  Matrix stacked(field(), n * n, n);
  for (int i = 0; i < n; ++i) {
    Vec flat = adjoint_basis(i).flatten();
    for (int r = 0; r < n * n; ++r) stacked.at(r, i) = flat[static_cast<std::size_t>(r)];
  }
  return kernel(stacked);
}

Subspace LieAlgebra::derived_algebra() const {
  Subspace full = Subspace::full(field(), dim());
  return bracket_span(full, full);
}

bool LieAlgebra::is_stem() const {
  return derived_algebra().contains(center());
}

bool LieAlgebra::is_heisenberg() const {
  int n = dim();
  if (n < 3 || n % 2 == 0) return false;
  auto cls = nilpotency_class();
  if (!cls.has_value() || *cls != 2) return false;
  Subspace z = center();
  return z.dim() == 1 && derived_algebra() == z;
}

bool LieAlgebra::is_derivation(const Matrix& d) const {
  int n = dim();
  if (d.rows() != n || d.cols() != n || d.field() != field())
    throw shape_error("operator shape/field mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec lhs = d.apply(c_.pair(i, j));
      Vec rhs = vec_add(bracket(d.col(i), unit_vec(field(), n, j)),
                        bracket(unit_vec(field(), n, i), d.col(j)));
      if (!vec_eq(lhs, rhs)) return false;
    }
  return true;
}

Subspace LieAlgebra::derivation_algebra() const {
  // Unknowns d[m][l] (row-major). For each pair i<j and output coordinate m:
  //   sum_l c[i][j][l] d[m][l] - sum_k d[k][i] c[k][j][m] - sum_k d[k][j] c[i][k][m] = 0.
  int n = dim();
  int pairs = n * (n - 1) / 2;
  Matrix sys(field(), pairs * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int m = 0; m < n; ++m) {
        for (int l = 0; l < n; ++l)
          sys.at(row, m * n + l) += c_.at(i, j, l);
        for (int k = 0; k < n; ++k) {
          sys.at(row, k * n + i) -= c_.at(k, j, m);
          sys.at(row, k * n + j) -= c_.at(i, k, m);
        }
        ++row;
      }
    }
  return kernel(sys);
}

std::vector<Matrix> LieAlgebra::derivation_basis() const {
  Subspace der = derivation_algebra();
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(der.dim()));
  for (int i = 0; i < der.dim(); ++i)
    out.push_back(Matrix::unflatten(field(), dim(), der.basis_vector(i)));
  return out;
}

}  // namespace postlie
