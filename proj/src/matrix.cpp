#include "postlie/matrix.hpp"

#include <algorithm>

namespace postlie {

Vec zero_vec(const Field& f, int n) {
  return Vec(static_cast<std::size_t>(n), Scalar::zero(f));
}

Vec unit_vec(const Field& f, int n, int i) {
  Vec v = zero_vec(f, n);
  v[static_cast<std::size_t>(i)] = Scalar::one(f);
  return v;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw shape_error("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw shape_error("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r = a;
  for (auto& s : r) s = -s;
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& s : r) s *= c;
  return r;
}

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
  e_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, int cols, const std::vector<Vec>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw shape_error("row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec v;
  v.reserve(cols_);
  for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Vec Matrix::col(int c) const {
  Vec v;
  v.reserve(rows_);
  for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

void Matrix::check_same_shape(const Matrix& o) const {
  if (field_ != o.field_)
    throw field_mismatch_error("matrices over different fields");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw shape_error("matrix shape mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(o);
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(o);
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& s : r.e_) s = -s;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_)
    throw field_mismatch_error("matrices over different fields");
  if (cols_ != o.rows_) throw shape_error("inner dimension mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw shape_error("vector length mismatch");
  Vec r = zero_vec(field_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& s : r.e_) s *= c;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw shape_error("trace of non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Vec Matrix::flatten() const {
  return e_;
}

Matrix Matrix::unflatten(const Field& f, int n, const Vec& v) {
  if (static_cast<int>(v.size()) != n * n)
    throw shape_error("unflatten length mismatch");
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<std::size_t>(i) * n + j];
  return m;
}

Matrix Matrix::commutator(const Matrix& a, const Matrix& b) {
  return a * b - b * a;
}

Matrix rref(Matrix m) {
  int lead = 0;
  for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
    int pivot = -1;
    while (lead < m.cols()) {
      for (int i = r; i < m.rows(); ++i) {
        if (!m.at(i, lead).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot >= 0) break;
      ++lead;
    }
    if (pivot < 0) break;
    if (pivot != r)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(r, c));
    Scalar inv = m.at(r, lead).inverse();
    for (int c = lead; c < m.cols(); ++c) m.at(r, c) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, lead).is_zero()) continue;
      Scalar factor = m.at(i, lead);
      for (int c = lead; c < m.cols(); ++c)
        m.at(i, c) -= factor * m.at(r, c);
    }
    ++lead;
  }
  return m;
}

int rank(const Matrix& m) {
  Matrix r = rref(m);
  int rk = 0;
  for (int i = 0; i < r.rows(); ++i)
    if (!vec_is_zero(r.row(i))) ++rk;
  return rk;
}

namespace {

// Determinant by Gaussian elimination with exact division.
Scalar det(Matrix m) {
  Scalar d = Scalar::one(m.field());
  int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Scalar::zero(m.field());
    if (pivot != c) {
      for (int k = 0; k < n; ++k) std::swap(m.at(pivot, k), m.at(c, k));
      d = -d;
    }
    d *= m.at(c, c);
    Scalar inv = m.at(c, c).inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Scalar factor = m.at(r, c) * inv;
      for (int k = c; k < n; ++k) m.at(r, k) -= factor * m.at(c, k);
    }
  }
  return d;
}

// Sum of k-by-k principal minors.
Scalar principal_minor_sum(const Matrix& m, int k) {
  int n = m.rows();
  Scalar total = Scalar::zero(m.field());
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Matrix sub(m.field(), k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        sub.at(i, j) = m.at(idx[static_cast<std::size_t>(i)],
                            idx[static_cast<std::size_t>(j)]);
    total += det(std::move(sub));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return total;
}

}  // namespace

std::vector<Scalar> char_poly(const Matrix& m) {
  if (!m.is_square()) throw shape_error("char_poly of non-square matrix");
  int n = m.rows();
  const Field& f = m.field();
  // p(t) = sum_{k=0..n} (-1)^k e_k t^{n-k}, e_k = k-th principal minor sum.
  std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1, Scalar::zero(f));
  coeffs[static_cast<std::size_t>(n)] = Scalar::one(f);
  Scalar sign = Scalar::one(f);
  for (int k = 1; k <= n; ++k) {
    sign = -sign;
    coeffs[static_cast<std::size_t>(n - k)] = sign * principal_minor_sum(m, k);
  }
  return coeffs;
}

bool is_nilpotent_matrix(const Matrix& m) {
  if (!m.is_square()) throw shape_error("nilpotency test on non-square matrix");
  int n = m.rows();
  if (n == 0) return true;
  Matrix p = m;
  int e = 1;
  while (e < n) {
    if (p.is_zero()) return true;
    p = p * p;
    e *= 2;
  }
  return p.is_zero();
}

}  // namespace postlie
