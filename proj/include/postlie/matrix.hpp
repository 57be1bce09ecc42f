#pragma once

#include <vector>

#include "postlie/scalar.hpp"

namespace postlie {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, int n);
Vec unit_vec(const Field& f, int n, int i);
bool vec_is_zero(const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Scalar& c, const Vec& a);

// Dense matrix over one field. Row-major storage; rows or cols may be 0.
class Matrix {
 public:
  Matrix(const Field& f, int rows, int cols);
  static Matrix identity(const Field& f, int n);
  static Matrix from_rows(const Field& f, int cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const {
    return e_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  Vec col(int c) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;

  Scalar trace() const;

  // Row-major flattening, used to express operator-valued linear maps as
  // plain vectors.
  Vec flatten() const;
  static Matrix unflatten(const Field& f, int n, const Vec& v);

  // Commutator a*b - b*a.
  static Matrix commutator(const Matrix& a, const Matrix& b);

 private:
  void check_same_shape(const Matrix& o) const;
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> e_;
};

// Reduced row-echelon form: leftmost pivots, pivots normalized to 1,
// eliminated above and below. Deterministic canonical form.
Matrix rref(Matrix m);
int rank(const Matrix& m);

// Characteristic polynomial coefficients [c_0, ..., c_n] with
// p(t) = sum c_k t^k, c_n = 1. Computed from sums of principal minors, so
// it is valid in any characteristic.
std::vector<Scalar> char_poly(const Matrix& m);

// True iff m^n = 0 for n = rows (square input required).
bool is_nilpotent_matrix(const Matrix& m);

}  // namespace postlie
