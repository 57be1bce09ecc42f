#include "postlie/subspace.hpp"

namespace postlie {

Subspace Subspace::row_space(const Matrix& m) {
  Matrix r = rref(m);
  std::vector<Vec> rows;
  for (int i = 0; i < r.rows(); ++i) {
    Vec row = r.row(i);
    if (!vec_is_zero(row)) rows.push_back(std::move(row));
  }
  return Subspace(m.cols(), Matrix::from_rows(m.field(), m.cols(), rows));
}

Subspace Subspace::span(const Field& f, int ambient, const std::vector<Vec>& vectors) {
  return row_space(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::zero(const Field& f, int ambient) {
  return Subspace(ambient, Matrix(f, 0, ambient));
}

Subspace Subspace::full(const Field& f, int ambient) {
  return Subspace(ambient, Matrix::identity(f, ambient));
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw shape_error("vector length mismatch");
  if (vec_is_zero(v)) return true;
  // Reduce v against the RREF basis; membership iff the residue vanishes.
  Vec r = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int lead = -1;
    for (int c = 0; c < ambient_; ++c)
      if (!basis_.at(i, c).is_zero()) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    if (!r[static_cast<std::size_t>(lead)].is_zero()) {
      Scalar factor = r[static_cast<std::size_t>(lead)];
      for (int c = 0; c < ambient_; ++c)
        r[static_cast<std::size_t>(c)] -= factor * basis_.at(i, c);
    }
  }
  return vec_is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw shape_error("ambient dimension mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.field() != b.field())
    throw shape_error("subspace sum: ambient mismatch");
  std::vector<Vec> rows;
  for (int i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (int i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  return span(a.field(), a.ambient_, rows);
}

Subspace kernel(const Matrix& m) {
  Matrix r = rref(m);
  int n = m.cols();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int i = 0; i < r.rows(); ++i) {
    for (int c = 0; c < n; ++c)
      if (!r.at(i, c).is_zero()) {
        pivot_col.push_back(c);
        is_pivot[static_cast<std::size_t>(c)] = true;
        break;
      }
  }
  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec v = zero_vec(m.field(), n);
    v[static_cast<std::size_t>(free)] = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[static_cast<std::size_t>(pivot_col[i])] = -r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

}  // namespace postlie
