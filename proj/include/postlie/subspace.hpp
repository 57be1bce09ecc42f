#pragma once

#include <vector>

#include "postlie/matrix.hpp"

namespace postlie {

// A subspace of K^n, stored as a full-row-rank basis matrix in reduced
// row-echelon form. The RREF basis is the canonical representative, so
// subspace equality is plain matrix equality.
class Subspace {
 public:
  // Row space of the given matrix / span of the given vectors.
  static Subspace row_space(const Matrix& m);
  static Subspace span(const Field& f, int ambient, const std::vector<Vec>& vectors);
  static Subspace zero(const Field& f, int ambient);
  static Subspace full(const Field& f, int ambient);

  const Field& field() const { return basis_.field(); }
  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }

  bool is_zero() const { return dim() == 0; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  static Subspace sum(const Subspace& a, const Subspace& b);

 private:
  Subspace(int ambient, Matrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}
  int ambient_;
  Matrix basis_;
};

// Right null space { x : m x = 0 }, canonicalized.
Subspace kernel(const Matrix& m);

}  // namespace postlie
