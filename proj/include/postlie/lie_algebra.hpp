#pragma once

#include <optional>
#include <vector>

#include "postlie/subspace.hpp"
#include "postlie/verdict.hpp"

namespace postlie {

// Structure-constant tensor c[i][j][k] meaning [e_i, e_j] = sum_k c[i][j][k] e_k.
// Stored fully (all ordered pairs), flattened row-major.
class StructureTensor {
 public:
  StructureTensor(const Field& f, int dim);
  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  Scalar& at(int i, int j, int k) {
    return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  const Scalar& at(int i, int j, int k) const {
    return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  // [e_i, e_j] as a coordinate vector.
  Vec pair(int i, int j) const;
  void set_pair(int i, int j, const Vec& v);
  // Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(int i, int j, const Vec& v);

  bool operator==(const StructureTensor& o) const {
    if (field_ != o.field_ || dim_ != o.dim_) return false;
    for (std::size_t t = 0; t < c_.size(); ++t)
      if (c_[t] != o.c_[t]) return false;
    return true;
  }

 private:
  Field field_;
  int dim_;
  std::vector<Scalar> c_;
};

Verdict antisymmetry_check(const StructureTensor& c);
// Pre: antisymmetry holds. True iff the cyclic sum [[e_i,e_j],e_k] + ... = 0
// for all i < j < k.
Verdict jacobi_verdict(const StructureTensor& c);
bool jacobi_check(const StructureTensor& c);

enum class SeriesKind { lower_central, derived };

// A finite-dimensional Lie algebra given by structure constants. Validated
// (antisymmetry + Jacobi) at construction; immutable afterwards.
class LieAlgebra {
 public:
  static LieAlgebra create(StructureTensor c);
  static LieAlgebra abelian(const Field& f, int dim);
  // Heisenberg algebra of dimension 2m+1: [e_{2i-1}, e_{2i}] = e_{2m+1}.
  static LieAlgebra heisenberg(const Field& f, int m);
  // Solvable non-nilpotent dim 3: [e1,e2] = e2, [e1,e3] = lambda*e3.
  static LieAlgebra solvable_r3(const Scalar& lambda);
  // Dim 2 with {e1,e2} = e1.
  static LieAlgebra solvable_r2(const Field& f);

  const Field& field() const { return c_.field(); }
  int dim() const { return c_.dim(); }
  const StructureTensor& tensor() const { return c_; }

  Vec bracket(const Vec& x, const Vec& y) const;
  // Matrix of y -> [x, y].
  Matrix adjoint(const Vec& x) const;
  Matrix adjoint_basis(int i) const;

  // Span of all brackets [U, W].
  Subspace bracket_span(const Subspace& u, const Subspace& w) const;

  std::vector<Subspace> lower_central_series() const;
  std::vector<Subspace> derived_series() const;

  // Smallest c with gamma_{c+1} = 0; nullopt when the series stabilizes at
  // a nonzero term.
  std::optional<int> nilpotency_class() const;
  bool is_nilpotent() const { return nilpotency_class().has_value(); }
  bool is_solvable() const;
  bool is_abelian() const;
  // Nilpotent of class <= 2.
  bool is_two_step() const;

  Subspace center() const;
  Subspace derived_algebra() const;
  // Z(g) contained in [g, g].
  bool is_stem() const;
  // Odd dimension >= 3, class exactly 2, 1-dimensional center equal to the
  // derived algebra.
  bool is_heisenberg() const;

  bool is_derivation(const Matrix& d) const;
  // Solution space of the Leibniz system, as a subspace of K^(dim^2)
  // (row-major flattened operators).
  Subspace derivation_algebra() const;
  std::vector<Matrix> derivation_basis() const;

  bool operator==(const LieAlgebra& o) const { return c_ == o.c_; }

 private:
  explicit LieAlgebra(StructureTensor c) : c_(std::move(c)) {}
  StructureTensor c_;
};

}  // namespace postlie
