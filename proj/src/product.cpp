#include "postlie/product.hpp"

namespace postlie {

BilinearProduct::BilinearProduct(const Field& f, int dim)
    : field_(f), dim_(dim) {
  if (dim < 0) throw shape_error("negative dimension");
  a_.assign(static_cast<std::size_t>(dim) * dim * dim, Scalar::zero(f));
}

BilinearProduct BilinearProduct::from_left_operators(
    const std::vector<Matrix>& mats) {
  if (mats.empty()) throw shape_error("no operators given");
  const Field& f = mats.front().field();
  int n = static_cast<int>(mats.size());
  BilinearProduct p(f, n);
  for (int i = 0; i < n; ++i) {
    const Matrix& L = mats[static_cast<std::size_t>(i)];
    if (L.rows() != n || L.cols() != n || L.field() != f)
      throw shape_error("operator shape/field mismatch");
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) p.at(i, j, k) = L.at(k, j);
  }
  return p;
}

Vec BilinearProduct::pair(int i, int j) const {
  Vec v = zero_vec(field_, dim_);
  for (int k = 0; k < dim_; ++k) v[static_cast<std::size_t>(k)] = at(i, j, k);
  return v;
}

void BilinearProduct::set_pair(int i, int j, const Vec& v) {
  for (int k = 0; k < dim_; ++k) at(i, j, k) = v[static_cast<std::size_t>(k)];
}

Vec BilinearProduct::mul(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw shape_error("vector length mismatch");
  Vec r = zero_vec(field_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      Scalar cij = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (int k = 0; k < dim_; ++k)
        r[static_cast<std::size_t>(k)] += cij * at(i, j, k);
    }
  }
  return r;
}

Matrix BilinearProduct::left_operator(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_) throw shape_error("vector length mismatch");
  Matrix m(field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        m.at(k, j) += x[static_cast<std::size_t>(i)] * at(i, j, k);
  }
  return m;
}

Matrix BilinearProduct::left_operator_basis(int i) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.at(k, j) = at(i, j, k);
  return m;
}

Matrix BilinearProduct::right_operator(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_) throw shape_error("vector length mismatch");
  Matrix m(field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        m.at(k, j) += x[static_cast<std::size_t>(i)] * at(j, i, k);
  }
  return m;
}

Matrix BilinearProduct::right_operator_basis(int i) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.at(k, j) = at(j, i, k);
  return m;
}

BilinearProduct BilinearProduct::negated() const {
  BilinearProduct r = *this;
  for (auto& s : r.a_) s = -s;
  return r;
}

BilinearProduct BilinearProduct::symmetrized() const {
  BilinearProduct r(field_, dim_);
  Scalar half = Scalar::of_fraction(field_, 1, 2);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        r.at(i, j, k) = half * (at(i, j, k) + at(j, i, k));
  return r;
}

bool BilinearProduct::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (!vec_eq(pair(i, j), pair(j, i))) return false;
  return true;
}

bool BilinearProduct::operator==(const BilinearProduct& o) const {
  if (field_ != o.field_ || dim_ != o.dim_) return false;
  for (std::size_t t = 0; t < a_.size(); ++t)
    if (a_[t] != o.a_[t]) return false;
  return true;
}

bool BilinearProduct::operator<(const BilinearProduct& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  for (std::size_t t = 0; t < a_.size(); ++t) {
    if (a_[t] != o.a_[t]) return a_[t] < o.a_[t];
  }
  return false;
}

namespace {

void check_compatible(const LieAlgebra& g, const LieAlgebra& n,
                      const BilinearProduct& prod) {
  if (g.field() != n.field() || g.field() != prod.field())
    throw field_mismatch_error("pair components over different fields");
  if (g.dim() != n.dim() || g.dim() != prod.dim())
    throw shape_error("pair components of different dimensions");
}

// pa1 on ordered pairs i < j (the diagonal and swapped cases are implied).
void axiom1(const LieAlgebra& g, const LieAlgebra& n,
            const BilinearProduct& p, Verdict& v) {
  for (int i = 0; i < p.dim(); ++i)
    for (int j = i + 1; j < p.dim(); ++j) {
      Vec lhs = vec_sub(p.pair(i, j), p.pair(j, i));
      Vec rhs = vec_sub(g.tensor().pair(i, j), n.tensor().pair(i, j));
      if (!vec_eq(lhs, rhs))
        v.record({"pa1", {i, j}, lhs, rhs, vec_sub(rhs, lhs)});
    }
}

// pa2 on triples; antisymmetric in (x, y), so x < y suffices.
void axiom2(const LieAlgebra& g, const BilinearProduct& p, Verdict& v,
            const char* tag) {
  const Field& f = p.field();
  int d = p.dim();
  for (int x = 0; x < d; ++x)
    for (int y = x + 1; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Vec lhs = p.mul(g.tensor().pair(x, y), unit_vec(f, d, z));
        Vec rhs = vec_sub(p.mul(unit_vec(f, d, x), p.pair(y, z)),
                          p.mul(unit_vec(f, d, y), p.pair(x, z)));
        if (!vec_eq(lhs, rhs))
          v.record({tag, {x, y, z}, lhs, rhs, vec_sub(rhs, lhs)});
      }
}

// pa3 on triples; antisymmetric in (y, z), so y < z suffices.
void axiom3(const LieAlgebra& n, const BilinearProduct& p, Verdict& v,
            const char* tag) {
  const Field& f = p.field();
  int d = p.dim();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = y + 1; z < d; ++z) {
        Vec lhs = p.mul(unit_vec(f, d, x), n.tensor().pair(y, z));
        Vec rhs = vec_add(n.bracket(p.pair(x, y), unit_vec(f, d, z)),
                          n.bracket(unit_vec(f, d, y), p.pair(x, z)));
        if (!vec_eq(lhs, rhs))
          v.record({tag, {x, y, z}, lhs, rhs, vec_sub(rhs, lhs)});
      }
}

}  // namespace

Verdict check_pa(const LieAlgebra& g, const LieAlgebra& n,
                 const BilinearProduct& prod) {
  check_compatible(g, n, prod);
  Verdict v;
  axiom1(g, n, prod, v);
  axiom2(g, prod, v, "pa2");
  axiom3(n, prod, v, "pa3");
  return v;
}

Verdict check_cpa(const LieAlgebra& g, const BilinearProduct& prod) {
  check_compatible(g, g, prod);
  Verdict v;
  for (int i = 0; i < prod.dim(); ++i)
    for (int j = i + 1; j < prod.dim(); ++j) {
      Vec lhs = prod.pair(i, j);
      Vec rhs = prod.pair(j, i);
      if (!vec_eq(lhs, rhs))
        v.record({"cpa1", {i, j}, lhs, rhs, vec_sub(rhs, lhs)});
    }
  axiom2(g, prod, v, "cpa2");
  axiom3(g, prod, v, "cpa3");
  return v;
}

Verdict check_prelie(const LieAlgebra& g, const BilinearProduct& prod) {
  return check_pa(g, LieAlgebra::abelian(g.field(), g.dim()), prod);
}

Verdict check_lr(const LieAlgebra& n, const BilinearProduct& m) {
  return check_pa(LieAlgebra::abelian(n.field(), n.dim()), n, m.negated());
}

PAPair PAPair::create(LieAlgebra g, LieAlgebra n, BilinearProduct prod) {
  Verdict v = check_pa(g, n, prod);
  if (!v.ok)
    throw constraint_error("not a post-Lie pair: " +
                           format_witness(v.witnesses.front()));
  return PAPair(std::move(g), std::move(n), std::move(prod));
}

BilinearProduct lr_from_pa(const PAPair& pair) {
  if (!pair.g().is_abelian())
    throw hypothesis_error("LR orientation requires abelian g");
  return pair.product().negated();
}

PAPair pa_from_lr(const LieAlgebra& n, const BilinearProduct& m) {
  return PAPair::create(LieAlgebra::abelian(n.field(), n.dim()), n, m.negated());
}

namespace {

// Kernel of the linear map x -> sum_i x_i ops[i], as a subspace of K^dim.
Subspace operator_map_kernel(const Field& f, int dim,
                             const std::vector<Matrix>& ops) {
  Matrix stacked(f, dim * dim, dim);
  for (int i = 0; i < dim; ++i) {
    Vec flat = ops[static_cast<std::size_t>(i)].flatten();
    for (int r = 0; r < dim * dim; ++r)
      stacked.at(r, i) = flat[static_cast<std::size_t>(r)];
  }
  return kernel(stacked);
}

}  // namespace

Subspace ann_left(const PAPair& pair) {
  std::vector<Matrix> ops;
  for (int i = 0; i < pair.dim(); ++i) ops.push_back(pair.left_op(i));
  return operator_map_kernel(pair.field(), pair.dim(), ops);
}

Subspace ann_right(const PAPair& pair) {
  std::vector<Matrix> ops;
  for (int i = 0; i < pair.dim(); ++i) ops.push_back(pair.right_op(i));
  return operator_map_kernel(pair.field(), pair.dim(), ops);
}

Subspace h0(const PAPair& pair) {
  int d = pair.dim();
  Matrix stacked(pair.field(), d * d, d);
  for (int i = 0; i < d; ++i) {
    Matrix L = pair.left_op(i);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) stacked.at(i * d + r, c) = L.at(r, c);
  }
  return kernel(stacked);
}

bool all_left_mults_nilpotent(const PAPair& pair) {
  int d = pair.dim();
  std::vector<Matrix> ops;
  for (int i = 0; i < d; ++i) ops.push_back(pair.left_op(i));
  Subspace current = Subspace::full(pair.field(), d);
  while (!current.is_zero()) {
    std::vector<Vec> images;
    for (int b = 0; b < current.dim(); ++b)
      for (const Matrix& L : ops) images.push_back(L.apply(current.basis_vector(b)));
    Subspace next = Subspace::span(pair.field(), d, images);
    if (next == current) return false;
    current = next;
  }
  return true;
}

namespace {

void operator_identity(const char* tag, std::vector<int> where,
                       const Matrix& lhs, const Matrix& rhs, Verdict& v) {
  if (lhs == rhs) return;
  // Report the first basis vector where the operators differ.
  for (int k = 0; k < lhs.cols(); ++k) {
    Vec l = lhs.col(k), r = rhs.col(k);
    if (!vec_eq(l, r)) {
      where.push_back(k);
      v.record({tag, std::move(where), l, r, vec_sub(r, l)});
      return;
    }
  }
}

}  // namespace

Verdict check_operator_axioms(const PAPair& pair) {
  Verdict v;
  int d = pair.dim();
  for (int i = 0; i < d; ++i) {
    Matrix L = pair.left_op(i), R = pair.right_op(i);
    Matrix lhs = L - R;
    Matrix rhs = pair.ad(i) - pair.Ad(i);
    operator_identity("op1", {i}, lhs, rhs, v);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix lhs2 = pair.product().left_operator(pair.g().tensor().pair(i, j));
      Matrix rhs2 = Matrix::commutator(pair.left_op(i), pair.left_op(j));
      operator_identity("op2", {i, j}, lhs2, rhs2, v);
      Matrix lhs3 = Matrix::commutator(pair.left_op(i), pair.Ad(j));
      Matrix rhs3 = pair.n().adjoint(pair.product().pair(i, j));
      operator_identity("op3", {i, j}, lhs3, rhs3, v);
    }
  return v;
}

Verdict check_derived_identities(const LieAlgebra& g, const LieAlgebra& n,
                                 const BilinearProduct& prod) {
  check_compatible(g, n, prod);
  Verdict v;
  int d = prod.dim();
  const Scalar two = Scalar::of_long(prod.field(), 2);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix L_i = prod.left_operator_basis(i), L_j = prod.left_operator_basis(j);
      Matrix R_i = prod.right_operator_basis(i), R_j = prod.right_operator_basis(j);
      Matrix ad_i = g.adjoint_basis(i), ad_j = g.adjoint_basis(j);
      Matrix Ad_i = n.adjoint_basis(i), Ad_j = n.adjoint_basis(j);

      Matrix lhs1 = Matrix::commutator(L_i, Ad_j) + Matrix::commutator(Ad_i, L_j);
      Matrix rhs1 = n.adjoint(g.tensor().pair(i, j)) - n.adjoint(n.tensor().pair(i, j));
      operator_identity("derived1", {i, j}, lhs1, rhs1, v);

      Matrix lhs2 = Matrix::commutator(R_i, ad_j) + Matrix::commutator(ad_i, R_j);
      Matrix rhs2 = Matrix::commutator(L_i, ad_j) + Matrix::commutator(ad_i, L_j) +
                    Matrix::commutator(Ad_i, ad_j) + Matrix::commutator(ad_i, Ad_j) -
                    Matrix::commutator(ad_i, ad_j).scaled(two);
      operator_identity("derived2", {i, j}, lhs2, rhs2, v);
    }
  return v;
}

Verdict check_derived_identities(const PAPair& pair) {
  return check_derived_identities(pair.g(), pair.n(), pair.product());
}

StemPairSurvey survey_stem_pairs(
    const std::vector<std::pair<std::string, PAPair>>& corpus) {
  StemPairSurvey s;
  for (const auto& [name, pair] : corpus) {
    ++s.examined;
    if (!pair.g().is_nilpotent() || !pair.n().is_nilpotent()) continue;
    if (!pair.g().is_stem() || !pair.n().is_stem()) continue;
    ++s.stem_pairs;
    if (all_left_mults_nilpotent(pair))
      ++s.nilpotent_left;
    else
      s.counterexamples.push_back(name);
  }
  return s;
}

}  // namespace postlie
