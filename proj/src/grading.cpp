#include "postlie/grading.hpp"

namespace postlie {

namespace {

Degree deg_add(const Degree& a, const Degree& b) {
  Degree r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool deg_is_zero(const Degree& d) {
  for (long v : d)
    if (v != 0) return false;
  return true;
}

}  // namespace

Grading make_grading(LieAlgebra algebra, std::vector<Degree> degrees) {
  if (static_cast<int>(degrees.size()) != algebra.dim())
    throw shape_error("one degree per basis vector required");
  std::size_t rank = degrees.empty() ? 0 : degrees.front().size();
  for (const Degree& d : degrees)
    if (d.size() != rank) throw shape_error("degrees of mixed rank");
  return Grading{std::move(algebra), std::move(degrees)};
}

Verdict grading_check(const Grading& gr) {
  Verdict v;
  const LieAlgebra& a = gr.algebra;
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Degree target = deg_add(gr.degrees[static_cast<std::size_t>(i)],
                              gr.degrees[static_cast<std::size_t>(j)]);
      Vec br = a.tensor().pair(i, j);
      for (int k = 0; k < n; ++k) {
        if (br[static_cast<std::size_t>(k)].is_zero()) continue;
        if (gr.degrees[static_cast<std::size_t>(k)] != target) {
          v.record({"grading", {i, j}, br, zero_vec(a.field(), n), vec_neg(br)});
          break;
        }
      }
    }
  return v;
}

Support support(const Grading& gr) {
  return Support(gr.degrees.begin(), gr.degrees.end());
}

bool is_arithmetically_free(const Support& x) {
  if (x.size() <= 6) {
    bool literal = is_arithmetically_free_literal(x);
    bool shortcut = true;
    for (const Degree& d : x)
      if (deg_is_zero(d)) {
        shortcut = false;
        break;
      }
    if (literal != shortcut)
      throw error("arithmetic-freeness scan disagrees with 0-not-in-X shortcut");
    return literal;
  }
  for (const Degree& d : x)
    if (deg_is_zero(d)) return false;
  return true;
}

bool is_arithmetically_free_literal(const Support& x) {
  // X fails iff some y in X admits a start x0 with x0 + k*y in X for
  // k = 0..|X|. For y != 0 the points are distinct, so a progression of
  // length |X|+1 cannot fit inside X; for y = 0 it collapses to x0 itself.
  std::size_t steps = x.size();
  for (const Degree& y : x)
    for (const Degree& x0 : x) {
      bool inside = true;
      Degree cur = x0;
      for (std::size_t k = 0; k <= steps; ++k) {
        if (!x.count(cur)) {
          inside = false;
          break;
        }
        cur = deg_add(cur, y);
      }
      if (inside) return false;
    }
  return true;
}

mpz_class nilpotency_class_bound(const Support& x) {
  if (!is_arithmetically_free(x))
    throw constraint_error("support is not arithmetically-free");
  unsigned long size = static_cast<unsigned long>(x.size());
  if (size == 0) return 0;
  if (size > 62) throw constraint_error("support too large for the bound formula");
  unsigned long exponent = 1ul << size;
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), size, exponent);
  return out;
}

}  // namespace postlie
