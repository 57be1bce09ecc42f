#pragma once

#include <set>
#include <vector>

#include "postlie/lie_algebra.hpp"

namespace postlie {

// A degree in the free-abelian grading group Z^r.
using Degree = std::vector<long>;

// Finite support of a grading: the set of degrees with nonzero fiber.
using Support = std::set<Degree>;

// A Z^r-grading of a structure-constant Lie algebra, given by one degree
// per basis vector (homogeneous basis). Only free-abelian grading groups
// are supported.
struct Grading {
  LieAlgebra algebra;
  std::vector<Degree> degrees;  // one per basis vector, all of rank() size
  int rank() const { return degrees.empty() ? 0 : static_cast<int>(degrees.front().size()); }
};

Grading make_grading(LieAlgebra algebra, std::vector<Degree> degrees);

// ok iff every bracket [e_i, e_j] lies in the fiber of deg(i) + deg(j):
// each nonzero component k of the bracket has deg(k) = deg(i) + deg(j).
Verdict grading_check(const Grading& gr);

Support support(const Grading& gr);

// A finite X in Z^r is arithmetically-free iff no arithmetic progression
// {x + k y : k >= 0} with y in X stays inside X. In a torsion-free group
// this reduces to 0 not being in X; for small supports the literal
// definition is scanned and must agree with the shortcut.
bool is_arithmetically_free(const Support& x);

// Literal-definition scan (progressions of length |X|+1 suffice by
// pigeonhole); exposed for cross-checking against the shortcut.
bool is_arithmetically_free_literal(const Support& x);

// The nilpotency class bound |X|^(2^|X|) for an arithmetically-free support.
// Throws constraint_error when X is not arithmetically-free.
mpz_class nilpotency_class_bound(const Support& x);

}  // namespace postlie
