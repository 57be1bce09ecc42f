#pragma once

#include <string>
#include <vector>

#include "postlie/matrix.hpp"

namespace postlie {

// One failing basis tuple of a multilinear identity. For element-form
// identities `where` holds the basis indices (0-based) and lhs/rhs are the
// two sides' values; for operator-form identities the last entry of `where`
// is the basis vector the operators were applied to. residual = rhs - lhs.
struct Witness {
  std::string identity;
  std::vector<int> where;
  Vec lhs, rhs, residual;
};

// Result of a check that scans basis tuples. Collects at most
// `max_witnesses` failures but counts all of them; scan order (and hence
// the witness order) is lexicographic in the tuple indices.
struct Verdict {
  static constexpr std::size_t max_witnesses = 16;

  bool ok = true;
  std::size_t failure_count = 0;
  std::vector<Witness> witnesses;

  explicit operator bool() const { return ok; }

  void record(Witness w) {
    ok = false;
    ++failure_count;
    if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
  }

  void merge(const Verdict& o) {
    if (o.ok) return;
    ok = false;
    failure_count += o.failure_count;
    for (const auto& w : o.witnesses)
      if (witnesses.size() < max_witnesses) witnesses.push_back(w);
  }
};

// Pretty printing in basis notation: vectors as "e1 - 1/2*e3", witnesses as
// "pa2 at (e1,e2,e2): residual -1*e1". Indices are 1-based on output.
std::string format_vec(const Vec& v);
std::string format_tuple(const std::vector<int>& where);
std::string format_witness(const Witness& w);

}  // namespace postlie
