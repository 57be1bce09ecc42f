#include "postlie/ffsearch.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_map>

#include "postlie/catalog.hpp"
#include "postlie/symmetrize.hpp"

namespace postlie {

namespace {

long mod_norm(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// Residue image of a structure tensor / product tensor, index (i*d + j)*d + k.
std::vector<long> residues_of_tensor(const StructureTensor& c) {
  int d = c.dim();
  std::vector<long> out(static_cast<std::size_t>(d) * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out[(static_cast<std::size_t>(i) * d + j) * d + k] = c.at(i, j, k).residue();
  return out;
}

std::vector<long> residues_of_product(const BilinearProduct& p) {
  int d = p.dim();
  std::vector<long> out(static_cast<std::size_t>(d) * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out[(static_cast<std::size_t>(i) * d + j) * d + k] = p.at(i, j, k).residue();
  return out;
}

BilinearProduct product_from_residues(const Field& f, int d,
                                      const std::vector<long>& a) {
  BilinearProduct p(f, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        p.at(i, j, k) = Scalar::of_long(f, a[(static_cast<std::size_t>(i) * d + j) * d + k]);
  return p;
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

// ---- raw tensor scan, dim <= 2 ----

struct RawScan {
  int d;
  long p;
  std::vector<long> cg, cn, diff;  // structure tensors and their difference

  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * d + j) * d + k;
  }

  bool accepts(const std::vector<long>& a) const {
    // Skew axiom on i < j.
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        for (int k = 0; k < d; ++k)
          if (mod_norm(a[idx(i, j, k)] - a[idx(j, i, k)] - diff[idx(i, j, k)], p) != 0)
            return false;
    // Representation axiom on x < y, all z: [x,y].z = x.(y.z) - y.(x.z).
    for (int x = 0; x < d; ++x)
      for (int y = x + 1; y < d; ++y)
        for (int z = 0; z < d; ++z)
          for (int m = 0; m < d; ++m) {
            long lhs = 0, rhs = 0;
            for (int k = 0; k < d; ++k) {
              lhs += cg[idx(x, y, k)] * a[idx(k, z, m)];
              rhs += a[idx(y, z, k)] * a[idx(x, k, m)] -
                     a[idx(x, z, k)] * a[idx(y, k, m)];
            }
            if (mod_norm(lhs - rhs, p) != 0) return false;
          }
    // Derivation axiom on all x, y < z: x.{y,z} = {x.y, z} + {y, x.z}.
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = y + 1; z < d; ++z)
          for (int m = 0; m < d; ++m) {
            long lhs = 0, rhs = 0;
            for (int k = 0; k < d; ++k) {
              lhs += cn[idx(y, z, k)] * a[idx(x, k, m)];
              rhs += a[idx(x, y, k)] * cn[idx(k, z, m)] +
                     a[idx(x, z, k)] * cn[idx(y, k, m)];
            }
            if (mod_norm(lhs - rhs, p) != 0) return false;
          }
    return true;
  }
};

// ---- dim-3 homomorphism scan ----

struct Mat3 {
  std::array<long, 9> a{};
  long col(int c, int r) const { return a[static_cast<std::size_t>(r) * 3 + c]; }
};

Mat3 mat3_commutator(const Mat3& x, const Mat3& y, long p) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long s = 0;
      for (int k = 0; k < 3; ++k)
        s += x.a[static_cast<std::size_t>(i) * 3 + k] * y.a[static_cast<std::size_t>(k) * 3 + j] -
             y.a[static_cast<std::size_t>(i) * 3 + k] * x.a[static_cast<std::size_t>(k) * 3 + j];
      r.a[static_cast<std::size_t>(i) * 3 + j] = mod_norm(s, p);
    }
  return r;
}

bool mat3_is_zero(const Mat3& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](long v) { return v == 0; });
}

}  // namespace

SearchResult enumerate_pa(const SearchSpec& spec) {
  const Field& f = spec.g.field();
  if (!f.is_prime())
    throw constraint_error("enumeration requires a prime field");
  if (spec.n.field() != f || spec.g.dim() != spec.n.dim())
    throw shape_error("pair components disagree");
  long p = f.characteristic();
  int d = spec.g.dim();

  SearchResult result;

  if (spec.strategy == SearchStrategy::raw_tensor) {
    if (d > 2)
      throw constraint_error("raw tensor enumeration is limited to dim <= 2");
    RawScan scan{d, p, residues_of_tensor(spec.g.tensor()),
                 residues_of_tensor(spec.n.tensor()), {}};
    scan.diff.resize(scan.cg.size());
    for (std::size_t t = 0; t < scan.cg.size(); ++t)
      scan.diff[t] = mod_norm(scan.cg[t] - scan.cn[t], p);

    unsigned entries = static_cast<unsigned>(d * d * d);
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(p), entries);
    std::uint64_t limit = spec.max_candidates ? std::min(*spec.max_candidates, total) : total;
    std::vector<long> a(entries, 0);
    std::vector<std::vector<long>> accepted;
    std::uint64_t candidate = 0;
    for (; candidate < limit; ++candidate) {
      std::uint64_t v = candidate;
      // Most significant digit first: lexicographic order over entries.
      for (unsigned e = entries; e-- > 0;) {
        a[e] = static_cast<long>(v % static_cast<std::uint64_t>(p));
        v /= static_cast<std::uint64_t>(p);
      }
      if (scan.accepts(a)) {
        accepted.push_back(a);
        if (spec.max_results && accepted.size() >= *spec.max_results) {
          ++candidate;
          break;
        }
      }
    }
    result.candidates = candidate;
    result.truncated = candidate < total;
    for (const auto& t : accepted) {
      BilinearProduct prod = product_from_residues(f, d, t);
      if (!check_pa(spec.g, spec.n, prod).ok)
        throw error("internal: raw scan accepted an invalid product");
      result.found.push_back(std::move(prod));
    }
    return result;
  }

  // hom_through_derivations
  if (d != 3)
    throw constraint_error("homomorphism enumeration is implemented for dim 3");
  {
    const StructureTensor& cg = spec.g.tensor();
    bool shape_ok = vec_eq(cg.pair(0, 1), unit_vec(f, 3, 2)) &&
                    vec_is_zero(cg.pair(0, 2)) && vec_is_zero(cg.pair(1, 2));
    if (!shape_ok)
      throw hypothesis_error(
          "homomorphism enumeration needs g with [e1,e2] = e3 central");
  }

  std::vector<Matrix> der = spec.n.derivation_basis();
  unsigned der_dim = static_cast<unsigned>(der.size());
  if (pow_u64(static_cast<std::uint64_t>(p), der_dim) > (1ull << 24))
    throw constraint_error("derivation algebra too large to enumerate");

  std::vector<std::array<long, 9>> basis;
  for (const Matrix& b : der) {
    std::array<long, 9> m{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        m[static_cast<std::size_t>(r) * 3 + c] = b.at(r, c).residue();
    basis.push_back(m);
  }

  std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), der_dim);
  std::vector<Mat3> cand(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    Mat3 m;
    // Most significant digit = first basis element.
    for (unsigned e = der_dim; e-- > 0;) {
      long coeff = static_cast<long>(v % static_cast<std::uint64_t>(p));
      v /= static_cast<std::uint64_t>(p);
      if (coeff)
        for (int t = 0; t < 9; ++t)
          m.a[static_cast<std::size_t>(t)] += coeff * basis[e][static_cast<std::size_t>(t)];
    }
    for (auto& x : m.a) x = mod_norm(x, p);
    cand[idx] = m;
  }

  const std::vector<long> diff01 = [&] {
    Vec v = vec_sub(spec.g.tensor().pair(0, 1), spec.n.tensor().pair(0, 1));
    return std::vector<long>{v[0].residue(), v[1].residue(), v[2].residue()};
  }();
  const std::vector<long> diff02 = [&] {
    Vec v = vec_sub(spec.g.tensor().pair(0, 2), spec.n.tensor().pair(0, 2));
    return std::vector<long>{v[0].residue(), v[1].residue(), v[2].residue()};
  }();
  const std::vector<long> diff12 = [&] {
    Vec v = vec_sub(spec.g.tensor().pair(1, 2), spec.n.tensor().pair(1, 2));
    return std::vector<long>{v[0].residue(), v[1].residue(), v[2].residue()};
  }();

  // Index L2 candidates by their first column (forced by the skew axiom on
  // the pair (e1, e2)).
  std::unordered_map<long, std::vector<std::uint32_t>> by_col1;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Mat3& m = cand[i];
    long key = (m.col(0, 0) * p + m.col(0, 1)) * p + m.col(0, 2);
    by_col1[key].push_back(static_cast<std::uint32_t>(i));
  }

  struct Hit {
    std::uint64_t i1, i2;
    std::array<long, 9> l3;
  };

  std::uint64_t outer_limit = count;
  std::uint64_t total_pairs = count * count;
  if (spec.max_candidates && *spec.max_candidates < total_pairs)
    outer_limit = (*spec.max_candidates + count - 1) / count;

  int jobs = std::max(1, spec.jobs);
  std::vector<std::vector<Hit>> partials(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  std::uint64_t chunk = (outer_limit + static_cast<std::uint64_t>(jobs) - 1) /
                        static_cast<std::uint64_t>(jobs);

  auto worker = [&](int job) {
    std::uint64_t lo = static_cast<std::uint64_t>(job) * chunk;
    std::uint64_t hi = std::min(outer_limit, lo + chunk);
    auto& out = partials[static_cast<std::size_t>(job)];
    for (std::uint64_t i1 = lo; i1 < hi; ++i1) {
      const Mat3& l1 = cand[i1];
      long key = (mod_norm(l1.col(1, 0) - diff01[0], p) * p +
                  mod_norm(l1.col(1, 1) - diff01[1], p)) * p +
                 mod_norm(l1.col(1, 2) - diff01[2], p);
      auto it = by_col1.find(key);
      if (it == by_col1.end()) continue;
      for (std::uint32_t i2 : it->second) {
        const Mat3& l2 = cand[i2];
        Mat3 l3 = mat3_commutator(l1, l2, p);
        bool ok = true;
        for (int r = 0; r < 3 && ok; ++r) {
          if (mod_norm(l1.col(2, r) - l3.col(0, r) - diff02[static_cast<std::size_t>(r)], p) != 0)
            ok = false;
          else if (mod_norm(l2.col(2, r) - l3.col(1, r) - diff12[static_cast<std::size_t>(r)], p) != 0)
            ok = false;
        }
        if (!ok) continue;
        if (!mat3_is_zero(mat3_commutator(l1, l3, p))) continue;
        if (!mat3_is_zero(mat3_commutator(l2, l3, p))) continue;
        out.push_back({i1, i2, l3.a});
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
    for (auto& t : threads) t.join();
  }

  result.candidates = outer_limit * count;
  result.truncated = outer_limit < count;

  for (auto& part : partials) {
    for (const Hit& h : part) {
      std::vector<long> tensor(27);
      // e_i . e_j = column j of L(e_i).
      const Mat3& l1 = cand[h.i1];
      const Mat3& l2 = cand[h.i2];
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          tensor[(0u * 3 + static_cast<std::size_t>(j)) * 3 + static_cast<std::size_t>(k)] = l1.col(j, k);
          tensor[(1u * 3 + static_cast<std::size_t>(j)) * 3 + static_cast<std::size_t>(k)] = l2.col(j, k);
          tensor[(2u * 3 + static_cast<std::size_t>(j)) * 3 + static_cast<std::size_t>(k)] =
              h.l3[static_cast<std::size_t>(k) * 3 + static_cast<std::size_t>(j)];
        }
      BilinearProduct prod = product_from_residues(f, 3, tensor);
      if (!check_pa(spec.g, spec.n, prod).ok)
        throw error("internal: homomorphism scan accepted an invalid product");
      result.found.push_back(std::move(prod));
      if (spec.max_results && result.found.size() >= *spec.max_results) {
        result.truncated = true;
        return result;
      }
    }
  }
  return result;
}

CorroborationReport corroborate_heisenberg_pairs(long p, int jobs) {
  if (p != 3 && p != 5 && p != 7)
    throw constraint_error("corroboration runs over p in {3, 5, 7}");
  Field f = Field::prime(p);
  LieAlgebra g = LieAlgebra::heisenberg(f, 1);
  LieAlgebra n = LieAlgebra::heisenberg(f, 1);

  SearchSpec spec{g, n, SearchStrategy::hom_through_derivations,
                  std::nullopt, std::nullopt, jobs};
  SearchResult search = enumerate_pa(spec);

  CorroborationReport rep;
  rep.p = p;
  rep.candidates = search.candidates;
  rep.found = search.found.size();

  auto note = [&](const std::string& s) {
    if (rep.details.size() < 32) rep.details.push_back(s);
  };

  const Scalar minus_half = Scalar::of_fraction(f, -1, 2);
  for (std::size_t idx = 0; idx < search.found.size(); ++idx) {
    const BilinearProduct& prod = search.found[idx];
    PAPair pair = PAPair::create(g, n, prod);

    Matrix expected_l3 = n.adjoint_basis(2).scaled(minus_half);
    if (pair.left_op(2) != expected_l3) {
      ++rep.left_rule_violations;
      note("find #" + std::to_string(idx) + ": L(e3) != -1/2 Ad(e3)");
    }
    if (!all_left_mults_nilpotent(pair)) {
      ++rep.nilpotency_violations;
      note("find #" + std::to_string(idx) + ": non-nilpotent left multiplication");
    }
    // x.{y,z} = 0 and [x,y].z + z.[x,y] = 0 on all basis triples.
    bool triples_ok = true;
    for (int x = 0; x < 3 && triples_ok; ++x)
      for (int y = 0; y < 3 && triples_ok; ++y)
        for (int z = 0; z < 3 && triples_ok; ++z) {
          Vec ex = unit_vec(f, 3, x), ez = unit_vec(f, 3, z);
          if (!vec_is_zero(prod.mul(ex, n.tensor().pair(y, z)))) triples_ok = false;
          Vec b = g.tensor().pair(x, y);
          if (!vec_is_zero(vec_add(prod.mul(b, ez), prod.mul(ez, b))))
            triples_ok = false;
        }
    if (!triples_ok) {
      ++rep.triple_violations;
      note("find #" + std::to_string(idx) + ": triple identity violated");
    }
    if (!check_cpa(g, prod.symmetrized()).ok) {
      ++rep.symmetrization_violations;
      note("find #" + std::to_string(idx) + ": symmetrization is not CPA on g");
    }
    if (h0(pair).is_zero() && !n.is_nilpotent()) {
      ++rep.invariant_violations;
      note("find #" + std::to_string(idx) + ": h0 = 0 but n not nilpotent");
    }
  }

  // Membership of every reduced family instance (families 3 and 4 with
  // r3 = 1 are exactly the ones living on the standard bracket of n).
  std::set<std::vector<long>> found_keys;
  for (const BilinearProduct& prod : search.found)
    found_keys.insert(residues_of_product(prod));

  Scalar one = Scalar::one(f);
  auto check_member = [&](const PAPair& pair, const std::string& what) {
    ++rep.family_instances;
    if (!found_keys.count(residues_of_product(pair.product()))) {
      ++rep.family_missing;
      note("missing from enumeration: " + what);
    }
  };
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long dd = 0; dd < p; ++dd) {
          Scalar sa = Scalar::of_long(f, a), sb = Scalar::of_long(f, b),
                 sc = Scalar::of_long(f, c), sd = Scalar::of_long(f, dd);
          if (b != 0)
            check_member(build_pa52(3, {one, sa, sb, sc, sd}),
                         "family 3 (" + std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + "," + std::to_string(dd) + ")");
          if (a * c % p == 0)
            check_member(build_pa52(4, {one, sa, sb, sc, sd}),
                         "family 4 (" + std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + "," + std::to_string(dd) + ")");
        }

  return rep;
}

}  // namespace postlie
