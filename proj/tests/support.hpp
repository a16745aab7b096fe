#pragma once
// Shared helpers and independent oracles for the test binaries.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "pcw/bogomolov.hpp"
#include "pcw/catalog.hpp"
#include "pcw/intlattice.hpp"
#include "pcw/pcgroup.hpp"
#include "pcw/wedgecover.hpp"

namespace testing {

using namespace pcw;

inline InvariantList inv(std::initializer_list<long> d) {
  std::vector<BigInt> v;
  for (long x : d) v.emplace_back(x);
  return InvariantList(std::move(v));
}

inline std::shared_ptr<const FiniteGroup> group_of(const Presentation& p,
                                                   std::size_t bound = kDefaultElementBound) {
  return std::make_shared<const FiniteGroup>(PcGroup(p), bound);
}

inline std::shared_ptr<const FiniteGroup> catalog_group(const std::string& name) {
  return group_of(catalog::get(name).presentation());
}

inline ExtSquareData ext(const std::string& name) { return build_ext_square(catalog_group(name)); }

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

inline std::string fixture(const std::string& name) {
  return std::string(PCW_FIXTURES) + "/" + name;
}

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
inline RunResult run_cli(const std::string& args) {
  RunResult r;
  const std::string cmd = std::string(PCW_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// ---------------------------------------------------------------- oracles

/// Determinant by cofactor expansion; independent of the Bareiss code.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    const BigInt term = m[0][c] * cofactor_det(sub);
    d += (c % 2 == 0) ? term : BigInt(-term);
  }
  return d;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Smith invariants as ratios of determinantal divisors (gcd of k x k minors).
inline std::vector<BigInt> determinantal_invariants(const IntMatrix& m) {
  std::vector<BigInt> d = {1};
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
        BigInt det = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<BigInt> s;
  for (std::size_t k = 1; k < d.size(); ++k) s.push_back(d[k] / d[k - 1]);
  return s;
}

/// Multiplier of an abelian group with invariants d_1 | ... | d_t:
/// sum over i < j of Z/gcd(d_i, d_j) = Z/d_i.
inline InvariantList abelian_multiplier(const std::vector<long>& d) {
  std::vector<BigInt> diag;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) diag.emplace_back(std::gcd(d[i], d[j]));
  // put into elementary-divisor form through a diagonal SNF
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return InvariantList::from_diagonal(snf(m).diagonal());
}

/// Presentation of Z/d_1 x ... x Z/d_t with one generator per factor.
inline Presentation abelian_presentation(const std::vector<long>& d) {
  std::vector<int> orders(d.begin(), d.end());
  return Presentation("abelian", orders);
}

// ------------------------------------------------------ lattice properties

struct LatticePropertyResult {
  std::size_t matrices = 0;
  std::size_t transform = 0;  // failure counts
  std::size_t unimodular = 0;
  std::size_t divisibility = 0;
  std::size_t saturation = 0;
  std::size_t index = 0;
  std::size_t failures() const { return transform + unimodular + divisibility + saturation + index; }
};

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> e(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

inline LatticePropertyResult run_lattice_properties(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 20);
  std::uniform_int_distribution<int> sparse(0, 3);
  LatticePropertyResult r;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix m = random_matrix(rng, rows, cols, 100);
    // some rank-deficient and sparse inputs
    if (sparse(rng) == 0)
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if ((i + j) % 3 != 0) m(i, j) = 0;
    ++r.matrices;

    SmithForm s = snf(m);
    if (!(s.U * m * s.V == s.S)) ++r.transform;
    const BigInt du = determinant(s.U), dv = determinant(s.V);
    if (abs(du) != 1 || abs(dv) != 1 || !(s.V * s.Vinv == IntMatrix::identity(cols))) ++r.unimodular;
    auto diag = s.diagonal();
    bool chain = true;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && s.S(i, j) != 0) chain = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i] < 0) chain = false;
      if (diag[i] == 0 ? diag[i + 1] != 0 : diag[i + 1] % diag[i] != 0) chain = false;
    }
    if (!chain) ++r.divisibility;

    IntegerLattice l = IntegerLattice::span(m);
    IntegerLattice sat = saturation(l);
    if (!(saturation(sat) == sat) || !sat.contains(l) || sat.rank() != l.rank()) ++r.saturation;

    // B = T * A for a random square T of full rank: finite index |det T|
    IntegerLattice a = sat;
    if (a.rank() > 0 && a.rank() <= 8) {
      IntMatrix t = random_matrix(rng, a.rank(), a.rank(), 6);
      BigInt det = determinant(t);
      if (det != 0) {
        IntegerLattice b = IntegerLattice::span(t * a.basis());
        auto idx = index(a, b);
        if (!idx || *idx != abs(det) || quotient_invariants(a, b).order() != abs(det)) ++r.index;
      }
    }
  }
  return r;
}

}  // namespace testing
