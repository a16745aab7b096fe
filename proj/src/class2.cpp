#include <map>

#include "pcw/bogomolov.hpp"
#include "pcw/errors.hpp"

namespace pcw {

namespace {

// Element of G represented by an exponent vector over the pc generators.
ElemId from_lift(const FiniteGroup& g, const std::vector<BigInt>& lift) {
  Word w;
  for (std::size_t k = 0; k < lift.size(); ++k)
    if (lift[k] != 0) w.push_back({k, lift[k].get_si()});
  return g.id(g.pc().collect(w));
}

std::vector<ElemId> basis_elements(const FiniteGroup& g, const AbelianizationBasis& b) {
  std::vector<ElemId> out;
  for (const auto& l : b.lifts) out.push_back(from_lift(g, l));
  return out;
}

// Rank over F_p of a list of rows.
std::size_t rank_mod_p(std::vector<std::vector<long>> rows, long p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  auto inv = [p](long a) {
    long r = 1;
    for (long e = p - 2; e > 0; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const long s = inv(((rows[rank][c] % p) + p) % p);
    for (auto& v : rows[rank]) v = ((v * s) % p + p) % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const long f = ((rows[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::optional<long> prime_power_base(std::size_t n) {
  if (n < 2) return std::nullopt;
  long p = 2;
  while (n % static_cast<std::size_t>(p) != 0) ++p;
  while (n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
  if (n != 1) return std::nullopt;
  return p;
}

}  // namespace

Class2Report class2_check(const ExtSquareData& e, const IntegerLattice& m0, std::size_t bound) {
  const FiniteGroup& g = *e.group;
  auto cls = nilpotency_class(g);
  if (!cls || *cls > 2) throw InvalidInput("class-2 check needs nilpotency class at most 2");

  AbelianizationBasis ab = abelianization_basis(g.presentation());
  const std::vector<ElemId> x = basis_elements(g, ab);
  const auto& d = ab.invariants.divisors();
  const std::size_t t = d.size();

  struct Pair {
    std::size_t i, j;
    long order;
    ElemId comm;
    CoverElement wedge;
  };
  std::vector<Pair> pairs;
  BigInt total = 1;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      pairs.push_back({i, j, d[i].get_si(), g.commutator(x[i], x[j]), wedge(e, x[i], x[j])});
      total *= d[i];
    }
  if (total > static_cast<unsigned long>(bound))
    throw BoundExceeded("|G^ab ^ G^ab| = " + total.get_str() + " exceeds the bound");

  Class2Report r;
  r.wedge_v_order = total;
  r.ker_phi = 0;
  r.ker_psi = 0;
  std::vector<long> c(pairs.size(), 0);
  for (;;) {
    ElemId phi = g.identity();
    for (std::size_t k = 0; k < pairs.size(); ++k) phi = g.mul(phi, g.power(pairs[k].comm, c[k]));
    if (phi == g.identity()) {
      ++r.ker_phi;
      CoverElement psi = e.cover->identity();
      for (std::size_t k = 0; k < pairs.size(); ++k)
        for (long s = 0; s < c[k]; ++s) psi = e.cover->multiply(psi, pairs[k].wedge);
      if (!psi.gpart.is_identity()) throw CrossCheckFailure("Psi and Phi disagree on G");
      if (m0.contains(psi.tail_vector())) ++r.ker_psi;
    }
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == pairs[k].order) c[k++] = 0;
    if (k == c.size()) break;
  }
  r.bogomolov = quotient_invariants(e.saturated, m0);
  r.passed = r.ker_psi != 0 && r.ker_phi % r.ker_psi == 0 &&
             r.ker_phi / r.ker_psi == r.bogomolov.order();
  return r;
}

bool blackburn_evens_applies(const FiniteGroup& g) {
  auto p = prime_power_base(g.order());
  if (!p) return false;
  auto cls = nilpotency_class(g);
  if (!cls || *cls > 2) return false;
  InvariantList ab = abelianization(g.presentation());
  if (ab.trivial()) return false;
  for (const auto& dv : ab.divisors())
    if (dv != *p) return false;
  return true;
}

BigInt blackburn_evens_multiplier_order(const FiniteGroup& g) {
  if (!blackburn_evens_applies(g))
    throw InvalidInput("Blackburn-Evens needs a p-group of class <= 2 with elementary abelian G^ab");
  const long p = *prime_power_base(g.order());

  AbelianizationBasis ab = abelianization_basis(g.presentation());
  const std::vector<ElemId> x = basis_elements(g, ab);
  const std::size_t dv = x.size();

  // basis of W = gamma_2(G) and F_p coordinates of its elements
  ElementSet w = derived_subgroup(g);
  std::vector<ElemId> wb;
  ElementSet span = g.closure(wb);
  for (ElemId y : w)
    if (!span.contains(y)) {
      wb.push_back(y);
      span = g.closure(wb);
    }
  const std::size_t de = wb.size();
  std::map<ElemId, std::vector<long>> coords;
  {
    std::vector<long> a(de, 0);
    for (;;) {
      ElemId y = g.identity();
      for (std::size_t k = 0; k < de; ++k) y = g.mul(y, g.power(wb[k], a[k]));
      coords[y] = a;
      std::size_t k = 0;
      while (k < de && ++a[k] == p) a[k++] = 0;
      if (k == de) break;
    }
  }
  if (coords.size() != w.size()) throw CrossCheckFailure("gamma_2(G) is not elementary abelian");
  auto coord = [&](ElemId y) {
    auto it = coords.find(y);
    if (it == coords.end()) throw CrossCheckFailure("element outside gamma_2(G)");
    return it->second;
  };
  auto bracket = [&](std::size_t i, std::size_t j) { return coord(g.commutator(x[i], x[j])); };

  // Phi: wedge^2 V -> W
  std::vector<std::vector<long>> phi_rows;
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = i + 1; j < dv; ++j) phi_rows.push_back(bracket(i, j));
  const std::size_t wedge_dim = dv * (dv - 1) / 2;
  const std::size_t ker_phi_dim = wedge_dim - (de ? rank_mod_p(phi_rows, p) : 0);

  // X = X1 + X2 inside V (x) W, coordinate (i, k) -> i * de + k
  std::vector<std::vector<long>> xrows;
  if (de > 0) {
    auto add_tensor = [&](std::vector<long>& row, std::size_t i, const std::vector<long>& f) {
      for (std::size_t k = 0; k < de; ++k) row[i * de + k] = (row[i * de + k] + f[k]) % p;
    };
    for (std::size_t i = 0; i < dv; ++i)
      for (std::size_t j = i + 1; j < dv; ++j)
        for (std::size_t k = j + 1; k < dv; ++k) {
          std::vector<long> row(dv * de, 0);
          add_tensor(row, i, bracket(j, k));
          add_tensor(row, j, bracket(k, i));
          add_tensor(row, k, bracket(i, j));
          xrows.push_back(std::move(row));
        }
    std::vector<long> a(dv, 0);
    for (;;) {
      ElemId y = g.identity();
      for (std::size_t i = 0; i < dv; ++i) y = g.mul(y, g.power(x[i], a[i]));
      const std::vector<long> f = coord(g.power(y, p));
      std::vector<long> row(dv * de, 0);
      for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t k = 0; k < de; ++k) row[i * de + k] = a[i] * f[k] % p;
      xrows.push_back(std::move(row));
      std::size_t i = 0;
      while (i < dv && ++a[i] == p) a[i++] = 0;
      if (i == dv) break;
    }
  }
  const std::size_t quotient_dim = dv * de - rank_mod_p(xrows, p);

  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(ker_phi_dim + quotient_dim));
  return out;
}

}  // namespace pcw
