#include "pcw/bogomolov.hpp"

#include <chrono>

#include "pcw/errors.hpp"

namespace pcw {

M0Method parse_method(const std::string& s) {
  if (s == "classes") return M0Method::classes;
  if (s == "pairs") return M0Method::pairs;
  if (s == "both") return M0Method::both;
  throw InvalidInput("unknown method '" + s + "' (expected classes, pairs or both)");
}

std::string to_string(M0Method m) {
  switch (m) {
    case M0Method::classes: return "classes";
    case M0Method::pairs: return "pairs";
    case M0Method::both: return "both";
  }
  return "?";
}

namespace {

// Grows C by commuting wedges, skipping ones already inside.
class M0Builder {
 public:
  explicit M0Builder(const ExtSquareData& e) : e_(e), lattice_(e.consistency) {}

  void add(ElemId x, ElemId y) {
    CoverElement w = wedge(e_, x, y);
    if (!w.gpart.is_identity())
      throw CrossCheckFailure("wedge of a commuting pair has nontrivial image in G");
    TailVector t = w.tail_vector();
    if (!e_.saturated.contains(t))
      throw CrossCheckFailure("wedge of a commuting pair lies outside sat(C)");
    ++count_;
    if (lattice_.contains(t)) return;
    lattice_ = lattice_sum(lattice_, IntegerLattice::span({t}, t.size()));
  }

  std::size_t count() const { return count_; }
  const IntegerLattice& lattice() const { return lattice_; }

 private:
  const ExtSquareData& e_;
  IntegerLattice lattice_;
  std::size_t count_ = 0;
};

struct M0Result {
  IntegerLattice lattice;
  std::size_t generators;
};

M0Result classes_impl(const ExtSquareData& e) {
  const FiniteGroup& g = *e.group;
  M0Builder b(e);
  for (const auto& cls : conjugacy_classes(g))
    for (ElemId x : centralizer_generators(g, cls.representative)) b.add(cls.representative, x);
  return {b.lattice(), b.count()};
}

M0Result pairs_impl(const ExtSquareData& e, std::size_t pair_bound) {
  const FiniteGroup& g = *e.group;
  const std::size_t n = g.order();
  if (n > 0 && n > pair_bound / n)
    throw BoundExceeded("pair enumeration needs " + std::to_string(n) + "^2 pairs, bound is " +
                        std::to_string(pair_bound));
  M0Builder b(e);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (g.commutator(x, y) == g.identity()) b.add(x, y);
  return {b.lattice(), b.count()};
}

}  // namespace

IntegerLattice m0_lattice_classes(const ExtSquareData& e) { return classes_impl(e).lattice; }

IntegerLattice m0_lattice_pairs(const ExtSquareData& e, std::size_t pair_bound) {
  return pairs_impl(e, pair_bound).lattice;
}

BogomolovReport bogomolov_multiplier(const ExtSquareData& e, M0Method method,
                                     std::size_t pair_bound) {
  const auto start = std::chrono::steady_clock::now();
  const FiniteGroup& g = *e.group;
  BogomolovReport r;
  r.name = g.presentation().name;
  r.order = g.presentation().order();
  r.abelianization = abelianization(g.presentation());
  r.derived_order = static_cast<unsigned long>(e.derived.size());
  r.multiplier = e.multiplier;
  r.method = method;

  M0Result m0;
  if (method == M0Method::pairs) {
    m0 = pairs_impl(e, pair_bound);
  } else {
    m0 = classes_impl(e);
    if (method == M0Method::both) {
      M0Result oracle = pairs_impl(e, pair_bound);
      if (!(oracle.lattice == m0.lattice))
        throw CrossCheckFailure("M0 lattices from classes and from all pairs differ");
      m0.generators += oracle.generators;
    }
  }
  if (!m0.lattice.contains(e.consistency) || !e.saturated.contains(m0.lattice))
    throw CrossCheckFailure("M0 lattice is not between C and sat(C)");

  r.m0_generators = m0.generators;
  r.m0_order = quotient_invariants(m0.lattice, e.consistency).order();
  r.bogomolov = quotient_invariants(e.saturated, m0.lattice);
  r.m0_index = r.bogomolov.order();
  r.exterior_square_order = exterior_square_order(e);
  r.curly_wedge_order = curly_wedge_order(e, r.bogomolov);
  if (r.m0_order * r.m0_index != r.multiplier.order())
    throw CrossCheckFailure("|M0| * |B0| differs from |M|");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace pcw
