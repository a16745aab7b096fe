#include "pcw/wedgecover.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "pcw/errors.hpp"

namespace pcw {

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw BoundExceeded("tail value does not fit in 64 bits");
  return v.get_si();
}

std::vector<std::int64_t> to_int64(std::span<const BigInt> v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

}  // namespace

TailVector CoverElement::tail_vector() const {
  TailVector out;
  out.reserve(tails.size());
  for (auto t : tails) out.emplace_back(static_cast<long>(t));
  return out;
}

TailedCover::TailedCover(const PcGroup& g)
    : collector_(std::make_shared<const Presentation>(g.presentation()), true) {}

CoverElement TailedCover::identity() const {
  CollectorState s = collector_.identity();
  return {{std::move(s.exponents)}, std::move(s.tails)};
}

CoverElement TailedCover::collect(const Word& w) const {
  CollectorState s = collector_.collect(w);
  return {{std::move(s.exponents)}, std::move(s.tails)};
}

CoverElement TailedCover::lift(const GroupElement& g, std::span<const std::int64_t> offset) const {
  CoverElement e{g, std::vector<std::int64_t>(tail_count(), 0)};
  if (!offset.empty()) {
    if (offset.size() != tail_count()) throw InvalidInput("tail offset has wrong length");
    e.tails.assign(offset.begin(), offset.end());
  }
  return e;
}

CoverElement TailedCover::multiply(const CoverElement& a, const CoverElement& b) const {
  CollectorState s{a.gpart.exponents, a.tails};
  collector_.multiply_state(s, CollectorState{b.gpart.exponents, b.tails});
  return {{std::move(s.exponents)}, std::move(s.tails)};
}

CoverElement TailedCover::inverse(const CoverElement& a) const {
  CollectorState s = collector_.inverse(CollectorState{a.gpart.exponents, a.tails});
  return {{std::move(s.exponents)}, std::move(s.tails)};
}

CoverElement TailedCover::commutator(const CoverElement& a, const CoverElement& b) const {
  return multiply(multiply(multiply(a, b), inverse(a)), inverse(b));
}

IntegerLattice consistency_lattice(const TailedCover& c) {
  const std::size_t m = c.tail_count();
  std::vector<std::vector<BigInt>> rows;
  for (const auto& ov : evaluate_overlaps(c.collector())) {
    if (ov.lhs.exponents != ov.rhs.exponents)
      throw CrossCheckFailure("base presentation inconsistent at overlap " + ov.label);
    std::vector<BigInt> d(m);
    bool zero = true;
    for (std::size_t t = 0; t < m; ++t) {
      d[t] = BigInt(static_cast<long>(ov.lhs.tails[t])) - BigInt(static_cast<long>(ov.rhs.tails[t]));
      if (d[t] != 0) zero = false;
    }
    if (!zero) rows.push_back(std::move(d));
  }
  return IntegerLattice::span(rows, m);
}

ExtSquareData build_ext_square(std::shared_ptr<const FiniteGroup> g) {
  ExtSquareData e;
  e.group = std::move(g);
  e.cover = std::make_shared<const TailedCover>(e.group->pc());
  e.consistency = consistency_lattice(*e.cover);
  const std::size_t n = e.group->presentation().rank();
  const std::size_t m = e.cover->tail_count();
  if (e.consistency.rank() != m - n)
    throw CrossCheckFailure("consistency lattice has rank " + std::to_string(e.consistency.rank()) +
                            ", expected " + std::to_string(m - n));
  e.saturated = saturation(e.consistency);
  e.multiplier = quotient_invariants(e.saturated, e.consistency);
  e.derived = derived_subgroup(*e.group);
  e.exterior_square_order = BigInt(static_cast<unsigned long>(e.derived.size())) * e.multiplier.order();

  e.wedge_table.assign(n, std::vector<CoverElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e.wedge_table[i][j] = wedge(e, e.group->generator(i), e.group->generator(j));
  return e;
}

InvariantList multiplier(const ExtSquareData& e) {
  return quotient_invariants(e.saturated, e.consistency);
}

CoverElement wedge(const ExtSquareData& e, const GroupElement& x, const GroupElement& y) {
  return e.cover->commutator(e.cover->lift(x), e.cover->lift(y));
}

CoverElement wedge(const ExtSquareData& e, ElemId x, ElemId y) {
  return wedge(e, e.group->element(x), e.group->element(y));
}

bool congruent(const IntegerLattice& l, std::span<const BigInt> a, std::span<const BigInt> b) {
  std::vector<BigInt> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return l.contains(d);
}

BigInt exterior_square_order(const ExtSquareData& e) { return e.exterior_square_order; }

BigInt curly_wedge_order(const ExtSquareData& e, const InvariantList& bogomolov) {
  return BigInt(static_cast<unsigned long>(e.derived.size())) * bogomolov.order();
}

CoverElement evaluate_wedge_word(const ExtSquareData& e, const WedgeWord& w) {
  CoverElement acc = e.cover->identity();
  for (const auto& sw : w) {
    CoverElement v = wedge(e, sw.x, sw.y);
    acc = e.cover->multiply(acc, sw.sign < 0 ? e.cover->inverse(v) : v);
  }
  return acc;
}

ExteriorSquareEnumeration::ExteriorSquareEnumeration(const ExtSquareData& e, std::size_t bound)
    : e_(&e) {
  const FiniteGroup& g = *e.group;
  const std::size_t n = g.presentation().rank();
  if (BigInt(static_cast<unsigned long>(bound)) < e.exterior_square_order)
    throw BoundExceeded("|G^G| = " + e.exterior_square_order.get_str() + " exceeds the bound " +
                        std::to_string(bound));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        gens_.push_back({g.generator(i), g.generator(j), 1});
        gen_values_.push_back(e.wedge_table[i][j]);
      }

  // Grow the generating set until the subgroup is normal in the cover.
  for (;;) {
    explore(bound);
    std::vector<SignedWedge> extra;
    for (std::size_t k = 0; k < n; ++k) {
      const ElemId gk = g.generator(k);
      for (const auto& sw : gens_) {
        SignedWedge c{g.conjugate(gk, sw.x), g.conjugate(gk, sw.y), 1};
        CoverElement v = wedge(e, c.x, c.y);
        if (word_for(g.id(v.gpart), v.tail_vector())) continue;
        if (std::find(extra.begin(), extra.end(), c) == extra.end()) extra.push_back(c);
      }
    }
    if (extra.empty()) break;
    for (const auto& c : extra) {
      gens_.push_back(c);
      gen_values_.push_back(wedge(e, c.x, c.y));
    }
  }
  if (BigInt(static_cast<unsigned long>(nodes_.size())) != e.exterior_square_order)
    throw CrossCheckFailure("enumerated |G^G| = " + std::to_string(nodes_.size()) +
                            " but |gamma_2|*|M| = " + e.exterior_square_order.get_str());
}

std::string ExteriorSquareEnumeration::key(ElemId gpart, std::span<const BigInt> residue) const {
  std::string k = std::to_string(gpart);
  for (const auto& r : residue) {
    k += ',';
    k += r.get_str();
  }
  return k;
}

void ExteriorSquareEnumeration::explore(std::size_t bound) {
  const FiniteGroup& g = *e_->group;
  const TailedCover& cover = *e_->cover;
  std::deque<std::size_t> queue;
  if (nodes_.empty()) {
    const std::size_t m = cover.tail_count();
    nodes_.push_back({g.identity(), std::vector<std::int64_t>(m, 0), 0, 0});
    index_.emplace(key(g.identity(), std::vector<BigInt>(m)), 0);
  }
  // revisit everything: new generators may open new edges from old nodes
  for (std::size_t i = 0; i < nodes_.size(); ++i) queue.push_back(i);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const CoverElement here = cover.lift(g.element(nodes_[cur].gpart), nodes_[cur].residue);
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      CoverElement next = cover.multiply(here, gen_values_[k]);
      std::vector<BigInt> residue = e_->consistency.reduce(next.tail_vector());
      const ElemId id = g.id(next.gpart);
      auto [it, fresh] = index_.emplace(key(id, residue), nodes_.size());
      if (!fresh) continue;
      if (nodes_.size() >= bound) throw BoundExceeded("exterior square enumeration exceeds bound");
      nodes_.push_back({id, to_int64(residue), cur, k});
      queue.push_back(nodes_.size() - 1);
    }
  }
}

std::optional<WedgeWord> ExteriorSquareEnumeration::word_for(ElemId gpart,
                                                             std::span<const BigInt> tails) const {
  auto it = index_.find(key(gpart, e_->consistency.reduce(tails)));
  if (it == index_.end()) return std::nullopt;
  WedgeWord w;
  for (std::size_t cur = it->second; cur != 0; cur = nodes_[cur].parent)
    w.push_back(gens_[nodes_[cur].via]);
  std::reverse(w.begin(), w.end());
  return w;
}

WedgeWord express_as_wedge_word(const ExtSquareData& e, std::span<const BigInt> target,
                                std::size_t bound) {
  if (!e.saturated.contains(target)) throw InvalidInput("target tail vector is not in sat(C)");
  if (e.consistency.contains(target)) return {};
  ExteriorSquareEnumeration en(e, bound);
  auto w = en.word_for(e.group->identity(), target);
  if (!w) throw CrossCheckFailure("multiplier element missing from the exterior square");
  return *w;
}

}  // namespace pcw
