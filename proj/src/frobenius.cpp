#include <algorithm>
#include <set>

#include "pcw/bogomolov.hpp"
#include "pcw/errors.hpp"

namespace pcw {

namespace {

bool meets_trivially(const ElementSet& h, const ElementSet& n) {
  for (ElemId x : h)
    if (x != 0 && n.contains(x)) return false;
  return true;
}

// Complements of N among the 1- and 2-generated subgroups, in id order.
std::optional<ElementSet> find_complement(const FiniteGroup& g, const ElementSet& n) {
  const std::size_t want = g.order() / n.size();
  for (ElemId x = 0; x < g.order(); ++x) {
    if (n.contains(x)) continue;
    const ElemId one[] = {x};
    ElementSet h = g.closure(one);
    if (h.size() == want && meets_trivially(h, n)) return h;
  }
  for (ElemId x = 0; x < g.order(); ++x)
    for (ElemId y = x + 1; y < g.order(); ++y) {
      if (n.contains(x) || n.contains(y)) continue;
      const ElemId two[] = {x, y};
      ElementSet h = g.closure(two);
      if (h.size() == want && meets_trivially(h, n)) return h;
    }
  return std::nullopt;
}

}  // namespace

FrobeniusReport frobenius_checks(const ExtSquareData& e, const ElementSet& n) {
  const FiniteGroup& g = *e.group;
  if (!g.is_subgroup(n) || !g.is_normal(n)) throw InvalidInput("N is not a normal subgroup");

  FrobeniusReport r;
  r.passed = true;
  if (n.size() == 1 || n.size() == g.order()) {
    r.reason = "N is trivial or the whole group";
    return r;
  }
  r.complement = find_complement(g, n);
  if (!r.complement) {
    r.reason = "no complement among 1- and 2-generated subgroups";
    return r;
  }
  for (ElemId x : n) {
    if (x == g.identity()) continue;
    for (ElemId y : centralizer(g, x))
      if (!n.contains(y)) {
        r.reason = "C_G(n) is not inside N for n = element " + std::to_string(x);
        return r;
      }
  }
  r.frobenius = true;

  std::set<std::vector<ElemId>> seen;
  std::vector<ElementSet> conjugates;
  for (ElemId z = 0; z < g.order(); ++z) {
    std::vector<ElemId> ids;
    for (ElemId h : *r.complement) ids.push_back(g.conjugate(z, h));
    std::sort(ids.begin(), ids.end());
    if (seen.insert(ids).second) conjugates.emplace_back(g.order(), std::move(ids));
  }

  r.lemma_holds = true;
  r.kernel_abelian = true;
  for (ElemId x = 0; x < g.order(); ++x)
    for (ElemId y = 0; y < g.order(); ++y) {
      if (g.commutator(x, y) != g.identity()) {
        if (n.contains(x) && n.contains(y)) r.kernel_abelian = false;
        continue;
      }
      ++r.commuting_pairs;
      if (n.contains(x) && n.contains(y)) continue;
      bool found = false;
      for (const auto& h : conjugates)
        if (h.contains(x) && h.contains(y)) {
          found = true;
          break;
        }
      if (!found) r.lemma_holds = false;
    }

  r.passed = r.lemma_holds;
  if (r.kernel_abelian) {
    r.bogomolov = quotient_invariants(e.saturated, m0_lattice_classes(e));
    r.passed = r.passed && r.bogomolov->trivial();
  }
  return r;
}

}  // namespace pcw
