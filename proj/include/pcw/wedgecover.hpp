#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pcw/finite_group.hpp"
#include "pcw/intlattice.hpp"
#include "pcw/pcgroup.hpp"

namespace pcw {

inline constexpr std::size_t kDefaultCoverBound = 200000;

using TailVector = std::vector<BigInt>;

/// Element of the tails extension: a normal form of G together with an
/// exact, unreduced tail vector.
struct CoverElement {
  GroupElement gpart;
  std::vector<std::int64_t> tails;

  TailVector tail_vector() const;
  bool operator==(const CoverElement&) const = default;
};

/// Central extension of G by one infinite cyclic tail per pc relation. It is
/// a pc model of F/[R,F] for the free presentation underlying the pc
/// presentation, once tails are read modulo the consistency lattice.
class TailedCover {
 public:
  explicit TailedCover(const PcGroup& g);

  const Presentation& base() const { return collector_.presentation(); }
  std::size_t tail_count() const { return collector_.tail_count(); }
  std::size_t power_tail(std::size_t i) const { return collector_.power_tail(i); }
  std::size_t conjugation_tail(std::size_t i, std::size_t j) const {
    return collector_.conjugation_tail(i, j);
  }
  const Collector& collector() const { return collector_; }

  CoverElement identity() const;
  CoverElement collect(const Word& w) const;
  // Lift with the given tail offset (zero when empty).
  CoverElement lift(const GroupElement& g, std::span<const std::int64_t> offset = {}) const;
  CoverElement multiply(const CoverElement& a, const CoverElement& b) const;
  CoverElement inverse(const CoverElement& a) const;
  // a b a^-1 b^-1
  CoverElement commutator(const CoverElement& a, const CoverElement& b) const;

 private:
  Collector collector_;
};

/// Lattice of tail relations forced by the overlap tests. Throws
/// CrossCheckFailure if the base presentation itself is inconsistent.
IntegerLattice consistency_lattice(const TailedCover& c);

/// Everything derived from the cover that the multiplier computations need.
struct ExtSquareData {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const TailedCover> cover;
  IntegerLattice consistency;  // C
  IntegerLattice saturated;    // sat(C)
  InvariantList multiplier;    // sat(C) / C
  ElementSet derived;          // gamma_2(G)
  BigInt exterior_square_order;
  // wedge_table[i][j] = wedge(g_i, g_j)
  std::vector<std::vector<CoverElement>> wedge_table;
};

/// Builds cover, C, sat(C) and the multiplier. Checks rank(C) = m - n.
ExtSquareData build_ext_square(std::shared_ptr<const FiniteGroup> g);

InvariantList multiplier(const ExtSquareData& e);

/// x ^ y evaluated as the commutator of zero-tail lifts.
CoverElement wedge(const ExtSquareData& e, const GroupElement& x, const GroupElement& y);
CoverElement wedge(const ExtSquareData& e, ElemId x, ElemId y);

/// True when a - b lies in the lattice.
bool congruent(const IntegerLattice& l, std::span<const BigInt> a, std::span<const BigInt> b);

BigInt exterior_square_order(const ExtSquareData& e);
BigInt curly_wedge_order(const ExtSquareData& e, const InvariantList& bogomolov);

struct SignedWedge {
  ElemId x;
  ElemId y;
  int sign = 1;
  bool operator==(const SignedWedge&) const = default;
};
using WedgeWord = std::vector<SignedWedge>;

/// Product of wedge(x_k, y_k)^{sign_k} in order.
CoverElement evaluate_wedge_word(const ExtSquareData& e, const WedgeWord& w);

/// Breadth-first enumeration of G ^ G as the derived subgroup of the cover
/// with tails read modulo C. Every element keeps a wedge word reaching it.
class ExteriorSquareEnumeration {
 public:
  ExteriorSquareEnumeration(const ExtSquareData& e, std::size_t bound = kDefaultCoverBound);

  std::size_t order() const { return nodes_.size(); }
  // Word for the element (gpart, tails mod C); nullopt when not in G ^ G.
  std::optional<WedgeWord> word_for(ElemId gpart, std::span<const BigInt> tails) const;
  const std::vector<SignedWedge>& generators() const { return gens_; }

 private:
  struct Node {
    ElemId gpart;
    std::vector<std::int64_t> residue;
    std::size_t parent;
    std::size_t via;  // generator index
  };

  std::string key(ElemId gpart, std::span<const BigInt> residue) const;
  void explore(std::size_t bound);

  const ExtSquareData* e_;
  std::vector<SignedWedge> gens_;
  std::vector<CoverElement> gen_values_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Wedge word whose product has trivial gpart and tail congruent to `target`
/// modulo C. Throws InvalidInput when target is not in sat(C) and
/// BoundExceeded when |G ^ G| exceeds the bound.
WedgeWord express_as_wedge_word(const ExtSquareData& e, std::span<const BigInt> target,
                                std::size_t bound = kDefaultCoverBound);

}  // namespace pcw
