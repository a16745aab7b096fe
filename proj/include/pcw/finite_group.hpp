#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcw/intlattice.hpp"
#include "pcw/pcgroup.hpp"

namespace pcw {

inline constexpr std::size_t kDefaultElementBound = 5000;

/// Index of an element in lexicographic exponent order (g_1 most significant).
using ElemId = std::uint32_t;

/// A subset of an enumerated group: sorted ids plus a membership mask.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t universe, std::vector<ElemId> ids);

  std::size_t size() const { return ids_.size(); }
  bool contains(ElemId x) const { return x < mask_.size() && mask_[x]; }
  const std::vector<ElemId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool operator==(const ElementSet& rhs) const { return ids_ == rhs.ids_; }
  bool subset_of(const ElementSet& rhs) const;

 private:
  std::vector<bool> mask_;
  std::vector<ElemId> ids_;
};

/// A pc group small enough to enumerate. Elements are addressed by ElemId.
class FiniteGroup {
 public:
  // Throws BoundExceeded when the order exceeds `bound`.
  explicit FiniteGroup(PcGroup g, std::size_t bound = kDefaultElementBound);

  const PcGroup& pc() const { return g_; }
  const Presentation& presentation() const { return g_.presentation(); }
  std::size_t order() const { return order_; }

  GroupElement element(ElemId x) const;
  ElemId id(const GroupElement& g) const;
  ElemId identity() const { return 0; }
  ElemId generator(std::size_t i) const { return static_cast<ElemId>(stride_[i]); }

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  ElemId commutator(ElemId x, ElemId y) const;  // x y x^-1 y^-1
  ElemId conjugate(ElemId x, ElemId y) const;   // x y x^-1
  ElemId power(ElemId x, long k) const;

  std::vector<GroupElement> elements() const;

  ElementSet all() const;
  ElementSet closure(std::span<const ElemId> gens) const;
  ElementSet normal_closure(std::span<const ElemId> gens) const;
  bool is_normal(const ElementSet& s) const;
  // True when s is a subgroup. Grows a generating set greedily.
  bool is_subgroup(const ElementSet& s) const;

 private:
  PcGroup g_;
  std::size_t order_ = 0;
  std::vector<std::size_t> stride_;
  std::vector<ElemId> inverse_;
  std::vector<ElemId> table_;  // full multiplication table when small
};

struct ConjugacyClass {
  ElemId representative;  // least id in the class
  std::size_t size;
};

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);
std::vector<ElemId> centralizer(const FiniteGroup& g, ElemId x);
/// Generating set of C_G(x), greedily reduced: pc generators first, then the
/// remaining centralizer elements in id order, each kept only if it is not in
/// the closure of those already kept.
std::vector<ElemId> centralizer_generators(const FiniteGroup& g, ElemId x);

ElementSet derived_subgroup(const FiniteGroup& g);
/// Lower central series G = L1 > L2 > ... until it stabilizes.
std::vector<ElementSet> lower_central_series(const FiniteGroup& g);
/// nullopt when the group is not nilpotent.
std::optional<int> nilpotency_class(const FiniteGroup& g);

/// Abelian invariants from the Smith form of the abelianized relation matrix.
InvariantList abelianization(const Presentation& p);

/// Smith basis of G^ab: for each invariant d_k an exponent vector over the pc
/// generators whose image generates the corresponding cyclic factor.
struct AbelianizationBasis {
  InvariantList invariants;
  std::vector<std::vector<BigInt>> lifts;
};
AbelianizationBasis abelianization_basis(const Presentation& p);

struct QuotientMap {
  Presentation presentation;
  std::vector<ElemId> projection;  // G id -> id in the enumerated quotient
  std::vector<ElemId> section;     // quotient id -> a preimage in G
};

/// G/N via coset enumeration. The quotient pcgs is induced from the pc
/// series of G: the image of g_i is kept when it is nontrivial modulo the
/// image of <g_{i+1},...,g_n>. Throws InvalidInput if N is not a normal
/// subgroup.
QuotientMap quotient_presentation(const FiniteGroup& g, const ElementSet& n);

struct WordSubgroup {
  ElementSet normal;        // normal closure of the words
  bool already_normal;      // the plain closure was normal
};
/// Normal closure of the subgroup generated by words like "g2^1 g3^2".
WordSubgroup normal_subgroup_from_words(const FiniteGroup& g, const std::vector<std::string>& words);

}  // namespace pcw
