#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcw/finite_group.hpp"
#include "pcw/intlattice.hpp"
#include "pcw/wedgecover.hpp"

namespace pcw {

// Default cap on |G|^2 for the all-pairs oracle.
inline constexpr std::size_t kDefaultPairBound = 250000;

enum class M0Method { classes, pairs, both };

M0Method parse_method(const std::string& s);
std::string to_string(M0Method m);

/// C + <wedge(c, x)> over class representatives c and generators x of C_G(c).
IntegerLattice m0_lattice_classes(const ExtSquareData& e);
/// C + <wedge(x, y)> over all commuting ordered pairs.
IntegerLattice m0_lattice_pairs(const ExtSquareData& e, std::size_t pair_bound = kDefaultPairBound);

struct BogomolovReport {
  std::string name;
  BigInt order;
  InvariantList abelianization;
  BigInt derived_order;
  InvariantList multiplier;
  BigInt m0_order;               // |M0(G)|
  BigInt m0_index;               // [M(G) : M0(G)]
  std::size_t m0_generators = 0;  // commuting wedges fed into the lattice
  InvariantList bogomolov;
  BigInt exterior_square_order;
  BigInt curly_wedge_order;
  M0Method method = M0Method::classes;
  double seconds = 0;  // not part of the deterministic body
};

/// Throws CrossCheckFailure when method is `both` and the lattices differ.
BogomolovReport bogomolov_multiplier(const ExtSquareData& e, M0Method method,
                                     std::size_t pair_bound = kDefaultPairBound);

// ---------------------------------------------------------------- five-term

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FiveTermReport {
  std::string group;
  BigInt order_n;
  BigInt order_quotient;
  InvariantList bogomolov_g;
  InvariantList bogomolov_q;
  BigInt kn_order;          // |<K(G) cap N>|
  BigInt third_term_order;  // |N / <K(G) cap N>|
  InvariantList abelianization_g;
  InvariantList abelianization_q;
  BigInt image_rho;    // |im rho#| in B0(G/N)
  BigInt image_sigma;  // |im sigma| in N/<K cap N>
  BigInt kernel_pi;    // |(N cap gamma_2) / <K cap N>|
  bool partial = false;
  std::vector<NamedCheck> checks;

  bool passed() const;
};

/// Checks the five-term sequence
///   B0(G) -> B0(G/N) -> N/<K(G) cap N> -> G^ab -> (G/N)^ab -> 0.
/// N must be a normal subgroup. Maps needing wedge words fall back to
/// divisibility checks (report.partial) when the cover bound is hit.
FiveTermReport five_term_check(std::shared_ptr<const FiniteGroup> g, const ElementSet& n,
                               std::size_t cover_bound = kDefaultCoverBound);

/// Closure of all commutators [x, y] of G that lie in N.
ElementSet commutators_in(const FiniteGroup& g, const ElementSet& n);

// ------------------------------------------------------------------ class 2

struct Class2Report {
  BigInt wedge_v_order;  // |G^ab ^ G^ab|
  BigInt ker_phi;
  BigInt ker_psi;
  InvariantList bogomolov;
  bool passed = false;
};

/// |B0(G)| = |ker Phi| / |ker Psi| for groups of class <= 2. Psi is read
/// off the main wedge data, so this is a coherence check. Throws
/// InvalidInput for class > 2.
Class2Report class2_check(const ExtSquareData& e, const IntegerLattice& m0,
                          std::size_t bound = kDefaultCoverBound);

/// |M(G)| predicted from the Blackburn-Evens description for p-groups of
/// class <= 2 with elementary abelian G^ab. Never touches the tails
/// machinery. Throws InvalidInput when the hypotheses fail.
BigInt blackburn_evens_multiplier_order(const FiniteGroup& g);
bool blackburn_evens_applies(const FiniteGroup& g);

// ---------------------------------------------------------------- Frobenius

struct FrobeniusReport {
  bool frobenius = false;
  std::string reason;  // why not, when frobenius is false
  std::optional<ElementSet> complement;
  bool kernel_abelian = false;
  std::size_t commuting_pairs = 0;
  bool lemma_holds = false;
  std::optional<InvariantList> bogomolov;  // set when the kernel is abelian
  bool passed = false;
};

FrobeniusReport frobenius_checks(const ExtSquareData& e, const ElementSet& n);

}  // namespace pcw
