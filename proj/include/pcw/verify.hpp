#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pcw/bogomolov.hpp"
#include "pcw/catalog.hpp"
#include "pcw/wedgecover.hpp"

namespace pcw {

struct WedgePropertyResult {
  std::size_t samples = 0;
  std::size_t lift_independence = 0;  // failure counts
  std::size_t kappa = 0;
  std::size_t landing = 0;
  std::size_t antisymmetry = 0;
  std::size_t conjugation = 0;
  std::size_t homomorphism = 0;

  std::size_t failures() const {
    return lift_independence + kappa + landing + antisymmetry + conjugation + homomorphism;
  }
};

/// Randomized wedge identities: exact lift independence, gpart = [x,y], and
/// for commuting pairs landing in sat(C), antisymmetry, conjugation
/// invariance and additivity on centralizers modulo C.
WedgePropertyResult check_wedge_identities(const ExtSquareData& e, std::size_t samples,
                                           std::uint64_t seed);

struct VerifyOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 20240601;
  std::size_t element_bound = kDefaultElementBound;
  std::size_t cover_bound = kDefaultCoverBound;
  std::size_t pair_bound = kDefaultPairBound;
};

struct VerifyReport {
  std::string group;
  std::vector<NamedCheck> checks;
  bool passed() const;
};

/// Runs every applicable suite on one group. `expected` adds comparisons with
/// frozen catalog values and enables the Frobenius checks it configures.
VerifyReport verify_group(const Presentation& p, const VerifyOptions& opt,
                          const catalog::Entry* expected = nullptr);

}  // namespace pcw
