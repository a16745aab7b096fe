#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcw/intlattice.hpp"
#include "pcw/pcgroup.hpp"

namespace pcw::catalog {

/// Where an expected value comes from.
///   literature: a value stated in the published computation for the group
///   oracle:     computed once by the all-pairs / Blackburn-Evens oracles and frozen
///   elementary: follows directly from the structure (cyclic, abelian, ...)
enum class Source { literature, oracle, elementary };

std::string to_string(Source s);

template <class T>
struct Expected {
  T value;
  Source source;
};

struct Entry {
  std::string name;
  std::string description;
  std::string source;  // presentation text, emitted verbatim
  Expected<BigInt> order;
  Expected<InvariantList> abelianization;
  Expected<BigInt> derived_order;
  Expected<InvariantList> multiplier;
  Expected<InvariantList> bogomolov;
  // Generators of a Frobenius kernel, when the group is Frobenius.
  std::vector<std::string> frobenius_kernel;

  Presentation presentation() const;
};

/// Throws InvalidInput naming near matches for unknown names.
const Entry& get(std::string_view name);
/// Sorted names.
std::vector<std::string> list();
const std::vector<Entry>& entries();

}  // namespace pcw::catalog
