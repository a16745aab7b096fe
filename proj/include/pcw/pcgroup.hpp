#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pcw/intlattice.hpp"

namespace pcw {

/// One syllable g_gen^exp of a word. Generators are 0-based internally and
/// 1-based in the text format.
struct Letter {
  std::size_t gen = 0;
  long exp = 0;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Normal form g_1^e_1 ... g_n^e_n with 0 <= e_i < r_i.
struct GroupElement {
  std::vector<int> exponents;

  bool is_identity() const;
  Word to_word() const;
  auto operator<=>(const GroupElement&) const = default;
};

/// Polycyclic presentation of a finite solvable group.
///
/// Power relations read g_i^{r_i} = powers[i]. Conjugation relations read
/// g_i^{-1} g_j g_i = conjugates[j][i] for i < j, the "conjugate of g_j by
/// g_i" of the text format. Both right-hand sides are normal words in
/// generators of index > i.
struct Presentation {
  std::string name;
  std::vector<int> orders;
  std::vector<Word> powers;
  std::vector<std::vector<Word>> conjugates;

  Presentation() = default;
  Presentation(std::string name, std::vector<int> orders);

  std::size_t rank() const { return orders.size(); }
  BigInt order() const;
  const Word& conjugate(std::size_t j, std::size_t i) const { return conjugates[j][i]; }
  Word& conjugate(std::size_t j, std::size_t i) { return conjugates[j][i]; }

  bool operator==(const Presentation&) const = default;
};

/// Structural checks: orders >= 2, every stored word normal and supported on
/// the allowed generators. Throws InvalidInput.
void validate_structure(const Presentation& p);

/// Parses the text format; runs the consistency check and rejects
/// inconsistent input with the failing overlap in the message.
Presentation parse_presentation(std::string_view source);
/// Canonical text rendering (inverse of parse on canonical input).
std::string render_presentation(const Presentation& p);
/// Parses a word like "g2^1 g1^-1" (exponents may be any integer).
Word parse_word(std::string_view text, std::size_t rank);
std::string render_word(const Word& w);

/// Collector state: a normal-form exponent vector plus, when tails are
/// tracked, one integer per relation of the presentation.
struct CollectorState {
  std::vector<int> exponents;
  std::vector<std::int64_t> tails;
};

/// Collection from the left over a pc presentation, optionally recording how
/// often each relation is applied (its "tail"). Tail slots: the n power
/// relations in index order, then the conjugation relations ordered by
/// (i, j) lexicographically.
class Collector {
 public:
  Collector(std::shared_ptr<const Presentation> p, bool track_tails);

  const Presentation& presentation() const { return *p_; }
  bool tracks_tails() const { return track_tails_; }
  std::size_t tail_count() const { return tail_count_; }
  std::size_t power_tail(std::size_t i) const { return i; }
  std::size_t conjugation_tail(std::size_t i, std::size_t j) const;

  CollectorState identity() const;
  // state <- state * g_i
  void multiply_generator(CollectorState& s, std::size_t i) const;
  // state <- state * w
  void multiply_word(CollectorState& s, const Word& w) const;
  // state <- state * x, for x a collected state
  void multiply_state(CollectorState& s, const CollectorState& x) const;

  CollectorState collect(const Word& w) const;
  CollectorState inverse(const CollectorState& x) const;
  const CollectorState& generator_inverse(std::size_t i) const { return inverses_[i]; }

 private:
  void add_tail(CollectorState& s, std::size_t slot, std::int64_t k) const;

  std::shared_ptr<const Presentation> p_;
  bool track_tails_;
  std::size_t tail_count_;
  std::vector<std::size_t> conj_offset_;
  std::vector<CollectorState> inverses_;
};

/// One overlap test, evaluated both ways.
struct OverlapEvaluation {
  std::string label;
  CollectorState lhs;
  CollectorState rhs;
};

/// Evaluates the standard overlap set for collection from the left:
/// g_k (g_j g_i) vs (g_k g_j) g_i for k > j > i, (g_j^r) g_i vs
/// g_j^{r-1} (g_j g_i) and g_j (g_i^r) vs (g_j g_i) g_i^{r-1} for j > i, and
/// g_i (g_i^r) vs (g_i^r) g_i.
std::vector<OverlapEvaluation> evaluate_overlaps(const Collector& c);

struct ConsistencyResult {
  bool consistent = true;
  std::vector<std::string> failing_overlaps;
};

ConsistencyResult is_consistent(const Presentation& p);

/// Group arithmetic over a consistent presentation.
class PcGroup {
 public:
  // Throws InvalidInput if the presentation is malformed or inconsistent.
  explicit PcGroup(Presentation p);

  const Presentation& presentation() const { return *p_; }
  std::size_t rank() const { return p_->rank(); }
  BigInt order() const { return p_->order(); }

  GroupElement identity() const;
  GroupElement generator(std::size_t i) const;
  GroupElement collect(const Word& w) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, long k) const;
  // x y x^-1 y^-1
  GroupElement commutator(const GroupElement& x, const GroupElement& y) const;
  // x y x^-1
  GroupElement conjugate(const GroupElement& x, const GroupElement& y) const;

  const Collector& collector() const { return collector_; }

 private:
  std::shared_ptr<const Presentation> p_;
  Collector collector_;
};

}  // namespace pcw
