#include "pcw/pcgroup.hpp"

#include <sstream>
#include <utility>

#include "pcw/errors.hpp"

namespace pcw {

bool GroupElement::is_identity() const {
  for (int e : exponents)
    if (e != 0) return false;
  return true;
}

Word GroupElement::to_word() const {
  Word w;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) w.push_back({i, exponents[i]});
  return w;
}

Presentation::Presentation(std::string name_, std::vector<int> orders_)
    : name(std::move(name_)), orders(std::move(orders_)) {
  const std::size_t n = orders.size();
  powers.assign(n, Word{});
  conjugates.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) conjugates[j].push_back(Word{{j, 1}});
}

BigInt Presentation::order() const {
  BigInt o = 1;
  for (int r : orders) o *= r;
  return o;
}

namespace {

void check_normal_word(const Presentation& p, const Word& w, std::size_t min_gen,
                       const std::string& where) {
  std::size_t next = min_gen;
  for (const auto& l : w) {
    if (l.gen >= p.rank())
      throw InvalidInput(where + ": generator g" + std::to_string(l.gen + 1) +
                         " out of range");
    if (l.gen < next)
      throw InvalidInput(where + ": word is not normal (generator g" +
                         std::to_string(l.gen + 1) + " out of order or not allowed)");
    if (l.exp <= 0 || l.exp >= p.orders[l.gen])
      throw InvalidInput(where + ": exponent " + std::to_string(l.exp) + " of g" +
                         std::to_string(l.gen + 1) + " outside [1, " +
                         std::to_string(p.orders[l.gen]) + ")");
    next = l.gen + 1;
  }
}

}  // namespace

void validate_structure(const Presentation& p) {
  const std::size_t n = p.rank();
  for (std::size_t i = 0; i < n; ++i)
    if (p.orders[i] < 2)
      throw InvalidInput("relative order of g" + std::to_string(i + 1) + " is below 2");
  if (p.powers.size() != n || p.conjugates.size() != n)
    throw InvalidInput("relation tables do not match the generator count");
  for (std::size_t i = 0; i < n; ++i) {
    check_normal_word(p, p.powers[i], i + 1, "pow " + std::to_string(i + 1));
    if (p.conjugates[i].size() != i)
      throw InvalidInput("conjugation table row " + std::to_string(i + 1) + " has wrong size");
    for (std::size_t k = 0; k < i; ++k)
      check_normal_word(p, p.conjugates[i][k], k + 1,
                        "conj " + std::to_string(i + 1) + " " + std::to_string(k + 1));
  }
}

Collector::Collector(std::shared_ptr<const Presentation> p, bool track_tails)
    : p_(std::move(p)), track_tails_(track_tails) {
  const std::size_t n = p_->rank();
  tail_count_ = n + n * (n - 1) / 2;
  conj_offset_.resize(n);
  std::size_t off = n;
  for (std::size_t i = 0; i < n; ++i) {
    conj_offset_[i] = off;
    off += n - 1 - i;
  }
  // g_i^{-1} = g_i^{r_i - 1} (power word)^{-1} t_i^{-1}, built from the top down
  inverses_.resize(n);
  for (std::size_t i = n; i-- > 0;) {
    CollectorState s = identity();
    for (int e = 1; e < p_->orders[i]; ++e) multiply_generator(s, i);
    const Word& w = p_->powers[i];
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      for (long e = 0; e < it->exp; ++e) multiply_state(s, inverses_[it->gen]);
    add_tail(s, power_tail(i), -1);
    inverses_[i] = std::move(s);
  }
}

std::size_t Collector::conjugation_tail(std::size_t i, std::size_t j) const {
  return conj_offset_[i] + (j - i - 1);
}

CollectorState Collector::identity() const {
  CollectorState s;
  s.exponents.assign(p_->rank(), 0);
  if (track_tails_) s.tails.assign(tail_count_, 0);
  return s;
}

void Collector::add_tail(CollectorState& s, std::size_t slot, std::int64_t k) const {
  if (!track_tails_) return;
  if (__builtin_add_overflow(s.tails[slot], k, &s.tails[slot]))
    throw BoundExceeded("tail counter overflow during collection");
}

void Collector::multiply_generator(CollectorState& s, std::size_t i) const {
  const Presentation& p = *p_;
  const std::size_t n = p.rank();
  std::size_t top = n;
  while (top > i + 1 && s.exponents[top - 1] == 0) --top;

  if (top == i + 1) {
    if (++s.exponents[i] < p.orders[i]) return;
    s.exponents[i] = 0;
    add_tail(s, power_tail(i), 1);
    multiply_word(s, p.powers[i]);
    return;
  }

  // move g_i left past g_{i+1}^{e_{i+1}} ... g_n^{e_n}:
  //   suffix * g_i = g_i * prod_j (g_i^{-1} g_j g_i)^{e_j}
  std::vector<int> suffix(s.exponents.begin() + static_cast<std::ptrdiff_t>(i + 1),
                          s.exponents.begin() + static_cast<std::ptrdiff_t>(top));
  std::fill(s.exponents.begin() + static_cast<std::ptrdiff_t>(i + 1), s.exponents.end(), 0);
  if (++s.exponents[i] == p.orders[i]) {
    s.exponents[i] = 0;
    add_tail(s, power_tail(i), 1);
    multiply_word(s, p.powers[i]);
  }
  for (std::size_t j = i + 1; j < top; ++j) {
    const int e = suffix[j - i - 1];
    if (e == 0) continue;
    const Word& w = p.conjugates[j][i];
    for (int k = 0; k < e; ++k) multiply_word(s, w);
    add_tail(s, conjugation_tail(i, j), e);
  }
}

void Collector::multiply_word(CollectorState& s, const Word& w) const {
  for (const auto& l : w) {
    if (l.gen >= p_->rank()) throw InvalidInput("word generator out of range");
    if (l.exp > 0) {
      for (long k = 0; k < l.exp; ++k) multiply_generator(s, l.gen);
    } else {
      for (long k = 0; k < -l.exp; ++k) multiply_state(s, inverses_[l.gen]);
    }
  }
}

void Collector::multiply_state(CollectorState& s, const CollectorState& x) const {
  for (std::size_t k = 0; k < x.exponents.size(); ++k)
    for (int e = 0; e < x.exponents[k]; ++e) multiply_generator(s, k);
  if (track_tails_)
    for (std::size_t t = 0; t < tail_count_; ++t) add_tail(s, t, x.tails[t]);
}

CollectorState Collector::collect(const Word& w) const {
  CollectorState s = identity();
  multiply_word(s, w);
  return s;
}

CollectorState Collector::inverse(const CollectorState& x) const {
  CollectorState s = identity();
  for (std::size_t k = x.exponents.size(); k-- > 0;)
    for (int e = 0; e < x.exponents[k]; ++e) multiply_state(s, inverses_[k]);
  if (track_tails_)
    for (std::size_t t = 0; t < tail_count_; ++t) add_tail(s, t, -x.tails[t]);
  return s;
}

std::vector<OverlapEvaluation> evaluate_overlaps(const Collector& c) {
  const Presentation& p = c.presentation();
  const std::size_t n = p.rank();
  auto gen = [&](std::size_t i) {
    CollectorState s = c.identity();
    c.multiply_generator(s, i);
    return s;
  };
  auto pow = [&](std::size_t i, int e) {
    CollectorState s = c.identity();
    for (int k = 0; k < e; ++k) c.multiply_generator(s, i);
    return s;
  };
  auto prod = [&](CollectorState a, const CollectorState& b) {
    c.multiply_state(a, b);
    return a;
  };
  auto g = [](std::size_t i) { return "g" + std::to_string(i + 1); };

  std::vector<OverlapEvaluation> out;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        out.push_back({g(k) + " " + g(j) + " " + g(i),
                       prod(gen(k), prod(gen(j), gen(i))),
                       prod(prod(gen(k), gen(j)), gen(i))});
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const int rj = p.orders[j];
      const int ri = p.orders[i];
      out.push_back({g(j) + "^" + std::to_string(rj) + " " + g(i),
                     prod(pow(j, rj), gen(i)),
                     prod(pow(j, rj - 1), prod(gen(j), gen(i)))});
      out.push_back({g(j) + " " + g(i) + "^" + std::to_string(ri),
                     prod(gen(j), pow(i, ri)),
                     prod(prod(gen(j), gen(i)), pow(i, ri - 1))});
    }
  for (std::size_t i = 0; i < n; ++i) {
    const int ri = p.orders[i];
    out.push_back({g(i) + "^" + std::to_string(ri + 1), prod(gen(i), pow(i, ri)),
                   prod(pow(i, ri), gen(i))});
  }
  return out;
}

ConsistencyResult is_consistent(const Presentation& p) {
  validate_structure(p);
  Collector c(std::make_shared<const Presentation>(p), false);
  ConsistencyResult r;
  for (const auto& ov : evaluate_overlaps(c))
    if (ov.lhs.exponents != ov.rhs.exponents) {
      r.consistent = false;
      r.failing_overlaps.push_back(ov.label);
    }
  return r;
}

namespace {

std::shared_ptr<const Presentation> checked(Presentation p) {
  ConsistencyResult r = is_consistent(p);
  if (!r.consistent) {
    std::string msg = "presentation '" + p.name + "' is inconsistent; failing overlap";
    msg += r.failing_overlaps.size() > 1 ? "s: " : ": ";
    for (std::size_t i = 0; i < r.failing_overlaps.size(); ++i)
      msg += (i ? ", " : "") + r.failing_overlaps[i];
    throw InvalidInput(msg);
  }
  return std::make_shared<const Presentation>(std::move(p));
}

}  // namespace

PcGroup::PcGroup(Presentation p) : p_(checked(std::move(p))), collector_(p_, false) {}

GroupElement PcGroup::identity() const { return {std::vector<int>(rank(), 0)}; }

GroupElement PcGroup::generator(std::size_t i) const {
  GroupElement g = identity();
  g.exponents.at(i) = 1;
  return g;
}

GroupElement PcGroup::collect(const Word& w) const {
  return {collector_.collect(w).exponents};
}

GroupElement PcGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  CollectorState s{a.exponents, {}};
  for (std::size_t k = 0; k < b.exponents.size(); ++k)
    for (int e = 0; e < b.exponents[k]; ++e) collector_.multiply_generator(s, k);
  return {std::move(s.exponents)};
}

GroupElement PcGroup::inverse(const GroupElement& a) const {
  return {collector_.inverse(CollectorState{a.exponents, {}}).exponents};
}

GroupElement PcGroup::power(const GroupElement& a, long k) const {
  GroupElement base = k < 0 ? inverse(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  GroupElement acc = identity();
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

GroupElement PcGroup::commutator(const GroupElement& x, const GroupElement& y) const {
  return multiply(multiply(multiply(x, y), inverse(x)), inverse(y));
}

GroupElement PcGroup::conjugate(const GroupElement& x, const GroupElement& y) const {
  return multiply(multiply(x, y), inverse(x));
}

}  // namespace pcw
