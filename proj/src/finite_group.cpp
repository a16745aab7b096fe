#include "pcw/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "pcw/errors.hpp"

namespace pcw {

namespace {

constexpr std::size_t kTableLimit = 1500;

}  // namespace

ElementSet::ElementSet(std::size_t universe, std::vector<ElemId> ids)
    : mask_(universe, false), ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  for (ElemId x : ids_) mask_.at(x) = true;
}

bool ElementSet::subset_of(const ElementSet& rhs) const {
  return std::all_of(ids_.begin(), ids_.end(), [&](ElemId x) { return rhs.contains(x); });
}

FiniteGroup::FiniteGroup(PcGroup g, std::size_t bound) : g_(std::move(g)) {
  const BigInt ord = g_.order();
  if (ord > bound)
    throw BoundExceeded("group order " + ord.get_str() + " exceeds element bound " +
                        std::to_string(bound));
  order_ = ord.get_ui();
  const std::size_t n = g_.rank();
  stride_.assign(n, 1);
  for (std::size_t i = n; i-- > 1;)
    stride_[i - 1] = stride_[i] * static_cast<std::size_t>(presentation().orders[i]);

  inverse_.resize(order_);
  for (std::size_t x = 0; x < order_; ++x)
    inverse_[x] = id(g_.inverse(element(static_cast<ElemId>(x))));

  if (order_ <= kTableLimit) {
    table_.resize(order_ * order_);
    std::vector<GroupElement> elems = elements();
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        table_[a * order_ + b] = id(g_.multiply(elems[a], elems[b]));
  }
}

GroupElement FiniteGroup::element(ElemId x) const {
  GroupElement g;
  g.exponents.resize(stride_.size());
  std::size_t rest = x;
  for (std::size_t i = 0; i < stride_.size(); ++i) {
    g.exponents[i] = static_cast<int>(rest / stride_[i]);
    rest %= stride_[i];
  }
  return g;
}

ElemId FiniteGroup::id(const GroupElement& g) const {
  std::size_t x = 0;
  for (std::size_t i = 0; i < stride_.size(); ++i)
    x += static_cast<std::size_t>(g.exponents[i]) * stride_[i];
  return static_cast<ElemId>(x);
}

ElemId FiniteGroup::mul(ElemId a, ElemId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  return id(g_.multiply(element(a), element(b)));
}

ElemId FiniteGroup::commutator(ElemId x, ElemId y) const {
  return mul(mul(mul(x, y), inv(x)), inv(y));
}

ElemId FiniteGroup::conjugate(ElemId x, ElemId y) const { return mul(mul(x, y), inv(x)); }

ElemId FiniteGroup::power(ElemId x, long k) const {
  ElemId base = k < 0 ? inv(x) : x;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  ElemId acc = identity();
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

std::vector<GroupElement> FiniteGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t x = 0; x < order_; ++x) out.push_back(element(static_cast<ElemId>(x)));
  return out;
}

ElementSet FiniteGroup::all() const {
  std::vector<ElemId> ids(order_);
  std::iota(ids.begin(), ids.end(), 0);
  return ElementSet(order_, std::move(ids));
}

ElementSet FiniteGroup::closure(std::span<const ElemId> gens) const {
  std::vector<bool> seen(order_, false);
  std::vector<ElemId> found{identity()};
  seen[identity()] = true;
  for (std::size_t k = 0; k < found.size(); ++k)
    for (ElemId s : gens) {
      ElemId y = mul(found[k], s);
      if (!seen[y]) {
        seen[y] = true;
        found.push_back(y);
      }
    }
  return ElementSet(order_, std::move(found));
}

ElementSet FiniteGroup::normal_closure(std::span<const ElemId> gens) const {
  std::vector<ElemId> current(gens.begin(), gens.end());
  ElementSet h = closure(current);
  while (true) {
    bool grew = false;
    for (ElemId x : std::vector<ElemId>(h.ids()))
      for (std::size_t i = 0; i < g_.rank(); ++i) {
        ElemId c = conjugate(generator(i), x);
        if (!h.contains(c)) {
          current.push_back(c);
          h = closure(current);
          grew = true;
        }
      }
    if (!grew) return h;
  }
}

bool FiniteGroup::is_normal(const ElementSet& s) const {
  for (ElemId x : s)
    for (std::size_t i = 0; i < g_.rank(); ++i)
      if (!s.contains(conjugate(generator(i), x))) return false;
  return true;
}

bool FiniteGroup::is_subgroup(const ElementSet& s) const {
  if (!s.contains(identity())) return false;
  std::vector<ElemId> gens;
  ElementSet h = closure(gens);
  for (ElemId y : s) {
    if (h.contains(y)) continue;
    gens.push_back(y);
    h = closure(gens);
    if (h.size() > s.size() || !h.subset_of(s)) return false;
  }
  return h == s;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<ElemId> orbit{static_cast<ElemId>(x)};
    seen[x] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (std::size_t i = 0; i < g.pc().rank(); ++i) {
        ElemId y = g.conjugate(g.generator(i), orbit[k]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    // x is the first unseen id, hence the least member of its orbit
    out.push_back({static_cast<ElemId>(x), orbit.size()});
  }
  return out;
}

std::vector<ElemId> centralizer(const FiniteGroup& g, ElemId x) {
  std::vector<ElemId> out;
  for (std::size_t y = 0; y < g.order(); ++y) {
    ElemId yy = static_cast<ElemId>(y);
    if (g.mul(x, yy) == g.mul(yy, x)) out.push_back(yy);
  }
  return out;
}

std::vector<ElemId> centralizer_generators(const FiniteGroup& g, ElemId x) {
  std::vector<ElemId> cent = centralizer(g, x);
  ElementSet c(g.order(), cent);
  std::vector<ElemId> candidates;
  for (std::size_t i = 0; i < g.pc().rank(); ++i)
    if (c.contains(g.generator(i))) candidates.push_back(g.generator(i));
  candidates.insert(candidates.end(), cent.begin(), cent.end());

  std::vector<ElemId> kept;
  ElementSet h = g.closure(kept);
  for (ElemId y : candidates) {
    if (h.size() == c.size()) break;
    if (h.contains(y)) continue;
    kept.push_back(y);
    h = g.closure(kept);
  }
  return kept;
}

ElementSet derived_subgroup(const FiniteGroup& g) {
  std::vector<ElemId> comms;
  for (std::size_t i = 0; i < g.pc().rank(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      comms.push_back(g.commutator(g.generator(i), g.generator(j)));
  return g.normal_closure(comms);
}

std::vector<ElementSet> lower_central_series(const FiniteGroup& g) {
  std::vector<ElementSet> series{g.all()};
  while (true) {
    std::vector<ElemId> comms;
    for (ElemId x : series.back())
      for (std::size_t i = 0; i < g.pc().rank(); ++i)
        comms.push_back(g.commutator(x, g.generator(i)));
    ElementSet next = g.normal_closure(comms);
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  std::vector<ElementSet> series = lower_central_series(g);
  if (series.back().size() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

namespace {

IntMatrix abelian_relation_matrix(const Presentation& p) {
  const std::size_t n = p.rank();
  IntMatrix m(0, n);
  std::vector<BigInt> row(n);
  auto expsum = [&](const Word& w, BigInt sign) {
    for (const auto& l : w) row[l.gen] += sign * l.exp;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(row.begin(), row.end(), 0);
    row[i] = p.orders[i];
    expsum(p.powers[i], -1);
    m.append_row(row);
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      std::fill(row.begin(), row.end(), 0);
      row[j] = 1;
      expsum(p.conjugate(j, i), -1);
      m.append_row(row);
    }
  return m;
}

}  // namespace

InvariantList abelianization(const Presentation& p) {
  return abelianization_basis(p).invariants;
}

AbelianizationBasis abelianization_basis(const Presentation& p) {
  SmithForm s = snf(abelian_relation_matrix(p));
  AbelianizationBasis out;
  std::vector<BigInt> diag;
  for (std::size_t k = 0; k < p.rank(); ++k) {
    BigInt d = k < s.rank ? BigInt(s.S(k, k)) : BigInt(0);
    if (d == 0) throw InvalidInput("abelianization is infinite; group is not finite");
    if (d == 1) continue;
    diag.push_back(d);
    out.lifts.push_back(s.Vinv.row(k));
  }
  out.invariants = InvariantList(std::move(diag));
  return out;
}

QuotientMap quotient_presentation(const FiniteGroup& g, const ElementSet& n) {
  if (!g.is_subgroup(n)) throw InvalidInput("N is not closed under multiplication");
  if (!g.is_normal(n)) throw InvalidInput("N is not normal");

  const std::size_t order = g.order();
  constexpr ElemId kNone = ~ElemId{0};
  std::vector<ElemId> coset_of(order, kNone);
  std::vector<ElemId> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (coset_of[x] != kNone) continue;
    const ElemId c = static_cast<ElemId>(reps.size());
    reps.push_back(static_cast<ElemId>(x));
    for (ElemId y : n) coset_of[g.mul(static_cast<ElemId>(x), y)] = c;
  }

  // image sizes of G_i = <g_i, ..., g_r>, whose ids are [0, |G_i|)
  const Presentation& p = g.presentation();
  const std::size_t r = p.rank();
  std::vector<std::size_t> image_size(r + 1, 1);
  std::size_t span = order;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<bool> hit(reps.size(), false);
    std::size_t count = 0;
    for (std::size_t x = 0; x < span; ++x)
      if (!hit[coset_of[x]]) {
        hit[coset_of[x]] = true;
        ++count;
      }
    image_size[i] = count;
    span /= static_cast<std::size_t>(p.orders[i]);
  }

  std::vector<std::size_t> kept;
  std::vector<int> rel_orders;
  for (std::size_t i = 0; i < r; ++i)
    if (image_size[i] != image_size[i + 1]) {
      kept.push_back(i);
      rel_orders.push_back(static_cast<int>(image_size[i] / image_size[i + 1]));
    }

  QuotientMap out;
  const std::size_t q = kept.size();
  std::vector<std::size_t> qstride(q, 1);
  for (std::size_t k = q; k-- > 1;)
    qstride[k - 1] = qstride[k] * static_cast<std::size_t>(rel_orders[k]);

  // normal form exponent vector -> coset, and its inverse
  std::vector<ElemId> qid_of_coset(reps.size(), kNone);
  std::vector<std::vector<int>> nf_of_coset(reps.size());
  std::vector<int> f(q, 0);
  for (std::size_t idx = 0; idx < reps.size(); ++idx) {
    std::size_t rest = idx;
    ElemId x = g.identity();
    for (std::size_t k = 0; k < q; ++k) {
      f[k] = static_cast<int>(rest / qstride[k]);
      rest %= qstride[k];
      x = g.mul(x, g.power(g.generator(kept[k]), f[k]));
    }
    const ElemId c = coset_of[x];
    if (qid_of_coset[c] != kNone) throw CrossCheckFailure("quotient normal forms collide");
    qid_of_coset[c] = static_cast<ElemId>(idx);
    nf_of_coset[c] = f;
  }

  auto word_of = [&](ElemId x) {
    Word w;
    const auto& e = nf_of_coset[coset_of[x]];
    for (std::size_t k = 0; k < q; ++k)
      if (e[k] != 0) w.push_back({k, e[k]});
    return w;
  };

  Presentation qp(p.name + "/N", rel_orders);
  for (std::size_t k = 0; k < q; ++k) {
    const ElemId gk = g.generator(kept[k]);
    qp.powers[k] = word_of(g.power(gk, rel_orders[k]));
    for (std::size_t l = k + 1; l < q; ++l) {
      const ElemId gl = g.generator(kept[l]);
      qp.conjugate(l, k) = word_of(g.conjugate(g.inv(gk), gl));
    }
  }
  validate_structure(qp);

  out.presentation = std::move(qp);
  out.projection.resize(order);
  for (std::size_t x = 0; x < order; ++x) out.projection[x] = qid_of_coset[coset_of[x]];
  out.section.resize(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) out.section[qid_of_coset[c]] = reps[c];
  return out;
}

WordSubgroup normal_subgroup_from_words(const FiniteGroup& g, const std::vector<std::string>& words) {
  std::vector<ElemId> gens;
  for (const auto& w : words) gens.push_back(g.id(g.pc().collect(parse_word(w, g.presentation().rank()))));
  ElementSet plain = g.closure(gens);
  const bool normal = g.is_normal(plain);
  return {normal ? plain : g.normal_closure(gens), normal};
}

}  // namespace pcw
