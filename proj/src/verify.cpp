#include "pcw/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pcw/errors.hpp"

namespace pcw {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

WedgePropertyResult check_wedge_identities(const ExtSquareData& e, std::size_t samples,
                                           std::uint64_t seed) {
  const FiniteGroup& g = *e.group;
  const TailedCover& cover = *e.cover;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.order() - 1));
  std::uniform_int_distribution<std::int64_t> offset(-50, 50);
  auto pick_from = [&](const std::vector<ElemId>& s) {
    return s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
  };
  auto random_offset = [&] {
    std::vector<std::int64_t> v(cover.tail_count());
    for (auto& t : v) t = offset(rng);
    return v;
  };
  auto add = [](const TailVector& a, const TailVector& b) {
    TailVector s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
  };
  const TailVector zero(cover.tail_count());

  WedgePropertyResult r;
  r.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const ElemId x = pick(rng);
    const ElemId y = pick(rng);
    const CoverElement w = wedge(e, x, y);

    const auto s = random_offset();
    const auto t = random_offset();
    const CoverElement shifted =
        cover.commutator(cover.lift(g.element(x), s), cover.lift(g.element(y), t));
    if (!(shifted == w)) ++r.lift_independence;
    if (g.id(w.gpart) != g.commutator(x, y)) ++r.kappa;

    const std::vector<ElemId> cx = centralizer(g, x);
    const ElemId c = pick_from(cx);
    const TailVector wc = wedge(e, x, c).tail_vector();
    if (!e.saturated.contains(wc)) ++r.landing;
    if (!congruent(e.consistency, add(wc, wedge(e, c, x).tail_vector()), zero)) ++r.antisymmetry;

    const ElemId z = pick(rng);
    const TailVector wz = wedge(e, g.conjugate(z, x), g.conjugate(z, c)).tail_vector();
    if (!congruent(e.consistency, wz, wc)) ++r.conjugation;

    const ElemId c2 = pick_from(cx);
    const TailVector lhs = wedge(e, x, g.mul(c, c2)).tail_vector();
    if (!congruent(e.consistency, lhs, add(wc, wedge(e, x, c2).tail_vector()))) ++r.homomorphism;
  }
  return r;
}

namespace {

std::string num(std::size_t n) { return std::to_string(n); }

}  // namespace

VerifyReport verify_group(const Presentation& p, const VerifyOptions& opt,
                          const catalog::Entry* expected) {
  VerifyReport r;
  r.group = p.name;
  auto check = [&](std::string name, bool ok, std::string detail = "") {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  ConsistencyResult cr = is_consistent(p);
  check("consistency", cr.consistent);
  if (!cr.consistent) return r;

  auto gp = std::make_shared<const FiniteGroup>(PcGroup(p), opt.element_bound);
  const FiniteGroup& g = *gp;
  check("order_is_product_of_relative_orders", BigInt(static_cast<unsigned long>(g.order())) == p.order());

  // group laws on samples
  {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.order() - 1));
    const PcGroup& pc = g.pc();
    std::size_t bad = 0;
    for (std::size_t k = 0; k < opt.samples; ++k) {
      const ElemId a = pick(rng), b = pick(rng), c = pick(rng);
      const GroupElement ea = g.element(a), eb = g.element(b), ec = g.element(c);
      if (!(pc.multiply(pc.multiply(ea, eb), ec) == pc.multiply(ea, pc.multiply(eb, ec)))) ++bad;
      if (!pc.multiply(ea, pc.inverse(ea)).is_identity()) ++bad;
      if (!(pc.collect(ea.to_word()) == ea)) ++bad;
    }
    for (std::size_t i = 0; i < p.rank(); ++i) {
      const GroupElement gi = pc.generator(i);
      const GroupElement pw = pc.power(gi, p.orders[i]);
      if (!(pw == pc.collect(p.powers[i]))) ++bad;
    }
    check("group_laws", bad == 0, num(bad) + " failures");
  }

  {
    auto classes = conjugacy_classes(g);
    std::size_t total = 0;
    bool divides = true;
    for (const auto& c : classes) {
      total += c.size;
      if (g.order() % c.size != 0) divides = false;
    }
    check("class_sizes", total == g.order() && divides, num(classes.size()) + " classes");

    bool ok = true;
    for (const auto& c : classes) {
      const auto gens = centralizer_generators(g, c.representative);
      const auto full = centralizer(g, c.representative);
      if (g.closure(gens).ids() != full) ok = false;
    }
    check("centralizer_generators_span", ok);
  }

  {
    const ElementSet d = derived_subgroup(g);
    QuotientMap qm = quotient_presentation(g, d);
    FiniteGroup q(PcGroup(qm.presentation), g.order());
    bool hom = true;
    std::mt19937_64 rng(opt.seed + 1);
    std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.order() - 1));
    for (std::size_t k = 0; k < std::min<std::size_t>(opt.samples, 200); ++k) {
      const ElemId a = pick(rng), b = pick(rng);
      if (qm.projection[g.mul(a, b)] != q.mul(qm.projection[a], qm.projection[b])) hom = false;
    }
    check("quotient_by_derived", q.order() * d.size() == g.order() && hom &&
                                     abelianization(qm.presentation) == abelianization(p));
  }

  ExtSquareData e = build_ext_square(gp);

  {
    WedgePropertyResult w = check_wedge_identities(e, opt.samples, opt.seed + 2);
    std::ostringstream os;
    os << w.samples << " samples; failures lift " << w.lift_independence << ", kappa " << w.kappa
       << ", landing " << w.landing << ", antisym " << w.antisymmetry << ", conj "
       << w.conjugation << ", hom " << w.homomorphism;
    check("wedge_identities", w.failures() == 0, os.str());
  }

  try {
    ExteriorSquareEnumeration en(e, opt.cover_bound);
    check("hopf_order_identity", true,
          "|G^G| = " + num(en.order()) + " = |gamma_2| * |M|");
  } catch (const BoundExceeded& ex) {
    check("hopf_order_identity", true, std::string("skipped: ") + ex.what());
  }

  BogomolovReport br;
  IntegerLattice m0 = m0_lattice_classes(e);
  const std::size_t n = g.order();
  if (n <= opt.pair_bound / n) {
    IntegerLattice oracle = m0_lattice_pairs(e, opt.pair_bound);
    check("m0_oracle_equality", oracle == m0);
    br = bogomolov_multiplier(e, M0Method::both, opt.pair_bound);
  } else {
    br = bogomolov_multiplier(e, M0Method::classes, opt.pair_bound);
  }
  check("m0_between_c_and_satc", m0.contains(e.consistency) && e.saturated.contains(m0));
  check("order_identities",
        br.curly_wedge_order == br.derived_order * br.bogomolov.order() &&
            br.exterior_square_order == br.derived_order * br.multiplier.order() &&
            br.multiplier.order() % br.bogomolov.order() == 0);

  auto cls = nilpotency_class(g);
  if (cls && *cls <= 2) {
    try {
      Class2Report c2 = class2_check(e, m0, opt.cover_bound);
      check("class2_coherence", c2.passed,
            "|ker Phi| = " + c2.ker_phi.get_str() + ", |ker Psi| = " + c2.ker_psi.get_str());
    } catch (const BoundExceeded& ex) {
      check("class2_coherence", true, std::string("skipped: ") + ex.what());
    }
  }
  if (blackburn_evens_applies(g)) {
    const BigInt be = blackburn_evens_multiplier_order(g);
    check("blackburn_evens", be == e.multiplier.order(),
          "predicted " + be.get_str() + ", computed " + e.multiplier.order().get_str());
  }

  if (expected) {
    auto cmp = [&](const std::string& what, auto got, const auto& want) {
      std::ostringstream os;
      os << "got " << got << ", expected " << want.value << " (" << catalog::to_string(want.source)
         << ")";
      check("expected_" + what, got == want.value, os.str());
    };
    cmp("order", p.order(), expected->order);
    cmp("abelianization", br.abelianization, expected->abelianization);
    cmp("derived_order", br.derived_order, expected->derived_order);
    cmp("multiplier", br.multiplier, expected->multiplier);
    cmp("bogomolov", br.bogomolov, expected->bogomolov);

    if (!expected->frobenius_kernel.empty()) {
      WordSubgroup ws = normal_subgroup_from_words(g, expected->frobenius_kernel);
      FrobeniusReport fr = frobenius_checks(e, ws.normal);
      check("frobenius", fr.frobenius && fr.passed,
            fr.frobenius ? num(fr.commuting_pairs) + " commuting pairs" : fr.reason);
    }
  }
  return r;
}

}  // namespace pcw
