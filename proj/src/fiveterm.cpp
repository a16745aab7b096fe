#include <algorithm>

#include "pcw/bogomolov.hpp"
#include "pcw/errors.hpp"

namespace pcw {

bool FiveTermReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

ElementSet commutators_in(const FiniteGroup& g, const ElementSet& n) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ElemId> gens;
  for (ElemId x = 0; x < g.order(); ++x)
    for (ElemId y = x + 1; y < g.order(); ++y) {
      const ElemId c = g.commutator(x, y);
      if (seen[c]) continue;
      seen[c] = true;
      if (n.contains(c)) gens.push_back(c);
    }
  return g.closure(gens);
}

namespace {

ElementSet intersect(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  std::vector<ElemId> ids;
  for (ElemId x : a)
    if (b.contains(x)) ids.push_back(x);
  return ElementSet(g.order(), std::move(ids));
}

std::string order_str(std::size_t n) { return std::to_string(n); }

}  // namespace

FiveTermReport five_term_check(std::shared_ptr<const FiniteGroup> gp, const ElementSet& n,
                               std::size_t cover_bound) {
  const FiniteGroup& g = *gp;
  QuotientMap qm = quotient_presentation(g, n);
  auto qp = std::make_shared<const FiniteGroup>(PcGroup(qm.presentation), g.order());
  const FiniteGroup& q = *qp;

  ExtSquareData eg = build_ext_square(gp);
  ExtSquareData eq = build_ext_square(qp);
  const IntegerLattice m0g = m0_lattice_classes(eg);
  const IntegerLattice m0q = m0_lattice_classes(eq);

  FiveTermReport r;
  r.group = g.presentation().name;
  r.order_n = static_cast<unsigned long>(n.size());
  r.order_quotient = static_cast<unsigned long>(q.order());
  r.bogomolov_g = quotient_invariants(eg.saturated, m0g);
  r.bogomolov_q = quotient_invariants(eq.saturated, m0q);
  r.abelianization_g = abelianization(g.presentation());
  r.abelianization_q = abelianization(q.presentation());

  const ElementSet kn = commutators_in(g, n);
  const ElementSet n_gamma = intersect(g, n, eg.derived);
  r.kn_order = static_cast<unsigned long>(kn.size());
  r.third_term_order = static_cast<unsigned long>(n.size() / kn.size());
  r.kernel_pi = static_cast<unsigned long>(n_gamma.size() / kn.size());

  auto check = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  check("kn_inside_n_cap_gamma2", kn.subset_of(n_gamma),
        "|<K cap N>| = " + order_str(kn.size()) + ", |N cap gamma_2| = " +
            order_str(n_gamma.size()));

  // exactness at G^ab: N gamma_2(G) is the preimage of gamma_2(G/N)
  std::vector<ElemId> prod;
  for (ElemId a : n)
    for (ElemId b : eg.derived) prod.push_back(g.mul(a, b));
  std::sort(prod.begin(), prod.end());
  prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
  std::vector<ElemId> pre;
  for (ElemId x = 0; x < g.order(); ++x)
    if (eq.derived.contains(qm.projection[x])) pre.push_back(x);
  check("exact_at_gab", prod == pre,
        "|N gamma_2| = " + order_str(prod.size()) + ", preimage size " + order_str(pre.size()));

  std::vector<bool> hit(q.order(), false);
  for (ElemId x = 0; x < g.order(); ++x) hit[qm.projection[x]] = true;
  check("surjective_onto_quotient_ab", std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
        "projection image covers G/N");

  BigInt b0q = r.bogomolov_q.order();
  check("index_divides_b0_quotient", b0q % r.kernel_pi == 0,
        "|N cap gamma_2 : <K cap N>| = " + r.kernel_pi.get_str() + ", |B0(G/N)| = " +
            b0q.get_str());

  auto lift_product = [&](const WedgeWord& w) {
    ElemId acc = g.identity();
    for (const auto& sw : w) {
      ElemId c = g.commutator(qm.section[sw.x], qm.section[sw.y]);
      acc = g.mul(acc, sw.sign < 0 ? g.inv(c) : c);
    }
    return acc;
  };

  try {
    // sigma on generators of M(G/N)
    ExteriorSquareEnumeration enq(eq, cover_bound);
    std::vector<ElemId> sigma_gens(kn.begin(), kn.end());
    bool lands = true;
    for (std::size_t i = 0; i < eq.saturated.rank(); ++i) {
      auto w = enq.word_for(q.identity(), eq.saturated.basis().row(i));
      if (!w) throw CrossCheckFailure("multiplier generator of G/N has no wedge word");
      const ElemId s = lift_product(*w);
      if (!n.contains(s)) lands = false;
      sigma_gens.push_back(s);
    }
    check("sigma_lands_in_n", lands, "lifted commutator products lie in N");
    const ElementSet im_sigma = g.closure(sigma_gens);
    r.image_sigma = static_cast<unsigned long>(im_sigma.size() / kn.size());
    check("exact_at_third_term", im_sigma == n_gamma,
          "|im sigma| = " + r.image_sigma.get_str() + ", |ker pi| = " + r.kernel_pi.get_str());

    // rho# on generators of M(G)
    ExteriorSquareEnumeration eng(eg, cover_bound);
    std::vector<std::vector<BigInt>> pushed_rows;
    bool rho_lands = true;
    bool composite_trivial = true;
    for (std::size_t i = 0; i < eg.saturated.rank(); ++i) {
      auto w = eng.word_for(g.identity(), eg.saturated.basis().row(i));
      if (!w) throw CrossCheckFailure("multiplier generator of G has no wedge word");
      WedgeWord pushed;
      for (const auto& sw : *w)
        pushed.push_back({qm.projection[sw.x], qm.projection[sw.y], sw.sign});
      CoverElement v = evaluate_wedge_word(eq, pushed);
      TailVector t = v.tail_vector();
      if (!v.gpart.is_identity() || !eq.saturated.contains(t)) rho_lands = false;
      pushed_rows.push_back(std::move(t));
      if (!kn.contains(lift_product(pushed))) composite_trivial = false;
    }
    check("rho_lands_in_multiplier", rho_lands, "pushed wedge words have trivial image in G/N");
    check("sigma_after_rho_trivial", composite_trivial, "sigma(rho#(m)) lies in <K cap N>");
    const IntegerLattice img =
        lattice_sum(m0q, IntegerLattice::span(pushed_rows, eq.cover->tail_count()));
    r.image_rho = quotient_invariants(img, m0q).order();
    check("exact_at_b0_quotient", r.image_rho * r.image_sigma == b0q,
          "|im rho#| = " + r.image_rho.get_str() + ", |B0(G/N)| / |im sigma| = " +
              BigInt(b0q / r.image_sigma).get_str());
  } catch (const BoundExceeded&) {
    r.partial = true;
  }
  return r;
}

}  // namespace pcw
