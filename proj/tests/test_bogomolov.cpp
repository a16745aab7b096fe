#include "doctest.h"
#include "pcw/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::shared_ptr<const FiniteGroup> fixture_group(const std::string& file) {
  return group_of(parse_presentation(read_file(fixture(file))));
}

ElementSet subgroup(const FiniteGroup& g, const std::vector<std::string>& words) {
  return normal_subgroup_from_words(g, words).normal;
}

ElementSet center(const FiniteGroup& g) {
  std::vector<ElemId> z;
  for (ElemId x = 0; x < g.order(); ++x)
    if (centralizer(g, x).size() == g.order()) z.push_back(x);
  return ElementSet(g.order(), z);
}

void require_exact(const FiveTermReport& r) {
  CHECK_FALSE(r.partial);
  for (const auto& c : r.checks) {
    INFO(r.group << ": " << c.name << " " << c.detail);
    CHECK(c.passed);
  }
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("M0 lattices agree between the two constructions") {
  for (const auto& entry : catalog::entries()) {
    ExtSquareData e = build_ext_square(group_of(entry.presentation()));
    INFO(entry.name);
    CHECK(m0_lattice_classes(e) == m0_lattice_pairs(e));
  }
}

TEST_CASE("M0 of abelian and cyclic groups is the whole multiplier") {
  for (const auto& name : {"C2", "C12", "C2xC2", "C4xC2", "C3xC3xC3"}) {
    ExtSquareData e = ext(name);
    CHECK(m0_lattice_classes(e) == e.saturated);
  }
  ExtSquareData c = ext("C5");
  CHECK(m0_lattice_classes(c) == c.consistency);
}

TEST_CASE("M0 has index 3 in the worked example") {
  ExtSquareData e = ext("G243_28");
  IntegerLattice m0 = m0_lattice_classes(e);
  CHECK(index(e.saturated, m0) == BigInt(3));
  CHECK(e.saturated.contains(m0));
  CHECK(m0.contains(e.consistency));
}

TEST_CASE("pairs oracle respects its bound") {
  ExtSquareData e = ext("G243_28");
  CHECK_THROWS_AS(m0_lattice_pairs(e, 1000), BoundExceeded);
  CHECK_THROWS_AS(bogomolov_multiplier(e, M0Method::both, 1000), BoundExceeded);
}

TEST_CASE("bogomolov report for the worked example") {
  ExtSquareData e = ext("G243_28");
  for (M0Method m : {M0Method::classes, M0Method::pairs, M0Method::both}) {
    BogomolovReport r = bogomolov_multiplier(e, m);
    CHECK(r.order == 243);
    CHECK(r.abelianization == inv({3, 3}));
    CHECK(r.derived_order == 27);
    CHECK(r.multiplier == inv({9}));
    CHECK(r.m0_order == 3);
    CHECK(r.m0_index == 3);
    CHECK(r.bogomolov == inv({3}));
    CHECK(r.exterior_square_order == 243);
    CHECK(r.curly_wedge_order == 81);
    CHECK(r.method == m);
  }
}

TEST_CASE("small groups have trivial bogomolov multiplier") {
  for (const auto& entry : catalog::entries()) {
    if (entry.order.value >= 64) continue;
    BogomolovReport r = bogomolov_multiplier(build_ext_square(group_of(entry.presentation())),
                                             M0Method::both);
    INFO(entry.name);
    CHECK(r.bogomolov.trivial());
    CHECK(r.curly_wedge_order == r.derived_order);
  }
}

TEST_CASE("method names") {
  CHECK(parse_method("pairs") == M0Method::pairs);
  CHECK(to_string(M0Method::both) == "both");
  CHECK_THROWS_AS(parse_method("all"), InvalidInput);
}

TEST_CASE("direct product with an abelian factor") {
  // M(G x C3) = M(G) + G^ab (x) C3 and B0 is unchanged
  ExtSquareData e = build_ext_square(fixture_group("g243_28_x_c3.pc"));
  BogomolovReport r = bogomolov_multiplier(e, M0Method::classes);
  CHECK(r.multiplier == inv({3, 3, 9}));
  CHECK(r.bogomolov == inv({3}));
}

TEST_CASE("five-term sequence on the standard cases") {
  auto d4 = catalog_group("D4");
  FiveTermReport rd = five_term_check(d4, center(*d4));
  require_exact(rd);
  CHECK(rd.bogomolov_q.trivial());
  CHECK(rd.third_term_order == 1);

  auto q8 = catalog_group("Q8");
  require_exact(five_term_check(q8, center(*q8)));

  auto g = catalog_group("G243_28");
  FiveTermReport rg = five_term_check(g, derived_subgroup(*g));
  require_exact(rg);
  CHECK(rg.bogomolov_g == inv({3}));
  CHECK(rg.bogomolov_q.trivial());
  CHECK(rg.third_term_order == 1);
  CHECK(rg.abelianization_g == rg.abelianization_q);

  auto s3 = catalog_group("S3");
  require_exact(five_term_check(s3, subgroup(*s3, {"g2^1"})));

  auto a4 = catalog_group("A4");
  ElementSet v4 = subgroup(*a4, {"g2^1"});
  CHECK(v4.size() == 4);
  require_exact(five_term_check(a4, v4));
}

TEST_CASE("five-term sequence degenerate cases") {
  for (const auto& name : {"D4", "G243_28", "SD16"}) {
    auto g = catalog_group(name);
    ElemId one[] = {g->identity()};
    FiveTermReport r1 = five_term_check(g, g->closure(one));
    require_exact(r1);
    CHECK(r1.abelianization_g == r1.abelianization_q);
    CHECK(r1.third_term_order == 1);
    FiveTermReport rg = five_term_check(g, g->all());
    require_exact(rg);
    CHECK(rg.order_quotient == 1);
  }
}

TEST_CASE("five-term sequence with nontrivial connecting maps") {
  // central extension of the worked example that kills M0: sigma is onto
  auto e = fixture_group("e729.pc");
  FiveTermReport r = five_term_check(e, subgroup(*e, {"g6^1"}));
  require_exact(r);
  CHECK(r.bogomolov_g.trivial());
  CHECK(r.bogomolov_q == inv({3}));
  CHECK(r.image_sigma == 3);
  CHECK(r.kernel_pi == 3);
  CHECK(r.image_rho == 1);

  // direct factor: rho is onto
  auto p = fixture_group("g243_28_x_c3.pc");
  FiveTermReport rp = five_term_check(p, subgroup(*p, {"g6^1"}));
  require_exact(rp);
  CHECK(rp.image_rho == 3);
  CHECK(rp.image_sigma == 1);
}

TEST_CASE("five-term falls back to partial checks when the cover bound is hit") {
  auto e = fixture_group("e729.pc");
  FiveTermReport r = five_term_check(e, subgroup(*e, {"g6^1"}), 50);
  CHECK(r.partial);
  CHECK(r.passed());
}

TEST_CASE("commutators inside N") {
  auto d4 = catalog_group("D4");
  CHECK(commutators_in(*d4, d4->all()).size() == 2);
  auto g = catalog_group("G243_28");
  CHECK(commutators_in(*g, derived_subgroup(*g)) == derived_subgroup(*g));
}

TEST_CASE("class two coherence") {
  for (const auto& name : {"Heis3", "Heis5"}) {
    ExtSquareData e = ext(name);
    Class2Report r = class2_check(e, m0_lattice_classes(e));
    CHECK(r.ker_phi == 1);
    CHECK(r.bogomolov.trivial());
    CHECK(r.passed);
  }
  ExtSquareData k = ext("C2xC2");
  Class2Report rk = class2_check(k, m0_lattice_classes(k));
  CHECK(rk.wedge_v_order == 2);
  CHECK(rk.ker_phi == 2);
  CHECK(rk.ker_psi == 2);
  CHECK(rk.passed);
  ExtSquareData c = ext("C4xC2");
  Class2Report rc = class2_check(c, m0_lattice_classes(c));
  CHECK(rc.ker_phi == rc.wedge_v_order);
  CHECK(rc.passed);
  ExtSquareData g = ext("G243_28");
  CHECK_THROWS_AS(class2_check(g, m0_lattice_classes(g)), InvalidInput);
}

TEST_CASE("Blackburn-Evens multiplier orders") {
  CHECK(blackburn_evens_multiplier_order(*catalog_group("Heis3")) == 9);
  CHECK(blackburn_evens_multiplier_order(*catalog_group("Heis5")) == 25);
  CHECK(blackburn_evens_multiplier_order(*catalog_group("C2xC2")) == 2);
  CHECK(blackburn_evens_multiplier_order(*catalog_group("C3xC3xC3")) == 27);
  CHECK(blackburn_evens_multiplier_order(*catalog_group("D4")) == 2);
  CHECK(blackburn_evens_multiplier_order(*catalog_group("Q8")) == 1);
  for (const auto& name : {"Heis3", "Heis5", "C2xC2", "C3xC3xC3", "D4", "Q8"})
    CHECK(blackburn_evens_multiplier_order(*catalog_group(name)) == multiplier(ext(name)).order());
  CHECK_FALSE(blackburn_evens_applies(*catalog_group("G243_28")));
  CHECK_FALSE(blackburn_evens_applies(*catalog_group("S3")));
  CHECK_FALSE(blackburn_evens_applies(*catalog_group("C4xC2")));
  CHECK_THROWS_AS(blackburn_evens_multiplier_order(*catalog_group("S3")), InvalidInput);
}

TEST_CASE("Frobenius groups") {
  ExtSquareData s3 = ext("S3");
  FrobeniusReport rs = frobenius_checks(s3, subgroup(*s3.group, {"g2^1"}));
  CHECK(rs.frobenius);
  CHECK(rs.complement.has_value());
  CHECK(rs.kernel_abelian);
  CHECK(rs.lemma_holds);
  REQUIRE(rs.bogomolov.has_value());
  CHECK(rs.bogomolov->trivial());
  CHECK(rs.passed);

  ExtSquareData a4 = ext("A4");
  FrobeniusReport ra = frobenius_checks(a4, subgroup(*a4.group, {"g2^1", "g3^1"}));
  CHECK(ra.frobenius);
  REQUIRE(ra.complement.has_value());
  CHECK(ra.complement->size() == 3);
  CHECK(ra.bogomolov == std::optional<InvariantList>(InvariantList()));
  CHECK(ra.passed);

  ExtSquareData d4 = ext("D4");
  FrobeniusReport rd = frobenius_checks(d4, subgroup(*d4.group, {"g2^1"}));
  CHECK_FALSE(rd.frobenius);
  CHECK_FALSE(rd.reason.empty());
}
