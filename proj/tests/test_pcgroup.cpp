#include <map>
#include <set>

#include "doctest.h"
#include "pcw/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Images of the pc generators extend to a faithful homomorphism: every
// normal form maps to a distinct permutation and the multiplication table
// matches composition.
bool faithful(const FiniteGroup& g, const std::vector<Perm>& gens) {
  const std::size_t deg = gens[0].size();
  std::vector<Perm> image(g.order());
  for (ElemId x = 0; x < g.order(); ++x) {
    Perm p = identity_perm(deg);
    const GroupElement e = g.element(x);
    for (std::size_t i = 0; i < e.exponents.size(); ++i)
      for (int k = 0; k < e.exponents[i]; ++k) p = compose(p, gens[i]);
    image[x] = p;
  }
  if (std::set<Perm>(image.begin(), image.end()).size() != g.order()) return false;
  for (ElemId x = 0; x < g.order(); ++x)
    for (ElemId y = 0; y < g.order(); ++y)
      if (image[g.mul(x, y)] != compose(image[x], image[y])) return false;
  return true;
}

// Derived subgroup order and class count computed on permutations only.
std::pair<std::size_t, std::size_t> perm_stats(const std::vector<Perm>& gens) {
  std::set<Perm> all = {identity_perm(gens[0].size())};
  std::vector<Perm> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& s : gens) {
        Perm q = compose(p, s);
        if (all.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  auto inverse = [](const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
  };
  std::set<Perm> comms;
  for (const auto& a : all)
    for (const auto& b : all) comms.insert(compose(compose(a, b), compose(inverse(a), inverse(b))));
  std::set<Perm> derived = {identity_perm(gens[0].size())};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : std::vector<Perm>(derived.begin(), derived.end()))
      for (const auto& c : comms)
        if (derived.insert(compose(a, c)).second) grew = true;
  }
  std::set<Perm> seen;
  std::size_t classes = 0;
  for (const auto& x : all) {
    if (seen.count(x)) continue;
    ++classes;
    for (const auto& z : all) seen.insert(compose(compose(z, x), inverse(z)));
  }
  return {derived.size(), classes};
}

GroupElement ge(std::initializer_list<int> e) { return {std::vector<int>(e)}; }

}  // namespace

TEST_CASE("parse the G243_28 catalog text") {
  Presentation p = catalog::get("G243_28").presentation();
  CHECK(p.rank() == 5);
  CHECK(p.orders == std::vector<int>{3, 3, 3, 3, 3});
  CHECK(p.order() == 243);
}

TEST_CASE("single generator of order 5") {
  Presentation p = parse_presentation("name C5\norders 5\n");
  CHECK(p.order() == 5);
  CHECK(p.powers[0].empty());
  CHECK(is_consistent(p).consistent);
}

TEST_CASE("corrupted D4 is rejected with the failing overlap") {
  const std::string text = read_file(fixture("d4_corrupted.pc"));
  try {
    parse_presentation(text);
    FAIL("inconsistent presentation accepted");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("inconsistent") != std::string::npos);
    CHECK(std::string(e.what()).find("g2 g1^2") != std::string::npos);
  }
  Presentation raw("D4", {2, 4});
  raw.conjugate(1, 0) = {{1, 2}};
  ConsistencyResult r = is_consistent(raw);
  CHECK_FALSE(r.consistent);
  CHECK(r.failing_overlaps == std::vector<std::string>{"g2 g1^2"});
}

TEST_CASE("D4 with conjugation exponent 1 is a consistent abelian group") {
  Presentation p = parse_presentation(read_file(fixture("d4_exponent_one.pc")));
  auto g = group_of(p);
  CHECK(derived_subgroup(*g).size() == 1);
  CHECK(abelianization(p) == inv({2, 4}));
}

TEST_CASE("syntax errors carry positions") {
  auto msg = [](const std::string& s) {
    try {
      parse_presentation(s);
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg("name X\norders 2 x\n").find("line 2, column 10") != std::string::npos);
  CHECK(msg("name X\norders 2 3\nfoo 1\n").find("unknown keyword") != std::string::npos);
  CHECK(msg("name X\norders 2 3\nconj 1 2 = g2^1\n").find("i < j") != std::string::npos);
  CHECK(msg("name X\norders 2 3\nconj 2 1 = g2^3\n").find("outside") != std::string::npos);
  CHECK(msg("name X\norders 2 3\npow 1 = g3^1\n").find("out of range") != std::string::npos);
  CHECK(msg("name X\norders 2 3\npow 3 = 1\n").find("out of range") != std::string::npos);
  CHECK(msg("name X\norders 2 2 2\npow 1 = g3^1 g2^1\n").find("not normal") != std::string::npos);
  CHECK(msg("name X\norders 2 3\npow 1 = 1\npow 1 = 1\n").find("duplicate") != std::string::npos);
  CHECK(msg("orders 2\n").find("before name") != std::string::npos);
  CHECK(msg("name X\n").find("missing 'orders'") != std::string::npos);
  CHECK(msg("name X\norders 1\n").find("line 2") != std::string::npos);
}

TEST_CASE("comments and blank lines are ignored") {
  Presentation p = parse_presentation("# header\n\nname S3\n  orders 2 3 \n# c\nconj 2 1 = g2^2\n");
  CHECK(p == catalog::get("S3").presentation());
}

TEST_CASE("collect examples") {
  PcGroup d4(catalog::get("D4").presentation());
  CHECK(d4.collect({{1, 1}, {0, 1}}) == ge({1, 3}));
  CHECK(d4.collect({}) == ge({0, 0}));
  PcGroup g(catalog::get("G243_28").presentation());
  CHECK(g.collect({{1, 3}}) == ge({0, 0, 0, 2, 0}));
  CHECK(g.collect({}).is_identity());
  // negative exponents resolve through the power relations
  CHECK(d4.collect({{1, -1}}) == ge({0, 3}));
  CHECK(g.collect({{1, -1}, {1, 1}}).is_identity());
}

TEST_CASE("multiply, inverse, power") {
  PcGroup d4(catalog::get("D4").presentation());
  const GroupElement r = d4.generator(1);
  CHECK(d4.multiply(d4.identity(), r) == r);
  CHECK(d4.power(r, 4).is_identity());
  CHECK(d4.inverse(r) == ge({0, 3}));
  CHECK(d4.power(r, -1) == ge({0, 3}));
  CHECK(d4.power(d4.generator(0), 2).is_identity());
}

TEST_CASE("commutator and conjugate conventions") {
  PcGroup g(catalog::get("G243_28").presentation());
  const GroupElement g1 = g.generator(0), g2 = g.generator(1);
  CHECK(g.commutator(g1, g1).is_identity());
  CHECK(g.commutator(g.generator(4), g1).is_identity());
  // the source relation [g2,g1] = g3 uses [a,b] = a^-1 b^-1 a b, which is
  // commutator(a^-1, b^-1) in the x y x^-1 y^-1 convention
  CHECK(g.commutator(g.inverse(g2), g.inverse(g1)) == g.generator(2));
  CHECK(g.commutator(g.inverse(g.generator(2)), g.inverse(g1)) == g.generator(3));
  CHECK(g.commutator(g.inverse(g.generator(2)), g.inverse(g2)) == g.generator(4));
  CHECK(g.commutator(g.inverse(g.generator(3)), g.inverse(g1)) == g.generator(4));
  CHECK(g.power(g2, 3) == g.power(g.generator(3), 2));
  CHECK(g.power(g.generator(2), 3) == g.power(g.generator(4), 2));
  CHECK(g.conjugate(g1, g2) == g.multiply(g.multiply(g1, g2), g.inverse(g1)));
}

TEST_CASE("consistency of catalog and cyclic groups") {
  for (const auto& e : catalog::entries()) {
    Presentation p = e.presentation();
    CHECK(is_consistent(p).consistent);
    auto g = group_of(p);
    CHECK(BigInt(static_cast<unsigned long>(g->order())) == p.order());
  }
  for (int m : {2, 7, 12, 64}) CHECK(is_consistent(Presentation("C", {m})).consistent);
}

TEST_CASE("elements") {
  CHECK(catalog_group("D4")->elements().size() == 8);
  CHECK(catalog_group("G243_28")->elements().size() == 243);
  auto c5 = catalog_group("C5")->elements();
  CHECK(c5.size() == 5);
  CHECK(std::is_sorted(c5.begin(), c5.end()));
  CHECK_THROWS_AS(group_of(parse_presentation("name B\norders 2 2 2 2 2 2 2 2 2 2 2 2 2\n")),
                  BoundExceeded);
}

TEST_CASE("conjugacy classes") {
  auto sizes = [](const std::string& n) {
    std::vector<std::size_t> s;
    for (const auto& c : conjugacy_classes(*catalog_group(n))) s.push_back(c.size);
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sizes("C12") == std::vector<std::size_t>(12, 1));
  CHECK(sizes("D4") == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(sizes("Q8").size() == 5);
  auto g = catalog_group("A4");
  for (const auto& c : conjugacy_classes(*g)) {
    // representative is the least id in its class
    for (ElemId z = 0; z < g->order(); ++z) CHECK(g->conjugate(z, c.representative) >= c.representative);
  }
}

TEST_CASE("centralizer generators") {
  auto d4 = catalog_group("D4");
  auto gens = centralizer_generators(*d4, d4->identity());
  CHECK(d4->closure(gens).size() == 8);
  auto cr = d4->closure(centralizer_generators(*d4, d4->generator(1)));
  std::vector<ElemId> rot;
  for (int k = 0; k < 4; ++k) rot.push_back(d4->power(d4->generator(1), k));
  std::sort(rot.begin(), rot.end());
  CHECK(cr.ids() == rot);
  auto c3 = catalog_group("C3xC3xC3");
  CHECK(c3->closure(centralizer_generators(*c3, 5)).size() == 27);
  for (const auto& name : {"G243_28", "A4", "SD16", "Heis5"}) {
    auto g = catalog_group(name);
    for (ElemId x = 0; x < g->order(); x += 7)
      CHECK(g->closure(centralizer_generators(*g, x)).ids() == centralizer(*g, x));
  }
}

TEST_CASE("derived subgroup, abelianization, class") {
  auto g = catalog_group("G243_28");
  CHECK(derived_subgroup(*g).size() == 27);
  CHECK(abelianization(g->presentation()) == inv({3, 3}));
  CHECK(nilpotency_class(*g) == 4);
  auto c = catalog_group("C4xC2");
  CHECK(derived_subgroup(*c).size() == 1);
  CHECK(nilpotency_class(*c) == 1);
  auto d4 = catalog_group("D4");
  CHECK(derived_subgroup(*d4).size() == 2);
  CHECK(abelianization(d4->presentation()) == inv({2, 2}));
  CHECK(nilpotency_class(*d4) == 2);
  CHECK_FALSE(nilpotency_class(*catalog_group("S3")).has_value());
}

TEST_CASE("permutation representation oracle") {
  // D4 on the square's vertices
  Perm rot = {1, 2, 3, 0}, refl = {0, 3, 2, 1};
  auto d4 = catalog_group("D4");
  CHECK(faithful(*d4, {refl, rot}));
  CHECK(perm_stats({refl, rot}) == std::pair<std::size_t, std::size_t>{derived_subgroup(*d4).size(),
                                                                         conjugacy_classes(*d4).size()});
  // S3 on three points
  Perm t = {1, 0, 2}, c = {1, 2, 0};
  auto s3 = catalog_group("S3");
  CHECK(faithful(*s3, {t, c}));
  CHECK(perm_stats({t, c}) == std::pair<std::size_t, std::size_t>{3, 3});
  // A4: g2 = (01)(23), g3 = g1^-1 g2 g1 for a 3-cycle g1 that satisfies the relations
  auto a4 = catalog_group("A4");
  Perm v = {1, 0, 3, 2};
  bool found = false;
  for (Perm p : {Perm{0, 2, 3, 1}, Perm{0, 3, 1, 2}, Perm{2, 1, 3, 0}, Perm{3, 1, 0, 2},
                 Perm{1, 3, 2, 0}, Perm{3, 0, 2, 1}, Perm{1, 2, 0, 3}, Perm{2, 0, 1, 3}}) {
    Perm pinv(4);
    for (int i = 0; i < 4; ++i) pinv[p[i]] = i;
    Perm w = compose(compose(pinv, v), p);
    if (faithful(*a4, {p, v, w})) {
      found = true;
      CHECK(perm_stats({p, v, w}) == std::pair<std::size_t, std::size_t>{4, 4});
      CHECK(derived_subgroup(*a4).size() == 4);
      CHECK(conjugacy_classes(*a4).size() == 4);
    }
  }
  CHECK(found);
}

TEST_CASE("quotients") {
  auto d4 = catalog_group("D4");
  ElemId one[] = {d4->identity()};
  QuotientMap same = quotient_presentation(*d4, d4->closure(one));
  CHECK(same.presentation.order() == 8);

  ElemId z[] = {d4->power(d4->generator(1), 2)};
  QuotientMap qz = quotient_presentation(*d4, d4->closure(z));
  CHECK(qz.presentation.order() == 4);
  CHECK(abelianization(qz.presentation) == inv({2, 2}));

  auto g = catalog_group("G243_28");
  QuotientMap qd = quotient_presentation(*g, derived_subgroup(*g));
  CHECK(abelianization(qd.presentation) == inv({3, 3}));
  auto q = group_of(qd.presentation);
  for (ElemId a = 0; a < g->order(); a += 5)
    for (ElemId b = 0; b < g->order(); b += 11)
      CHECK(qd.projection[g->mul(a, b)] == q->mul(qd.projection[a], qd.projection[b]));
  for (ElemId x = 0; x < q->order(); ++x) CHECK(qd.projection[qd.section[x]] == x);

  QuotientMap all = quotient_presentation(*g, g->all());
  CHECK(all.presentation.rank() == 0);
  CHECK(all.presentation.order() == 1);

  ElemId refl[] = {d4->generator(0)};
  CHECK_THROWS_AS(quotient_presentation(*d4, d4->closure(refl)), InvalidInput);
}

TEST_CASE("render round trip") {
  for (const auto& e : catalog::entries()) {
    Presentation p = e.presentation();
    CHECK(parse_presentation(render_presentation(p)) == p);
  }
  CHECK(render_word({}) == "1");
  CHECK(parse_word("g2^-1 g1", 2) == Word{{1, -1}, {0, 1}});
}

TEST_CASE("sampled group laws and collection idempotence") {
  std::mt19937_64 rng(3);
  for (const auto& name : {"G243_28", "SD16", "A4", "Heis5"}) {
    auto g = catalog_group(name);
    const PcGroup& pc = g->pc();
    std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g->order() - 1));
    std::uniform_int_distribution<long> ex(-9, 9);
    std::uniform_int_distribution<std::size_t> gen(0, pc.rank() - 1);
    for (int k = 0; k < 200; ++k) {
      GroupElement a = g->element(pick(rng)), b = g->element(pick(rng)), c = g->element(pick(rng));
      CHECK(pc.multiply(pc.multiply(a, b), c) == pc.multiply(a, pc.multiply(b, c)));
      CHECK(pc.multiply(pc.inverse(a), a).is_identity());
      Word w;
      for (int l = 0; l < 6; ++l) w.push_back({gen(rng), ex(rng)});
      GroupElement once = pc.collect(w);
      CHECK(pc.collect(once.to_word()) == once);
    }
    for (std::size_t i = 0; i < pc.rank(); ++i)
      CHECK(pc.power(pc.generator(i), 3L * pc.presentation().orders[i]) ==
            pc.power(pc.collect(pc.presentation().powers[i]), 3));
  }
}
