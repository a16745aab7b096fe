#include "doctest.h"
#include "pcw/errors.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("list is sorted and complete") {
  auto names = catalog::list();
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(names.size() == catalog::entries().size());
  for (const auto& n : {"A4", "C2xC2", "C3xC3xC3", "D4", "G243_28", "Heis3", "Heis5", "Q8", "S3"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

TEST_CASE("lookup and near matches") {
  CHECK(catalog::get("Q8").name == "Q8");
  try {
    catalog::get("G243_29");
    FAIL("unknown name accepted");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("G243_28") != std::string::npos);
  }
  CHECK_THROWS_AS(catalog::get("nothing-like-it"), InvalidInput);
}

TEST_CASE("every entry parses and round-trips") {
  for (const auto& e : catalog::entries()) {
    INFO(e.name);
    Presentation p = parse_presentation(e.source);
    CHECK(p.name == e.name);
    CHECK(p == e.presentation());
    CHECK(parse_presentation(render_presentation(p)) == p);
    CHECK(p.order() == e.order.value);
  }
}

TEST_CASE("pipeline reproduces every frozen value") {
  for (const auto& e : catalog::entries()) {
    INFO(e.name);
    auto g = group_of(e.presentation());
    CHECK(abelianization(g->presentation()) == e.abelianization.value);
    CHECK(BigInt(static_cast<unsigned long>(derived_subgroup(*g).size())) == e.derived_order.value);
    ExtSquareData x = build_ext_square(g);
    CHECK(x.multiplier == e.multiplier.value);
    CHECK(bogomolov_multiplier(x, M0Method::classes).bogomolov == e.bogomolov.value);
  }
}

TEST_CASE("frozen abelian multipliers match the closed formula") {
  CHECK(catalog::get("C2xC2").multiplier.value == abelian_multiplier({2, 2}));
  CHECK(catalog::get("C4xC2").multiplier.value == abelian_multiplier({2, 4}));
  CHECK(catalog::get("C3xC3xC3").multiplier.value == abelian_multiplier({3, 3, 3}));
  CHECK(catalog::get("C12").multiplier.value.trivial());
}

TEST_CASE("Frobenius kernels are recorded where they exist") {
  CHECK(catalog::get("S3").frobenius_kernel == std::vector<std::string>{"g2^1"});
  CHECK(catalog::get("A4").frobenius_kernel.size() == 2);
  CHECK(catalog::get("D4").frobenius_kernel.empty());
}
