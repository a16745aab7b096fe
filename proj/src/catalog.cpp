#include "pcw/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "pcw/errors.hpp"

namespace pcw::catalog {

std::string to_string(Source s) {
  switch (s) {
    case Source::literature: return "literature";
    case Source::oracle: return "oracle";
    case Source::elementary: return "elementary";
  }
  return "?";
}

Presentation Entry::presentation() const { return parse_presentation(source); }

namespace {

InvariantList inv(std::initializer_list<long> d) {
  std::vector<BigInt> v;
  for (long x : d) v.emplace_back(x);
  return InvariantList(std::move(v));
}

constexpr Source L = Source::literature;
constexpr Source O = Source::oracle;
constexpr Source E = Source::elementary;

std::vector<Entry> build() {
  std::vector<Entry> v;
  auto add = [&](Entry e) { v.push_back(std::move(e)); };

  add({"A4", "alternating group of degree 4, (Z/2)^2 by Z/3",
       "name A4\norders 3 2 2\nconj 2 1 = g3^1\nconj 3 1 = g2^1 g3^1\n",
       {12, E}, {inv({3}), O}, {4, O}, {inv({2}), O}, {inv({}), O}, {"g2^1", "g3^1"}});
  add({"C12", "cyclic of order 12", "name C12\norders 2 2 3\npow 1 = g2^1\n",
       {12, E}, {inv({12}), E}, {1, E}, {inv({}), E}, {inv({}), E}, {}});
  add({"C2", "cyclic of order 2", "name C2\norders 2\n",
       {2, E}, {inv({2}), E}, {1, E}, {inv({}), E}, {inv({}), E}, {}});
  add({"C2xC2", "Klein four group", "name C2xC2\norders 2 2\n",
       {4, E}, {inv({2, 2}), E}, {1, E}, {inv({2}), O}, {inv({}), E}, {}});
  add({"C3", "cyclic of order 3", "name C3\norders 3\n",
       {3, E}, {inv({3}), E}, {1, E}, {inv({}), E}, {inv({}), E}, {}});
  add({"C3xC3xC3", "elementary abelian of order 27", "name C3xC3xC3\norders 3 3 3\n",
       {27, E}, {inv({3, 3, 3}), E}, {1, E}, {inv({3, 3, 3}), O}, {inv({}), E}, {}});
  add({"C4xC2", "Z/4 x Z/2", "name C4xC2\norders 2 2 2\npow 1 = g2^1\n",
       {8, E}, {inv({2, 4}), E}, {1, E}, {inv({2}), O}, {inv({}), E}, {}});
  add({"C5", "cyclic of order 5", "name C5\norders 5\n",
       {5, E}, {inv({5}), E}, {1, E}, {inv({}), E}, {inv({}), E}, {}});
  add({"D4", "dihedral of order 8; g1 a reflection, g2 a rotation",
       "name D4\norders 2 4\nconj 2 1 = g2^3\n",
       {8, E}, {inv({2, 2}), O}, {2, O}, {inv({2}), O}, {inv({}), O}, {}});
  // Relations [g2,g1]=g3, [g3,g1]=g4, [g3,g2]=g5, [g4,g1]=g5, g2^3=g4^2,
  // g3^3=g5^2, read with [a,b] = a^-1 b^-1 a b. Under that reading
  // g1^-1 g2 g1 = g2 [g2,g1] = g2 g3, and so on.
  add({"G243_28", "order 243, class 4, with nontrivial Bogomolov multiplier",
       "name G243_28\n"
       "# [a,b] = a^-1 b^-1 a b in the source relations, so conj j i = g_j [g_j,g_i]\n"
       "orders 3 3 3 3 3\n"
       "pow 2 = g4^2\n"
       "pow 3 = g5^2\n"
       "conj 2 1 = g2^1 g3^1\n"
       "conj 3 1 = g3^1 g4^1\n"
       "conj 3 2 = g3^1 g5^1\n"
       "conj 4 1 = g4^1 g5^1\n",
       {243, L}, {inv({3, 3}), L}, {27, L}, {inv({9}), L}, {inv({3}), L}, {}});
  add({"Heis3", "Heisenberg group of order 27, exponent 3",
       "name Heis3\norders 3 3 3\nconj 2 1 = g2^1 g3^1\n",
       {27, E}, {inv({3, 3}), O}, {3, O}, {inv({3, 3}), O}, {inv({}), O}, {}});
  add({"Heis5", "Heisenberg group of order 125, exponent 5",
       "name Heis5\norders 5 5 5\nconj 2 1 = g2^1 g3^1\n",
       {125, E}, {inv({5, 5}), O}, {5, O}, {inv({5, 5}), O}, {inv({}), O}, {}});
  add({"Q8", "quaternion group of order 8",
       "name Q8\norders 2 2 2\npow 1 = g3^1\npow 2 = g3^1\nconj 2 1 = g2^1 g3^1\n",
       {8, E}, {inv({2, 2}), O}, {2, O}, {inv({}), O}, {inv({}), O}, {}});
  add({"S3", "symmetric group of degree 3, Z/3 by Z/2", "name S3\norders 2 3\nconj 2 1 = g2^2\n",
       {6, E}, {inv({2}), O}, {3, O}, {inv({}), O}, {inv({}), O}, {"g2^1"}});
  add({"SD16", "semidihedral of order 16", "name SD16\norders 2 8\nconj 2 1 = g2^3\n",
       {16, E}, {inv({2, 2}), O}, {4, O}, {inv({}), O}, {inv({}), O}, {}});
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.name < b.name; });
  return v;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const bool same = std::tolower(static_cast<unsigned char>(a[i - 1])) ==
                        std::tolower(static_cast<unsigned char>(b[j - 1]));
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (same ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = build();
  return all;
}

std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.name);
  return names;
}

const Entry& get(std::string_view name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  std::vector<std::string> near;
  for (const auto& e : entries())
    if (edit_distance(name, e.name) <= 2) near.push_back(e.name);
  std::string msg = "unknown catalog entry '" + std::string(name) + "'";
  if (!near.empty()) {
    msg += "; did you mean";
    for (std::size_t i = 0; i < near.size(); ++i) msg += (i ? ", " : " ") + near[i];
    msg += "?";
  }
  throw InvalidInput(msg);
}

}  // namespace pcw::catalog
