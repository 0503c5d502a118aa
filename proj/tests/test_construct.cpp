#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "mcs/construct.hpp"
#include "mcs/fixtures.hpp"
#include "mcs/group_spec.hpp"
#include "mcs/verify.hpp"

using mcs::BlockLayout;
using mcs::CosetSide;
using mcs::Element;
using mcs::FiniteGroup;
using mcs::MagicInstance;
using mcs::RepList;
using mcs::SubgroupHandle;
using mcs::SudokuTable;

namespace {

void expect_fully_magic(const SudokuTable& t) {
  auto layout = BlockLayout::of(t);
  auto report = mcs::verify_table(t, layout);
  CHECK(report.is_cayley);
  CHECK(report.is_sudoku);
  CHECK(report.is_magic);
  CHECK(report.is_pandiagonal_magic);
  CHECK(report.failure_count == 0);
  CHECK(mcs::left_to_right_diagonals_trivial(t, layout));
}

std::vector<std::vector<Element>> left_cosets_of(const FiniteGroup& g,
                                                 const SubgroupHandle& h) {
  std::vector<std::vector<Element>> cosets;
  std::vector<char> used(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (used[x]) continue;
    std::vector<Element> coset;
    for (Element s : h.elements()) {
      Element y = g.op(x, s);
      used[y] = 1;
      coset.push_back(y);
    }
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

std::vector<std::vector<Element>> right_cosets_of(const FiniteGroup& g,
                                                  const SubgroupHandle& h) {
  std::vector<std::vector<Element>> cosets;
  std::vector<char> used(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (used[x]) continue;
    std::vector<Element> coset;
    for (Element s : h.elements()) {
      Element y = g.op(s, x);
      used[y] = 1;
      coset.push_back(y);
    }
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

}  // namespace

TEST_CASE("construction from explicit cosets reproduces the bundled C9 table") {
  auto g = mcs::group_from_spec("C9");
  auto h = mcs::subgroup_generated(g, {3});
  auto t = mcs::construction1(g, h, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}},
                              {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  CHECK(t.block_rows == 3);
  CHECK(t.block_cols == 3);
  CHECK(mcs::cells_equal(t, mcs::fixtures::table1()));

  auto canonical = mcs::canonical_construction1(g, h);
  CHECK(mcs::cells_equal(canonical, t));
}

TEST_CASE("degenerate subgroup choices") {
  auto g = mcs::group_from_spec("C4");

  // H = G: one coset, singleton rep sets, blocks of one full row
  auto whole = SubgroupHandle::create(g, {0, 1, 2, 3});
  auto t = mcs::construction1(g, whole, {{0, 1, 2, 3}}, {{0}, {1}, {2}, {3}});
  CHECK(t.block_rows == 1);
  CHECK(t.block_cols == 4);
  CHECK(mcs::verify_cayley(t));
  CHECK(mcs::verify_sudoku(t, BlockLayout::of(t)));

  // H = <2>: the 2x2-blocked table
  auto h = mcs::subgroup_generated(g, {2});
  auto t2 = mcs::construction1(g, h, {{0, 2}, {1, 3}}, {{0, 1}, {2, 3}});
  CHECK(t2.block_rows == 2);
  CHECK(t2.block_cols == 2);
  CHECK(mcs::verify_sudoku(t2, BlockLayout::of(t2)));
}

TEST_CASE("construction rejects malformed coset data") {
  auto g = mcs::group_from_spec("C9");
  auto h = mcs::subgroup_generated(g, {3});

  // not a right coset of H
  CHECK_THROWS_AS(mcs::construction1(g, h, {{0, 3, 5}, {1, 4, 7}, {2, 6, 8}},
                                     {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}),
                  std::invalid_argument);
  // rep set meets the coset {0,3,6} twice
  CHECK_THROWS_AS(mcs::construction1(g, h, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}},
                                     {{0, 3, 2}, {1, 4, 5}, {6, 7, 8}}),
                  std::invalid_argument);
  // wrong number of cosets
  CHECK_THROWS_AS(mcs::construction1(g, h, {{0, 3, 6}, {1, 4, 7}},
                                     {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}),
                  std::invalid_argument);
  // duplicate element inside a coset list
  CHECK_THROWS_AS(mcs::construction1(g, h, {{0, 3, 3}, {1, 4, 7}, {2, 5, 8}},
                                     {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}),
                  std::invalid_argument);
}

TEST_CASE("random subgroup orderings always give sudoku tables") {
  std::mt19937 rng(24680);
  const char* specs[] = {"C36", "C6 x C6", "S4",      "Heis(3)", "S3 x C4",
                         "C2 x C18",       "S3 x S3", "C35",     "C4 x C9"};
  int built = 0;
  for (int trial = 0; built < 120; ++trial) {
    const auto& spec = specs[trial % std::size(specs)];
    auto g = mcs::group_from_spec(spec);
    std::uniform_int_distribution<Element> pick(0, g.order() - 1);
    auto h = mcs::subgroup_generated(g, {pick(rng), pick(rng)});
    if (h.size() == g.order() && trial % 3 != 0) continue;  // keep some variety

    auto cosets = right_cosets_of(g, h);
    std::shuffle(cosets.begin(), cosets.end(), rng);
    for (auto& coset : cosets) std::shuffle(coset.begin(), coset.end(), rng);

    // each rep set takes one element from every left coset
    auto left = left_cosets_of(g, h);
    for (auto& coset : left) std::shuffle(coset.begin(), coset.end(), rng);
    std::vector<std::vector<Element>> rep_sets(h.size());
    for (std::size_t i = 0; i < rep_sets.size(); ++i) {
      for (const auto& coset : left) rep_sets[i].push_back(coset[i]);
      std::shuffle(rep_sets[i].begin(), rep_sets[i].end(), rng);
    }

    auto t = mcs::construction1(g, h, cosets, rep_sets);
    CAPTURE(spec);
    CHECK(t.block_rows == g.order() / h.size());
    CHECK(t.block_cols == h.size());
    REQUIRE(mcs::verify_cayley(t));
    REQUIRE(mcs::verify_sudoku(t, BlockLayout::of(t)));
    ++built;
  }
}

TEST_CASE("hypothesis check accepts the C3 x C3 instance") {
  auto g = mcs::group_from_spec("C3 x C3");
  auto n = SubgroupHandle::create(g, {0, 3, 6});
  auto t = RepList::create(g, n, {0, 1, 2}, CosetSide::kLeft);
  auto inst = MagicInstance::create(g, n, t);
  CHECK(inst.k == 3);

  auto report = mcs::check_mcs_hypotheses(inst);
  CHECK(report.exp_divides_k);
  CHECK(report.n_central_of_order_k);
  CHECK(report.n_product_trivial);
  CHECK(report.t_shifted_products_trivial);
  CHECK_FALSE(report.failing_shift.has_value());
  CHECK(report.overall);
  CHECK(report.describe().find("FAIL") == std::string::npos);
}

TEST_CASE("hypothesis check on C9 finds the exponent obstruction") {
  auto g = mcs::group_from_spec("C9");
  auto n = mcs::subgroup_generated(g, {3});
  auto t = RepList::create(g, n, {0, 1, 2}, CosetSide::kLeft);
  auto report = mcs::check_mcs_hypotheses(MagicInstance::create(g, n, t));

  CHECK_FALSE(report.exp_divides_k);  // exponent 9 does not divide 3
  CHECK(report.n_central_of_order_k);
  CHECK(report.n_product_trivial);  // 0+3+6 = 0
  CHECK_FALSE(report.overall);

  // the interleaved products are (0+1+2) + 3 t_i = 3 + 3 t_i, never 0, so
  // the literal shifted-product check fails as well, first at i = 1
  CHECK_FALSE(report.t_shifted_products_trivial);
  REQUIRE(report.failing_shift.has_value());
  CHECK(*report.failing_shift == 1);

  auto text = report.describe();
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("i = 1") != std::string::npos);
}

TEST_CASE("hypothesis check on C2 x C2 fails products only") {
  auto g = mcs::group_from_spec("C2 x C2");
  auto n = SubgroupHandle::create(g, {g.element("00"), g.element("10")});
  auto t = mcs::coset_reps(g, n, CosetSide::kLeft);
  CHECK(t.reps() == std::vector<Element>{0, 1});

  auto report = mcs::check_mcs_hypotheses(MagicInstance::create(g, n, t));
  CHECK(report.exp_divides_k);
  CHECK(report.n_central_of_order_k);
  CHECK_FALSE(report.n_product_trivial);  // 00 + 10 = 10
  CHECK_FALSE(report.t_shifted_products_trivial);
  CHECK(report.failing_shift.has_value());
  CHECK_FALSE(report.overall);
}

TEST_CASE("magic instances validate their shape") {
  auto g = mcs::group_from_spec("C3 x C3");
  auto n = SubgroupHandle::create(g, {0, 3, 6});
  auto t = RepList::create(g, n, {0, 1, 2}, CosetSide::kLeft);

  // subgroup order must be a permutation of N
  CHECK_THROWS_AS(MagicInstance::create(g, n, t, {0, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(MagicInstance::create(g, n, t, {0, 1, 6}), std::invalid_argument);
  CHECK_NOTHROW(MagicInstance::create(g, n, t, {6, 0, 3}));

  // right-coset representatives are not accepted
  auto right = RepList::create(g, n, {0, 1, 2}, CosetSide::kRight);
  CHECK_THROWS_AS(MagicInstance::create(g, n, right), std::invalid_argument);

  // non-square order
  auto c6 = mcs::group_from_spec("C6");
  auto h6 = mcs::subgroup_generated(c6, {2});
  auto t6 = mcs::coset_reps(c6, h6, CosetSide::kLeft);
  CHECK_THROWS_AS(MagicInstance::create(c6, h6, t6), std::invalid_argument);
}

TEST_CASE("magic table reproduces the bundled C3 x C3 table") {
  auto g = mcs::group_from_spec("C3 x C3");
  auto n = SubgroupHandle::create(g, {0, 3, 6});
  auto t = RepList::create(g, n, {0, 1, 2}, CosetSide::kLeft);

  // the bundled table pins the subgroup ordering 00, 10, 20 explicitly
  auto inst = MagicInstance::create(g, n, t, {0, 3, 6});
  auto table = mcs::magic_table(inst);
  CHECK(mcs::cells_equal(table, mcs::fixtures::table3()));
  expect_fully_magic(table);

  // canonical index order happens to coincide
  auto table2 = mcs::magic_table(MagicInstance::create(g, n, t));
  CHECK(mcs::cells_equal(table2, table));

  // a different N ordering still yields a pandiagonal table
  auto table3 = mcs::magic_table(MagicInstance::create(g, n, t, {3, 6, 0}));
  CHECK_FALSE(mcs::cells_equal(table3, table));
  expect_fully_magic(table3);
}

TEST_CASE("magic table refuses failing instances") {
  auto z9 = mcs::group_from_spec("C9");
  auto n9 = mcs::subgroup_generated(z9, {3});
  auto t9 = RepList::create(z9, n9, {0, 1, 2}, CosetSide::kLeft);
  try {
    mcs::magic_table(MagicInstance::create(z9, n9, t9));
    FAIL("expected rejection");
  } catch (const mcs::HypothesisRejected& e) {
    CHECK_FALSE(e.report.exp_divides_k);
    CHECK_FALSE(e.report.overall);
  }

  auto v4 = mcs::group_from_spec("C2 x C2");
  auto nv = SubgroupHandle::create(v4, {0, 2});
  auto tv = mcs::coset_reps(v4, nv, CosetSide::kLeft);
  CHECK_THROWS_AS(mcs::magic_table(MagicInstance::create(v4, nv, tv)),
                  mcs::HypothesisRejected);
}

TEST_CASE("abelian representative correction") {
  auto g = mcs::group_from_spec("C3 x C3");
  auto n = SubgroupHandle::create(g, {0, 3, 6});
  auto t = mcs::abelian_reps(g, n);
  CHECK(t.reps() == std::vector<Element>{0, 1, 2});  // already trivial product

  // the corrected list always multiplies to the identity and differs from
  // the canonical representatives only in the last slot, by an element of N
  auto c4c4 = mcs::group_from_spec("C4 x C4");
  auto n2 = mcs::subgroup_generated(c4c4, {c4c4.element("02"), c4c4.element("20")});
  CHECK(n2.size() == 4);
  auto t2 = mcs::abelian_reps(c4c4, n2);
  CHECK(mcs::product_of(c4c4, t2.reps()) == c4c4.identity());
  auto canonical = mcs::coset_reps(c4c4, n2, CosetSide::kLeft);
  for (std::size_t i = 0; i + 1 < t2.reps().size(); ++i)
    CHECK(t2.reps()[i] == canonical.reps()[i]);
  Element back = t2.reps().back(), canon_back = canonical.reps().back();
  CHECK(back != canon_back);  // this instance needs a real correction
  CHECK(n2.contains(c4c4.op(c4c4.inverse(canon_back), back)));

  // the result satisfies every hypothesis
  auto report = mcs::check_mcs_hypotheses(MagicInstance::create(c4c4, n2, t2));
  CHECK(report.overall);
  expect_fully_magic(mcs::magic_table(MagicInstance::create(c4c4, n2, t2)));
}

TEST_CASE("abelian_reps reports each failing precondition distinctly") {
  auto message_of = [](auto&& fn) {
    try {
      fn();
      return std::string("no error");
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
  };

  auto g = mcs::group_from_spec("C3 x C3");
  auto n = SubgroupHandle::create(g, {0, 3, 6});
  auto other = mcs::group_from_spec("C3 x C3");

  // subgroup of a different group instance
  auto m1 = message_of([&] { mcs::abelian_reps(other, n); });

  // nonabelian group
  auto s4 = mcs::group_from_spec("S4");
  auto hs = mcs::subgroup_generated(s4, {s4.element("2134")});
  auto m2 = message_of([&] { mcs::abelian_reps(s4, hs); });

  // order not k^2
  auto c8 = mcs::group_from_spec("C8");
  auto h8 = mcs::subgroup_generated(c8, {2});
  auto m3 = message_of([&] { mcs::abelian_reps(c8, h8); });

  // exponent does not divide k
  auto c9 = mcs::group_from_spec("C9");
  auto h9 = mcs::subgroup_generated(c9, {3});
  auto m4 = message_of([&] { mcs::abelian_reps(c9, h9); });

  // subgroup product nontrivial
  auto c44 = mcs::group_from_spec("C4 x C4");
  auto n5 = mcs::subgroup_generated(c44, {c44.element("10")});
  auto m5 = message_of([&] { mcs::abelian_reps(c44, n5); });

  // quotient product nontrivial
  auto c224 = mcs::group_from_spec("C2 x C2 x C4");
  auto n6 = mcs::subgroup_generated(
      c224, {c224.element("(01,0)"), c224.element("(10,0)")});
  REQUIRE(n6.size() == 4);
  auto m6 = message_of([&] { mcs::abelian_reps(c224, n6); });

  std::vector<std::string> messages = {m1, m2, m3, m4, m5, m6};
  for (const auto& m : messages) CHECK(m != "no error");
  std::sort(messages.begin(), messages.end());
  CHECK(std::adjacent_find(messages.begin(), messages.end()) == messages.end());
}

TEST_CASE("abelian_reps handles the five-factor showcase group") {
  auto g = mcs::group_from_spec("C9 x C3 x C3 x C4 x C4");
  REQUIRE(g.order() == 1296);
  // generators of <3> x C3 x 1 x <2> x <2> as flat indices
  auto n = mcs::subgroup_generated(g, {3 * 144, 48, 8, 2});
  REQUIRE(n.size() == 36);
  auto t = mcs::abelian_reps(g, n);
  CHECK(mcs::product_of(g, t.reps()) == g.identity());
  auto report = mcs::check_mcs_hypotheses(MagicInstance::create(g, n, t));
  CHECK(report.overall);
}

TEST_CASE("embedding any group into a magic construction") {
  SUBCASE("trivial group") {
    auto inst = mcs::build_embedding_group(mcs::group_from_spec("C1"));
    CHECK(inst.group.order() == 1);
    CHECK(inst.k == 1);
    auto table = mcs::magic_table(inst);
    CHECK(table.size() == 1);
  }

  SUBCASE("C2") {
    auto inst = mcs::build_embedding_group(mcs::group_from_spec("C2"));
    CHECK(inst.group.order() == 16);
    CHECK(inst.k == 4);
    CHECK(inst.subgroup.elements() == std::vector<Element>{0, 1, 2, 3});
    auto report = mcs::check_mcs_hypotheses(inst);
    CHECK(report.overall);
    expect_fully_magic(mcs::magic_table(inst));
  }

  SUBCASE("C3") {
    auto inst = mcs::build_embedding_group(mcs::group_from_spec("C3"));
    CHECK(inst.group.order() == 81);
    CHECK(inst.k == 9);
    CHECK(mcs::check_mcs_hypotheses(inst).overall);
    expect_fully_magic(mcs::magic_table(inst));
  }

  SUBCASE("nonabelian S3 instance satisfies the hypotheses") {
    auto inst = mcs::build_embedding_group(mcs::group_from_spec("S3"));
    CHECK(inst.group.order() == 1296);
    CHECK(inst.k == 36);
    CHECK_FALSE(mcs::is_abelian(inst.group));
    CHECK(mcs::check_mcs_hypotheses(inst).overall);
  }
}

TEST_CASE("extraspecial instances for p = 3") {
  for (auto which :
       {mcs::ExtraspecialCase::kExponentP, mcs::ExtraspecialCase::kExponentPSquared}) {
    auto inst = mcs::build_extraspecial_instance(3, which);
    CHECK(inst.group.order() == 81);
    CHECK(inst.k == 9);
    CHECK(inst.subgroup.size() == 9);

    // N is the full center
    auto z = mcs::center(inst.group);
    CHECK(z.elements() == inst.subgroup.elements());

    // T starts at (identity of E, second element of the cyclic factor)
    CHECK(inst.reps.reps()[0] == 1);

    auto report = mcs::check_mcs_hypotheses(inst);
    CHECK(report.overall);
    expect_fully_magic(mcs::magic_table(inst));
  }
  CHECK(mcs::exponent(mcs::build_extraspecial_instance(3, mcs::ExtraspecialCase::kExponentPSquared).group) == 9);
  CHECK_THROWS_AS(mcs::build_extraspecial_instance(4, mcs::ExtraspecialCase::kExponentP),
                  std::invalid_argument);
}

TEST_CASE("constructed tables stay magic under any valid N ordering") {
  // hypothesis 3 only fixes the product of one chosen ordering; an abelian N
  // keeps it under permutation, and the table stays pandiagonal
  auto g = mcs::group_from_spec("C4 x C4");
  auto n = mcs::subgroup_generated(g, {g.element("02"), g.element("20")});
  auto t = mcs::abelian_reps(g, n);
  std::vector<Element> order = n.elements();
  std::mt19937 rng(1122);
  for (int trial = 0; trial < 8; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    auto inst = MagicInstance::create(g, n, t, order);
    REQUIRE(mcs::check_mcs_hypotheses(inst).overall);
    expect_fully_magic(mcs::magic_table(inst));
  }
}
