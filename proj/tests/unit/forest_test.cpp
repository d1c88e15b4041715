#include "stirforest/bimap.hpp"
#include "stirforest/errors.hpp"
#include "stirforest/forest.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

namespace sf {
namespace {

constexpr const char* kSample = "1[10;;9] 2[;;3] 4[5[;6;],8;;7]";
constexpr const char* kRunning = "1[;3,7;] 2[4[;;6];;5] 8";

TEST(ForestText, RoundTripsFixtures) {
  for (const char* text : {kSample, "1[;3[;7;];2] 4[;;5[;6,8;]] 9", "1[3;;7] 2[;;4[;;6],5] 8"})
    EXPECT_EQ(serialize_forest(parse_forest(text, 3)), text);
  EXPECT_EQ(serialize_forest(parse_forest(kRunning, 3)), kRunning);
}

TEST(ForestText, SpecExamples) {
  auto f = parse_forest(kRunning, 3);
  ASSERT_EQ(f.trees.size(), 3u);
  EXPECT_EQ(f.trees[0].label, 1);
  EXPECT_EQ(f.trees[1].slots[0][0].label, 4);
  auto single = parse_forest("5", 2);
  ASSERT_EQ(single.trees.size(), 1u);
  EXPECT_TRUE(single.trees[0].is_leaf());
  EXPECT_THROW(parse_forest("1[2;1]", 2), DomainError);
}

TEST(ForestText, WhitespaceToleratedAndEmptyForest) {
  EXPECT_EQ(serialize_forest(parse_forest("  1[ ; 2 , 3 ]   4 ", 2)), "1[;2,3] 4");
  EXPECT_TRUE(parse_forest("", 2).empty());
  EXPECT_EQ(serialize_forest(Forest{2, {}}), "");
}

TEST(ForestText, SyntaxErrors) {
  EXPECT_THROW(parse_forest("1[2]", 2), ParseError);      // one slot for k = 2
  EXPECT_THROW(parse_forest("1[2;3;4]", 2), ParseError);  // three slots
  EXPECT_THROW(parse_forest("1[2;", 2), ParseError);
  EXPECT_THROW(parse_forest("a", 2), ParseError);
  EXPECT_THROW(parse_forest("1[;]", 2), DomainError);  // not pruned
  EXPECT_THROW(parse_forest("0", 2), DomainError);
}

TEST(Validate, SpecExamples) {
  EXPECT_TRUE(validate_forest(parse_forest("1[;2,3]", 2)).empty());
  Forest unsorted{2, {LabeledTree{1, {{}, {make_leaf(3), make_leaf(2)}}}}};
  auto v = validate_forest(unsorted);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, ViolationKind::SlotNotIncreasing);
  Forest roots{2, {LabeledTree{2, {{}, {make_leaf(3)}}}, make_leaf(1)}};
  v = validate_forest(roots);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, ViolationKind::RootsNotIncreasing);
}

TEST(Validate, OtherViolations) {
  Forest path{2, {LabeledTree{3, {{make_leaf(2)}, {}}}}};
  EXPECT_EQ(validate_forest(path).at(0).kind, ViolationKind::PathNotIncreasing);
  Forest slots{3, {LabeledTree{1, {{make_leaf(2)}, {}}}}};
  EXPECT_EQ(validate_forest(slots).at(0).kind, ViolationKind::WrongSlotCount);
  Forest dup{2, {LabeledTree{1, {{make_leaf(2)}, {}}}, make_leaf(2)}};
  auto v = validate_forest(dup);
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](auto& x) { return x.kind == ViolationKind::DuplicateLabel; }));
}

TEST(ClassifyLabel, SampleForest) {
  auto f = parse_forest(kSample, 3);
  EXPECT_EQ(classify_label(f, 6), NodeClass::OldLeaf);
  EXPECT_EQ(classify_label(f, 8), NodeClass::OldLeaf);
  EXPECT_EQ(classify_label(f, 5), NodeClass::YoungInternal);
  EXPECT_EQ(classify_label(f, 7), NodeClass::YoungLeaf);
  EXPECT_EQ(classify_label(f, 4), NodeClass::Root);
  EXPECT_THROW(classify_label(f, 11), DomainError);
}

TEST(ForestStats, SpecExamples) {
  EXPECT_EQ(forest_stats(parse_forest("1 2 3", 2)), (ForestStats{3, 3, 0, 0, 0, 0, 0}));
  auto running = forest_stats(parse_forest(kRunning, 3));
  EXPECT_EQ(running.lleaf, 5u);
  EXPECT_EQ(running.si, 1u);
  EXPECT_EQ(forest_stats(parse_forest("1[2[3;];]", 2)), (ForestStats{1, 0, 1, 0, 1, 2, 0}));
}

TEST(LabelSets, SpecExamples) {
  auto s = label_sets(parse_forest("1 2[3;]", 2));
  EXPECT_EQ(s.si, LabelSet{1});
  EXPECT_EQ(s.si_star, LabelSet{1});
  EXPECT_TRUE(s.oint.empty());
  EXPECT_TRUE(s.oint_star.empty());
  EXPECT_EQ(s.oleaf, LabelSet{3});
  s = label_sets(parse_forest("1[2;] 3", 2));
  EXPECT_EQ(s.si, LabelSet{3});
  EXPECT_TRUE(s.si_star.empty());
  EXPECT_EQ(s.oleaf, LabelSet{2});
  s = label_sets(parse_forest("1[;2[3;]]", 2));
  EXPECT_EQ(s.oint, LabelSet{2});
  EXPECT_TRUE(s.oint_star.empty());
}

TEST(Removable, SpecExamples) {
  auto r = removable_labels(parse_forest(kSample, 3));
  EXPECT_EQ(r.old_leaves, LabelSet{3});
  EXPECT_TRUE(r.young_leaves.empty());
  for (const char* young_case : {"1[2;3;] 4[;6,8;5,7]", "1[3;2;] 4[;6,8;5,7]"}) {
    r = removable_labels(parse_forest(young_case, 3));
    EXPECT_EQ(r.young_leaves, LabelSet{5}) << young_case;
  }
  EXPECT_EQ(removable_labels(parse_forest("1[;2] 3", 2)).old_leaves, LabelSet{2});
}

TEST(ForestClass, SpecExamples) {
  EXPECT_EQ(forest_class(parse_forest("1[;2,3]", 2)), (ForestClass{true, false}));
  auto all = enumerate_forests(3, 2);
  EXPECT_EQ(all.size(), 15u);
  EXPECT_EQ(std::count_if(all.begin(), all.end(), [](auto& f) { return forest_class(f).in_bar; }), 9);
  EXPECT_EQ(std::count_if(all.begin(), all.end(), [](auto& f) { return !forest_in_bar(f); }), 6);
}

TEST(Enumerate, SpecExamples) {
  for (unsigned k = 1; k <= 4; ++k) {
    auto one = enumerate_forests(1, k);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(serialize_forest(one[0]), "1");
  }
  EXPECT_EQ(enumerate_forests(3, 3).size(), 28u);
}

TEST(Enumerate, ArbitraryLabels) {
  std::vector<Label> labels{4, 9, 12};
  auto forests = enumerate_forests(labels, 2);
  EXPECT_EQ(forests.size(), 15u);
  for (const auto& f : forests) EXPECT_EQ(forest_labels(f), labels);
  auto trees = enumerate_trees(labels, 2);
  EXPECT_EQ(trees.size(), 8u);  // c_3 at k = 2 is 4x + 4x^2
}

TEST(Enumerate, LimitRefused) {
  Limits tight;
  tight.max_objects = 100;
  EXPECT_THROW(enumerate_forests(5, 2, tight), LimitError);
}

TEST(Json, NestedObjects) {
  EXPECT_EQ(tree_to_json(parse_tree("1[;2]", 2)), R"({"label":1,"slots":[[],[{"label":2}]]})");
  EXPECT_EQ(forest_to_json(parse_forest("1 2", 2)), R"([{"label":1},{"label":2}])");
}

// Properties checked over every forest on [n] for n <= 5 and k <= 3.
class EveryForest : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(EveryForest, Invariants) {
  auto [n, k] = GetParam();
  auto forests = enumerate_forests(n, k);
  std::set<std::string> from_zeta;
  for (const auto& w : enumerate_k_stirling(n, k)) from_zeta.insert(serialize_forest(zeta(w)));
  std::set<std::string> generated;
  for (const auto& f : forests) {
    const auto text = serialize_forest(f);
    generated.insert(text);
    ASSERT_TRUE(validate_forest(f).empty()) << text;
    EXPECT_EQ(parse_forest(text, k), f) << text;

    auto st = forest_stats(f);
    EXPECT_EQ(st.oleaf + st.yleaf + st.si, st.lleaf) << text;
    EXPECT_EQ(st.lleaf + st.lint, n) << text;

    auto rem = removable_labels(f);
    EXPECT_EQ(rem.young_leaves, removable_young_shortcut(f)) << text;
    EXPECT_EQ(st.rleaf, rem.old_leaves.size() + rem.young_leaves.size()) << text;

    auto cls = forest_class(f);
    auto sets = label_sets(f);
    EXPECT_EQ(cls.in_bar, forest_in_bar(f));
    if (n >= 1 && cls.in_star && cls.in_bar)
      EXPECT_EQ(sets.oint_star.size() + sets.si_star.size() + 2 * st.oleaf, n - 1) << text;
    if (cls.in_star && !cls.in_bar) EXPECT_EQ(sets.oint.size() + sets.si.size() + 2 * st.oleaf, n) << text;

    if (f.trees.size() == 1 && n >= 2 && st.yleaf == 0) EXPECT_EQ(st.oint + 2 * st.oleaf, n) << text;
  }
  EXPECT_EQ(generated.size(), forests.size());
  EXPECT_EQ(generated, from_zeta);
  EXPECT_EQ(forests.size(), k_stirling_count(n, k));
}

INSTANTIATE_TEST_SUITE_P(Small, EveryForest,
                         ::testing::Values(std::pair{0u, 1u}, std::pair{1u, 2u}, std::pair{3u, 1u}, std::pair{5u, 1u},
                                           std::pair{4u, 2u}, std::pair{5u, 2u}, std::pair{4u, 3u},
                                           std::pair{5u, 3u}));

}  // namespace
}  // namespace sf
