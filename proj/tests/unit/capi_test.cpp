#include "stirforest/stirforest.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace {

class CApi : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(sf_context_create(&ctx), SF_OK); }
  void TearDown() override { sf_context_destroy(ctx); }

  // Runs a text-producing call and returns its output, or "" on failure.
  template <class Fn>
  std::string text(Fn&& fn, sf_status expect = SF_OK) {
    sf_text* out = nullptr;
    sf_status s = fn(&out);
    EXPECT_EQ(s, expect) << sf_last_error(ctx);
    std::string value = out ? sf_text_data(out) : "";
    if (out) EXPECT_EQ(sf_text_size(out), value.size());
    sf_text_destroy(out);
    return value;
  }

  std::string map(const char* name, unsigned k, const char* input, const char* set = nullptr, int has_x = 0,
                  int32_t x = 0, sf_status expect = SF_OK) {
    return text([&](sf_text** o) { return sf_map(ctx, name, k, input, has_x, x, set, o); }, expect);
  }

  sf_context* ctx = nullptr;
};

TEST_F(CApi, StatusNamesAndVersion) {
  EXPECT_STREQ(sf_status_name(SF_OK), "ok");
  EXPECT_STREQ(sf_status_name(SF_ERR_PARSE), "parse error");
  EXPECT_NE(std::string(sf_version()), "");
  EXPECT_EQ(sf_context_create(nullptr), SF_ERR_ARGUMENT);
}

TEST_F(CApi, Poly) {
  EXPECT_EQ(text([&](sf_text** o) { return sf_poly(ctx, 3, 2, 'A', SF_ROUTE_EXC_CYC, o); }), "[1,10,4]");
  EXPECT_EQ(text([&](sf_text** o) { return sf_poly(ctx, 3, 2, 'A', SF_ROUTE_AP, o); }), "[1,10,4]");
  EXPECT_EQ(text([&](sf_text** o) { return sf_poly(ctx, 3, 2, 'b', SF_ROUTE_EGF, o); }), "[0,3,3]");
  EXPECT_EQ(text([&](sf_text** o) { return sf_poly(ctx, 4, 3, 'c', SF_ROUTE_EGF, o); }), "[0,27,108,27]");
  text([&](sf_text** o) { return sf_poly(ctx, 3, 2, 'z', SF_ROUTE_EGF, o); }, SF_ERR_ARGUMENT);
  EXPECT_NE(std::string(sf_last_error(ctx)), "");
  text([&](sf_text** o) { return sf_poly(ctx, 3, 0, 'A', SF_ROUTE_EGF, o); }, SF_ERR_ARGUMENT);
}

TEST_F(CApi, Gamma) {
  EXPECT_EQ(text([&](sf_text** o) { return sf_gamma(ctx, 3, 2, 'a', SF_GAMMA_DECOMPOSITION, o); }),
            R"({"center":2,"gamma":[1,5]})");
  EXPECT_EQ(text([&](sf_text** o) { return sf_gamma(ctx, 3, 2, 'a', SF_GAMMA_CENSUS, o); }),
            R"({"center":2,"gamma":[1,5]})");
  EXPECT_EQ(text([&](sf_text** o) { return sf_gamma(ctx, 3, 2, 'b', SF_GAMMA_CENSUS, o); }),
            R"({"center":3,"gamma":[0,3]})");
  EXPECT_EQ(text([&](sf_text** o) { return sf_gamma(ctx, 4, 3, 'c', SF_GAMMA_DECOMPOSITION, o); }),
            R"({"center":4,"gamma":[0,27,54]})");
  // The census has no hat forest at n = 1; padding keeps both routes equal.
  EXPECT_EQ(text([&](sf_text** o) { return sf_gamma(ctx, 1, 2, 'b', SF_GAMMA_CENSUS, o); }),
            text([&](sf_text** o) { return sf_gamma(ctx, 1, 2, 'b', SF_GAMMA_DECOMPOSITION, o); }));
}

TEST_F(CApi, PolynomialTools) {
  EXPECT_EQ(text([&](sf_text** o) { return sf_decompose(ctx, "[1,10,4]", 2, o); }),
            R"({"center":2,"a":[1,7,1],"b":[3,3]})");
  EXPECT_EQ(text([&](sf_text** o) { return sf_gamma_expand(ctx, "[0,27,108,27]", 4, o); }),
            R"({"center":4,"gamma":[0,27,54]})");
  EXPECT_EQ(text([&](sf_text** o) { return sf_shape(ctx, "[1,10,4]", 2, o); }),
            R"({"symmetric":false,"unimodal":true,"alternating_increasing":true,"gamma_positive":false})");
  text([&](sf_text** o) { return sf_shape(ctx, "[1,-1]", 1, o); }, SF_ERR_DOMAIN);
  text([&](sf_text** o) { return sf_shape(ctx, "1,2", 1, o); }, SF_ERR_PARSE);
}

TEST_F(CApi, Distribution) {
  EXPECT_EQ(text([&](sf_text** o) { return sf_distribution(ctx, "Qtilde", "ap", 3, 3, o); }), "[0,9,9]");
  EXPECT_EQ(text([&](sf_text** o) { return sf_distribution(ctx, "Fbar", "lleaf-si", 3, 2, o); }), "[1,7,1]");
  text([&](sf_text** o) { return sf_distribution(ctx, "Q", "lleaf", 3, 2, o); }, SF_ERR_DOMAIN);
  text([&](sf_text** o) { return sf_distribution(ctx, "Nope", "ap", 3, 2, o); }, SF_ERR_ARGUMENT);
}

TEST_F(CApi, Stats) {
  auto forest = text([&](sf_text** o) { return sf_stats(ctx, 3, "1[;3,7;] 2[4[;;6];;5] 8", SF_INPUT_AUTO, SF_FORMAT_TEXT, o); });
  EXPECT_NE(forest.find("kind: forest"), std::string::npos);
  EXPECT_NE(forest.find("lleaf: 5\n"), std::string::npos);
  EXPECT_NE(forest.find("si: 1\n"), std::string::npos);
  auto word = text([&](sf_text** o) { return sf_stats(ctx, 2, "1122", SF_INPUT_AUTO, SF_FORMAT_JSON, o); });
  EXPECT_NE(word.find(R"("kind":"word")"), std::string::npos);
  EXPECT_NE(word.find(R"("ap":1,"lap":2)"), std::string::npos);
  auto forced = text([&](sf_text** o) { return sf_stats(ctx, 1, "12", SF_INPUT_FOREST, SF_FORMAT_JSON, o); });
  EXPECT_NE(forced.find(R"("kind":"forest")"), std::string::npos);
  text([&](sf_text** o) { return sf_stats(ctx, 2, "1[2;1]", SF_INPUT_AUTO, SF_FORMAT_TEXT, o); }, SF_ERR_DOMAIN);
}

TEST_F(CApi, MapFixtures) {
  EXPECT_EQ(map("psi", 3, "1[3;;7] 2 4[;;6] 5 8", nullptr, 1, 2), "1[3;;7] 2[;;4[;;6],5] 8");
  EXPECT_EQ(map("xi", 3, "133377711446664225552888"), "1[;3,7;] 2[4[;;6];;5] 8");
  EXPECT_EQ(map("zeta-inv", 3, "1[;3,7;] 2[4[;;6];;5] 8"), "888244666422555113337771");
  EXPECT_EQ(map("chi", 3, "244666422555"), "2[4[;;6];;5]");
  EXPECT_EQ(map("phi", 3, "1[3,4[5,10;6[;9;],8;7];;2]", nullptr, 1, 4), "1[3,4,5,10;6[;9;],8;2,7]");
  EXPECT_EQ(map("phi-set", 3, "1[;3[;7;];2] 4[;;5[;6,8;]] 9", "3,5"), "1[;3,7;2] 4[;6,8;5] 9");
  EXPECT_EQ(map("gamma", 3, "1 2[;5;] 3 4[;;7] 6 8[;9,10;]", "1,3"), "1[;9,10;2[;5;],3[;;4[;;7],6],8]");
  EXPECT_EQ(map("gamma-prime", 2, "1[;2] 3"), "1 2 3 | {1}");
  EXPECT_EQ(map("theta", 2, "1[2[3;];] | {2}"), "1[2,3;] | {}");
  EXPECT_EQ(map("alpha", 2, "1 2 3 | {1}"), "1[;2] 3 | {}");
  EXPECT_EQ(map("beta", 2, "1[;2] 3"), "1 2 3 | {1}");
}

TEST_F(CApi, MapErrors) {
  map("psi", 3, "1 2", nullptr, 0, 0, SF_ERR_ARGUMENT);
  map("nope", 3, "1", nullptr, 0, 0, SF_ERR_ARGUMENT);
  map("xi", 2, "1212", nullptr, 0, 0, SF_ERR_DOMAIN);
  map("zeta-inv", 2, "1[2", nullptr, 0, 0, SF_ERR_PARSE);
  map("gamma", 2, "1 2 3 | {1}", "2", 0, 0, SF_ERR_ARGUMENT);
  map("gamma", 2, "1 2 3", "7", 0, 0, SF_ERR_DOMAIN);
  map("beta", 2, "1 2 3", nullptr, 0, 0, SF_ERR_DOMAIN);
}

TEST_F(CApi, MapInverseCompositions) {
  for (const char* w : {"133377711446664225552888", "888244666422555113337771", "111222333"}) {
    EXPECT_EQ(map("xi-inv", 3, map("xi", 3, w).c_str()), w);
    EXPECT_EQ(map("zeta-inv", 3, map("zeta", 3, w).c_str()), w);
  }
  EXPECT_EQ(map("chi-inv", 3, map("chi", 3, "244666422555").c_str()), "244666422555");
  const char* f = "1[;4,7;2[;5;],3,6[;8;]]";
  EXPECT_EQ(map("gamma", 3, map("gamma-prime", 3, f).c_str()), f);
  EXPECT_EQ(map("theta", 2, map("theta-prime", 2, "1[2,3;]").c_str()), "1[2,3;] | {}");
}

TEST_F(CApi, Enumerate) {
  auto collect = [&](unsigned n, unsigned k, sf_kind kind, sf_filter filter, uint64_t limit, sf_format fmt) {
    std::vector<std::string> items;
    sf_cursor* cursor = nullptr;
    EXPECT_EQ(sf_enumerate_open(ctx, n, k, kind, filter, limit, fmt, &cursor), SF_OK) << sf_last_error(ctx);
    sf_text* item = nullptr;
    while (sf_enumerate_next(cursor, &item) == SF_OK) {
      items.emplace_back(sf_text_data(item));
      sf_text_destroy(item);
    }
    sf_enumerate_close(cursor);
    return items;
  };
  EXPECT_EQ(collect(2, 2, SF_KIND_PERMS, SF_FILTER_NONE, 0, SF_FORMAT_TEXT),
            (std::vector<std::string>{"1122", "1221", "2211"}));
  EXPECT_EQ(collect(3, 2, SF_KIND_FORESTS, SF_FILTER_NONE, 0, SF_FORMAT_TEXT).size(), 15u);
  EXPECT_EQ(collect(3, 2, SF_KIND_FORESTS, SF_FILTER_BAR, 0, SF_FORMAT_TEXT).size(), 9u);
  EXPECT_EQ(collect(3, 2, SF_KIND_FORESTS, SF_FILTER_HAT, 0, SF_FORMAT_TEXT).size(), 6u);
  EXPECT_EQ(collect(3, 2, SF_KIND_PERMS, SF_FILTER_BAR, 0, SF_FORMAT_TEXT).size(), 9u);
  EXPECT_EQ(collect(3, 3, SF_KIND_FORESTS, SF_FILTER_TILDE, 0, SF_FORMAT_TEXT).size(), 18u);
  EXPECT_EQ(collect(3, 3, SF_KIND_PERMS, SF_FILTER_TILDE, 0, SF_FORMAT_TEXT).size(), 18u);
  EXPECT_EQ(collect(4, 2, SF_KIND_PERMS, SF_FILTER_NONE, 5, SF_FORMAT_TEXT).size(), 5u);
  auto json = collect(1, 2, SF_KIND_FORESTS, SF_FILTER_NONE, 0, SF_FORMAT_JSON);
  ASSERT_EQ(json.size(), 1u);
  EXPECT_EQ(json[0], R"({"forest":"1","trees":[{"label":1}]})");
  sf_cursor* cursor = nullptr;
  EXPECT_EQ(sf_enumerate_open(ctx, 3, 2, SF_KIND_PERMS, SF_FILTER_STAR, 0, SF_FORMAT_TEXT, &cursor), SF_ERR_ARGUMENT);
  EXPECT_EQ(cursor, nullptr);
}

TEST_F(CApi, LimitsApply) {
  ASSERT_EQ(sf_context_set_limits(ctx, 10, 0), SF_OK);
  sf_cursor* cursor = nullptr;
  EXPECT_EQ(sf_enumerate_open(ctx, 4, 2, SF_KIND_PERMS, SF_FILTER_NONE, 0, SF_FORMAT_TEXT, &cursor), SF_ERR_LIMIT);
  ASSERT_EQ(sf_context_set_limits(ctx, 0, 3), SF_OK);
  text([&](sf_text** o) { return sf_poly(ctx, 4, 2, 'A', SF_ROUTE_EXC_CYC, o); }, SF_ERR_LIMIT);
}

TEST_F(CApi, Verify) {
  sf_report_list* list = nullptr;
  ASSERT_EQ(sf_verify(ctx, 3, 2, "theorems,polynomials", &list), SF_OK) << sf_last_error(ctx);
  ASSERT_GT(sf_report_count(list), 0u);
  EXPECT_EQ(sf_report_failures(list), 0u);
  for (size_t i = 0; i < sf_report_count(list); ++i) {
    EXPECT_TRUE(sf_report_passed(list, i));
    EXPECT_EQ(std::string(sf_report_text(list, i)).rfind("PASS", 0), 0u);
    EXPECT_EQ(sf_report_json(list, i)[0], '{');
  }
  EXPECT_EQ(sf_report_json(list, sf_report_count(list)), nullptr);
  sf_report_list_destroy(list);
  list = nullptr;
  EXPECT_EQ(sf_verify(ctx, 3, 2, "bogus", &list), SF_ERR_ARGUMENT);
  EXPECT_EQ(list, nullptr);
}

TEST_F(CApi, NullArgumentsRejected) {
  sf_text* out = nullptr;
  EXPECT_EQ(sf_poly(nullptr, 3, 2, 'A', SF_ROUTE_EGF, &out), SF_ERR_ARGUMENT);
  EXPECT_EQ(sf_map(ctx, nullptr, 2, "1", 0, 0, nullptr, &out), SF_ERR_ARGUMENT);
  EXPECT_EQ(sf_enumerate_next(nullptr, &out), SF_ERR_ARGUMENT);
  EXPECT_EQ(sf_report_count(nullptr), 0u);
}

}  // namespace
