// Command-line front end. Talks to the library through the C interface only.

#include "stirforest/stirforest.h"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Context {
  sf_context* ctx = nullptr;
  Context() {
    if (sf_context_create(&ctx) != SF_OK) throw std::bad_alloc();
  }
  ~Context() { sf_context_destroy(ctx); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
};

struct Text {
  sf_text* handle = nullptr;
  ~Text() { sf_text_destroy(handle); }
  std::string str() const { return sf_text_data(handle); }
};

// Library failures on user input are usage errors; the flag names the culprit.
int report_failure(sf_context* ctx, sf_status status, const std::string& flag) {
  std::cerr << "sf: " << flag << ": " << sf_status_name(status) << ": " << sf_last_error(ctx) << "\n";
  return status == SF_ERR_INTERNAL ? kExitInternal : kExitUsage;
}

std::string read_input(const std::string& value) {
  if (value != "-") return value;
  std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  while (!all.empty() && (all.back() == '\n' || all.back() == '\r')) all.pop_back();
  return all;
}

template <class T>
std::map<std::string, T> choices(std::initializer_list<std::pair<const std::string, T>> items) {
  return std::map<std::string, T>(items);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact k-Stirling permutations, increasing forests and bi-gamma-positivity checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::uint64_t max_objects = 0;
  unsigned max_perm_n = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-objects", max_objects, "Ceiling on enumerated family size");
  app.add_option("--max-perm-n", max_perm_n, "Ceiling on n for sums over permutations");

  unsigned n = 0, k = 1, n_max = 0, k_max = 0;
  std::uint64_t limit = 0;
  std::string kind, filter, which, route = "egf", by = "decomposition", input, name, set, as = "auto";
  std::optional<std::int32_t> x;
  std::vector<std::string> suites;

  auto* enumerate = app.add_subcommand("enumerate", "List k-Stirling permutations or forests on [n]");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--kind", kind)->required()->check(CLI::IsMember({"perms", "forests"}));
  enumerate->add_option("--filter", filter)->check(CLI::IsMember({"bar", "hat", "tilde", "star"}));
  enumerate->add_option("--limit", limit, "Stop after this many objects");

  auto* stats = app.add_subcommand("stats", "Statistic record of a word or forest");
  stats->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  stats->add_option("--input", input, "Word or forest text, - for stdin")->required();
  stats->add_option("--as", as, "Force the input kind")->check(CLI::IsMember({"auto", "word", "forest"}));

  auto* poly = app.add_subcommand("poly", "A_n, its decomposition parts, or the tree polynomial");
  poly->add_option("--n", n)->required();
  poly->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  poly->add_option("--which", which)->required()->check(CLI::IsMember({"A", "a", "b", "c"}));
  poly->add_option("--route", route)->check(CLI::IsMember({"ap", "exc-cyc", "egf"}));

  auto* gamma = app.add_subcommand("gamma", "Gamma coefficients of a decomposition part");
  gamma->add_option("--n", n)->required();
  gamma->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  gamma->add_option("--which", which)->required()->check(CLI::IsMember({"a", "b", "c"}));
  gamma->add_option("--by", by)->check(CLI::IsMember({"census", "decomposition"}));

  auto* map = app.add_subcommand("map", "Apply a bijection or transformation");
  map->add_option("--name", name)
      ->required()
      ->check(CLI::IsMember({"xi", "xi-inv", "chi", "chi-inv", "zeta", "zeta-inv", "phi", "phi-set", "theta",
                             "theta-prime", "psi", "alpha", "beta", "gamma", "gamma-prime"}));
  map->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  map->add_option("--x", x);
  map->add_option("--set", set);
  map->add_option("--input", input, "Word, forest or marked forest text, - for stdin")->required();

  auto* verify = app.add_subcommand("verify", "Run the exhaustive identity suite");
  verify->add_option("--n-max", n_max)->required();
  verify->add_option("--k-max", k_max)->required();
  verify->add_option("--suite", suites, "polynomials, bijections, gfs, pipeline, theorems")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Context context;
  sf_context* ctx = context.ctx;
  if (sf_context_set_limits(ctx, max_objects, max_perm_n) != SF_OK) return kExitInternal;
  const sf_format fmt = format == "json" ? SF_FORMAT_JSON : SF_FORMAT_TEXT;

  if (*enumerate) {
    auto filters = choices<sf_filter>(
        {{"", SF_FILTER_NONE}, {"bar", SF_FILTER_BAR}, {"hat", SF_FILTER_HAT}, {"tilde", SF_FILTER_TILDE},
         {"star", SF_FILTER_STAR}});
    sf_cursor* cursor = nullptr;
    sf_status s = sf_enumerate_open(ctx, n, k, kind == "perms" ? SF_KIND_PERMS : SF_KIND_FORESTS, filters.at(filter),
                                    limit, fmt, &cursor);
    if (s != SF_OK) return report_failure(ctx, s, filter.empty() ? "--n" : "--filter");
    Text item;
    while ((s = sf_enumerate_next(cursor, &item.handle)) == SF_OK) {
      std::cout << sf_text_data(item.handle) << "\n";
      sf_text_destroy(item.handle);
      item.handle = nullptr;
    }
    sf_enumerate_close(cursor);
    return s == SF_DONE ? kExitOk : report_failure(ctx, s, "--n");
  }

  if (*stats) {
    auto kinds = choices<sf_input_kind>({{"auto", SF_INPUT_AUTO}, {"word", SF_INPUT_WORD}, {"forest", SF_INPUT_FOREST}});
    Text out;
    sf_status s = sf_stats(ctx, k, read_input(input).c_str(), kinds.at(as), fmt, &out.handle);
    if (s != SF_OK) return report_failure(ctx, s, "--input");
    std::cout << out.str() << "\n";
    return kExitOk;
  }

  if (*poly) {
    auto routes = choices<sf_route>({{"ap", SF_ROUTE_AP}, {"exc-cyc", SF_ROUTE_EXC_CYC}, {"egf", SF_ROUTE_EGF}});
    Text out;
    sf_status s = sf_poly(ctx, n, k, which[0], routes.at(route), &out.handle);
    if (s != SF_OK) return report_failure(ctx, s, "--n");
    std::cout << out.str() << "\n";
    return kExitOk;
  }

  if (*gamma) {
    Text out;
    sf_status s = sf_gamma(ctx, n, k, which[0], by == "census" ? SF_GAMMA_CENSUS : SF_GAMMA_DECOMPOSITION, &out.handle);
    if (s != SF_OK) return report_failure(ctx, s, "--n");
    std::cout << out.str() << "\n";
    return kExitOk;
  }

  if (*map) {
    const std::string text = read_input(input);
    Text out;
    sf_status s = sf_map(ctx, name.c_str(), k, text.c_str(), x.has_value(), x.value_or(0),
                         map->count("--set") ? set.c_str() : nullptr, &out.handle);
    if (s != SF_OK) return report_failure(ctx, s, s == SF_ERR_ARGUMENT ? "--name" : "--input");
    if (fmt == SF_FORMAT_JSON) {
      std::string quoted;
      for (char c : out.str()) {
        if (c == '"' || c == '\\') quoted += '\\';
        quoted += c;
      }
      std::cout << "{\"name\":\"" << name << "\",\"output\":\"" << quoted << "\"}\n";
    } else {
      std::cout << out.str() << "\n";
    }
    return kExitOk;
  }

  std::string suite_list;
  for (const auto& s : suites) suite_list += (suite_list.empty() ? "" : ",") + s;
  sf_report_list* reports = nullptr;
  sf_status s = sf_verify(ctx, n_max, k_max, suite_list.c_str(), &reports);
  if (s != SF_OK) return report_failure(ctx, s, s == SF_ERR_ARGUMENT ? "--suite" : "--n-max");
  const std::size_t count = sf_report_count(reports);
  for (std::size_t i = 0; i < count; ++i)
    std::cout << (fmt == SF_FORMAT_JSON ? sf_report_json(reports, i) : sf_report_text(reports, i)) << "\n";
  const std::size_t failures = sf_report_failures(reports);
  if (fmt == SF_FORMAT_TEXT) std::cout << count << " reports, " << failures << " failed\n";
  sf_report_list_destroy(reports);
  return failures ? kExitIdentityFailure : kExitOk;
}
