#include "stirforest/stirforest.h"

#include "stirforest/bimap.hpp"
#include "stirforest/errors.hpp"
#include "stirforest/forest.hpp"
#include "stirforest/gfs.hpp"
#include "stirforest/oracle.hpp"
#include "stirforest/pipeline.hpp"
#include "stirforest/polyx.hpp"
#include "stirforest/stirling.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <new>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

struct sf_context {
  sf::Limits limits;
  std::string last_error;
};

struct sf_text {
  std::string value;
};

struct sf_cursor {
  sf_kind kind = SF_KIND_PERMS;
  sf_format format = SF_FORMAT_TEXT;
  sf_filter filter = SF_FILTER_NONE;
  std::uint64_t limit = 0;
  std::uint64_t emitted = 0;
  std::size_t next = 0;
  std::vector<std::vector<sf::Label>> words;
  std::vector<sf::Forest> forests;
  unsigned k = 1;
};

struct sf_report_list {
  std::vector<sf::IdentityReport> reports;
  std::vector<std::string> json;
  std::vector<std::string> text;
  std::size_t failures = 0;
};

namespace {

struct ArgumentError : sf::Error {
  using sf::Error::Error;
};

template <class Fn>
sf_status guarded(sf_context* ctx, Fn&& fn) {
  if (!ctx) return SF_ERR_ARGUMENT;
  auto fail = [&](sf_status s, const char* what) {
    ctx->last_error = what;
    return s;
  };
  try {
    sf_status s = fn();
    if (s == SF_OK || s == SF_DONE) ctx->last_error.clear();
    return s;
  } catch (const ArgumentError& e) {
    return fail(SF_ERR_ARGUMENT, e.what());
  } catch (const sf::ParseError& e) {
    return fail(SF_ERR_PARSE, e.what());
  } catch (const sf::DomainError& e) {
    return fail(SF_ERR_DOMAIN, e.what());
  } catch (const sf::LimitError& e) {
    return fail(SF_ERR_LIMIT, e.what());
  } catch (const sf::InternalError& e) {
    return fail(SF_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SF_ERR_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(SF_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw ArgumentError(message);
}

sf_status emit(std::string value, sf_text** out) {
  *out = new sf_text{std::move(value)};
  return SF_OK;
}

sf::Route to_route(sf_route r) {
  switch (r) {
    case SF_ROUTE_AP: return sf::Route::Ap;
    case SF_ROUTE_EXC_CYC: return sf::Route::ExcCyc;
    case SF_ROUTE_EGF: return sf::Route::Egf;
  }
  throw ArgumentError("unknown route");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string braces(const sf::LabelSet& s) { return "{" + sf::format_label_set(s) + "}"; }

std::string json_set(const sf::LabelSet& s) { return "[" + sf::format_label_set(s) + "]"; }

std::string json_bool(bool b) { return b ? "true" : "false"; }

// Ordered key/value record rendered as "key: value" lines or one JSON object.
class Record {
 public:
  void add(std::string key, std::string json, std::string text) {
    rows_.push_back({std::move(key), std::move(json), std::move(text)});
  }
  void add_uint(std::string key, unsigned long long v) {
    auto s = std::to_string(v);
    add(std::move(key), s, s);
  }
  void add_bool(std::string key, bool b) { add(std::move(key), json_bool(b), json_bool(b)); }
  void add_string(std::string key, const std::string& s) { add(std::move(key), sf::json_string(s), s); }
  void add_set(std::string key, const sf::LabelSet& s) { add(std::move(key), json_set(s), braces(s)); }

  std::string render(sf_format format) const {
    std::string out;
    if (format == SF_FORMAT_JSON) {
      out = "{";
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        out += sf::json_string(rows_[i].key) + ":" + rows_[i].json;
      }
      return out + "}";
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) out += '\n';
      out += rows_[i].key + ": " + rows_[i].text;
    }
    return out;
  }

 private:
  struct Row {
    std::string key, json, text;
  };
  std::vector<Row> rows_;
};

bool looks_like_forest(std::string_view text) {
  return std::any_of(text.begin(), text.end(),
                     [](char c) { return c == '[' || c == '|' || std::isspace(static_cast<unsigned char>(c)); });
}

std::string word_stats(const sf::KStirlingWord& w, sf_format format) {
  auto cls = sf::word_class(w);
  Record r;
  r.add_string("kind", "word");
  r.add_string("word", w.to_text());
  r.add_uint("k", w.k());
  r.add_uint("n", w.labels().size());
  r.add_uint("ap", sf::stat_ap(w));
  r.add_uint("lap", sf::stat_lap(w));
  r.add_bool("in_bar", cls.in_bar);
  r.add_bool("in_hat", !cls.in_bar);
  r.add_bool("in_tilde", cls.in_tilde);
  r.add_bool("starts_with_plateau", cls.starts_with_plateau);
  return r.render(format);
}

std::string forest_stats_text(const sf::Forest& f, sf_format format) {
  auto st = sf::forest_stats(f);
  auto sets = sf::label_sets(f);
  auto rem = sf::removable_labels(f);
  auto cls = sf::forest_class(f);
  Record r;
  r.add_string("kind", "forest");
  r.add_string("forest", sf::serialize_forest(f));
  r.add_uint("k", f.k);
  r.add_uint("n", sf::forest_size(f));
  r.add_uint("trees", f.trees.size());
  r.add_uint("lleaf", st.lleaf);
  r.add_uint("si", st.si);
  r.add_uint("oleaf", st.oleaf);
  r.add_uint("yleaf", st.yleaf);
  r.add_uint("oint", st.oint);
  r.add_uint("lint", st.lint);
  r.add_uint("rleaf", st.rleaf);
  r.add("lleaf_minus_si", std::to_string(static_cast<long>(st.lleaf) - static_cast<long>(st.si)),
        std::to_string(static_cast<long>(st.lleaf) - static_cast<long>(st.si)));
  r.add_bool("in_bar", cls.in_bar);
  r.add_bool("in_hat", !cls.in_bar);
  r.add_bool("in_star", cls.in_star);
  r.add_set("Oint", sets.oint);
  r.add_set("Oleaf", sets.oleaf);
  r.add_set("Yleaf", sets.yleaf);
  r.add_set("Si", sets.si);
  r.add_set("Oint_star", sets.oint_star);
  r.add_set("Si_star", sets.si_star);
  r.add_set("removable_old", rem.old_leaves);
  r.add_set("removable_young", rem.young_leaves);
  return r.render(format);
}

std::string gamma_json(std::size_t center, std::vector<sf::BigInt> gamma) {
  std::size_t width = center / 2 + 1;
  while (gamma.size() > width && gamma.back() == 0) gamma.pop_back();
  if (gamma.size() > width) throw sf::InternalError("gamma vector longer than its center allows");
  gamma.resize(width);
  return "{\"center\":" + std::to_string(center) + ",\"gamma\":" + sf::json_array(gamma) + "}";
}

sf::IntPolynomial parse_poly(const char* text) {
  require(text != nullptr, "polynomial text is null");
  return sf::IntPolynomial::parse(text);
}

sf::MarkedForest marked_input(std::string_view text, unsigned k, const char* set) {
  auto mf = sf::parse_marked(text, k);
  if (set && *set) {
    require(mf.marks.empty(), "marks given both in the input and by --set");
    auto marks = sf::parse_label_set(set);
    auto labels = sf::forest_labels(mf.forest);
    for (sf::Label m : marks)
      if (!std::binary_search(labels.begin(), labels.end(), m))
        throw sf::DomainError("mark " + std::to_string(m) + " is not a label of the forest");
    mf.marks = std::move(marks);
  }
  return mf;
}

std::string apply_map(std::string_view name, unsigned k, std::string_view input, int has_x, sf::Label x,
                      const char* set) {
  auto word = [&] { return sf::KStirlingWord::parse(input, k); };
  auto forest = [&] { return sf::parse_forest(input, k); };
  auto need_x = [&] { require(has_x, "this map needs --x"); };

  if (name == "xi") return sf::serialize_forest(sf::xi(word()));
  if (name == "xi-inv") return sf::xi_inv(forest()).to_text();
  if (name == "chi") return sf::serialize_tree(sf::chi(word()));
  if (name == "chi-inv") return sf::chi_inv(sf::parse_tree(input, k), k).to_text();
  if (name == "zeta") return sf::serialize_forest(sf::zeta(word()));
  if (name == "zeta-inv") return sf::zeta_inv(forest()).to_text();
  if (name == "phi") {
    need_x();
    return sf::serialize_forest(sf::phi_set(forest(), {x}));
  }
  if (name == "phi-set") {
    require(set != nullptr, "phi-set needs --set");
    return sf::serialize_forest(sf::phi_set(forest(), sf::parse_label_set(set)));
  }
  if (name == "psi") {
    need_x();
    return sf::serialize_forest(sf::psi(forest(), x));
  }
  if (name == "theta") return sf::serialize_marked(sf::theta(marked_input(input, k, set)));
  if (name == "theta-prime") return sf::serialize_marked(sf::theta_prime(marked_input(input, k, set)));
  if (name == "alpha") return sf::serialize_marked(sf::alpha_step(marked_input(input, k, set)));
  if (name == "beta") return sf::serialize_marked(sf::beta_step(marked_input(input, k, set)));
  if (name == "gamma") return sf::serialize_forest(sf::gamma_map(marked_input(input, k, set)));
  if (name == "gamma-prime") return sf::serialize_marked(sf::gamma_prime_map(forest()));
  throw ArgumentError("unknown map '" + std::string(name) + "'");
}

bool keep_word(std::span<const sf::Label> w, unsigned k, sf_filter filter) {
  if (filter == SF_FILTER_NONE) return true;
  auto c = sf::word_class(w, k);
  switch (filter) {
    case SF_FILTER_BAR: return c.in_bar;
    case SF_FILTER_HAT: return !c.in_bar;
    case SF_FILTER_TILDE: return c.in_tilde;
    default: return false;
  }
}

bool keep_forest(const sf::Forest& f, sf_filter filter) {
  switch (filter) {
    case SF_FILTER_NONE: return true;
    case SF_FILTER_BAR: return sf::forest_in_bar(f);
    case SF_FILTER_HAT: return !sf::forest_in_bar(f);
    case SF_FILTER_TILDE: return f.trees.size() == 1;
    case SF_FILTER_STAR: return sf::forest_class(f).in_star;
  }
  return false;
}

std::vector<sf::Suite> parse_suites(const char* suites) {
  if (!suites || !*suites) return sf::all_suites();
  std::vector<sf::Suite> out;
  std::string_view rest = suites;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto item = trim(rest.substr(0, comma));
    if (!item.empty()) {
      try {
        out.push_back(sf::parse_suite(item));
      } catch (const sf::DomainError& e) {
        throw ArgumentError(e.what());
      }
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  require(!out.empty(), "no suite named");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

extern "C" {

const char* sf_version(void) { return "1.0.0"; }

const char* sf_status_name(sf_status status) {
  switch (status) {
    case SF_OK: return "ok";
    case SF_DONE: return "done";
    case SF_ERR_ARGUMENT: return "argument error";
    case SF_ERR_PARSE: return "parse error";
    case SF_ERR_DOMAIN: return "domain error";
    case SF_ERR_LIMIT: return "limit exceeded";
    case SF_ERR_INTERNAL: return "internal error";
    case SF_ERR_MEMORY: return "out of memory";
  }
  return "unknown status";
}

sf_status sf_context_create(sf_context** out) {
  if (!out) return SF_ERR_ARGUMENT;
  *out = new (std::nothrow) sf_context{};
  return *out ? SF_OK : SF_ERR_MEMORY;
}

void sf_context_destroy(sf_context* ctx) { delete ctx; }

sf_status sf_context_set_limits(sf_context* ctx, uint64_t max_objects, unsigned max_perm_n) {
  return guarded(ctx, [&] {
    if (max_objects) ctx->limits.max_objects = max_objects;
    if (max_perm_n) ctx->limits.max_perm_n = max_perm_n;
    return SF_OK;
  });
}

const char* sf_last_error(const sf_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char* sf_text_data(const sf_text* text) { return text ? text->value.c_str() : ""; }
size_t sf_text_size(const sf_text* text) { return text ? text->value.size() : 0; }
void sf_text_destroy(sf_text* text) { delete text; }

sf_status sf_poly(sf_context* ctx, unsigned n, unsigned k, char which, sf_route route, sf_text** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    require(k >= 1, "k must be positive");
    require(which == 'A' || which == 'a' || which == 'b' || which == 'c', "which must be one of A, a, b, c");
    return emit(sf::part_polynomial(which, n, k, to_route(route), ctx->limits).to_text(), out);
  });
}

sf_status sf_gamma(sf_context* ctx, unsigned n, unsigned k, char which, sf_gamma_by by, sf_text** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    require(k >= 1, "k must be positive");
    require(which == 'a' || which == 'b' || which == 'c', "which must be one of a, b, c");
    std::size_t center = sf::part_center(which, n);
    std::vector<sf::BigInt> gamma;
    if (by == SF_GAMMA_CENSUS) {
      if (which == 'c') {
        gamma = sf::gamma_census_tilde(n, k, ctx->limits);
      } else {
        auto census = sf::gamma_census_bar_hat(n, k, ctx->limits);
        gamma = which == 'a' ? census.gamma_bar : census.gamma_hat;
      }
    } else {
      if (which == 'c' && n < 2) throw sf::DomainError("the tree polynomial needs n >= 2");
      gamma = sf::gamma_expand(sf::part_polynomial(which, n, k, sf::Route::Egf, ctx->limits), center).gamma;
    }
    return emit(gamma_json(center, std::move(gamma)), out);
  });
}

sf_status sf_distribution(sf_context* ctx, const char* family, const char* statistic, unsigned n, unsigned k,
                          sf_text** out) {
  return guarded(ctx, [&] {
    require(out && family && statistic, "null argument");
    require(k >= 1, "k must be positive");
    sf::Family fam;
    sf::Statistic stat;
    try {
      fam = sf::parse_family(family);
      stat = sf::parse_statistic(statistic);
    } catch (const sf::DomainError& e) {
      throw ArgumentError(e.what());
    }
    return emit(sf::distribution(fam, stat, n, k, ctx->limits).to_text(), out);
  });
}

sf_status sf_shape(sf_context* ctx, const char* poly, size_t center, sf_text** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    auto s = sf::shape_properties(parse_poly(poly), center);
    return emit("{\"symmetric\":" + json_bool(s.symmetric) + ",\"unimodal\":" + json_bool(s.unimodal) +
                    ",\"alternating_increasing\":" + json_bool(s.alternating_increasing) +
                    ",\"gamma_positive\":" + json_bool(s.gamma_positive) + "}",
                out);
  });
}

sf_status sf_decompose(sf_context* ctx, const char* poly, size_t center, sf_text** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    auto d = sf::symmetric_decompose(parse_poly(poly), center);
    return emit("{\"center\":" + std::to_string(d.center) + ",\"a\":" + d.a.to_text() + ",\"b\":" + d.b.to_text() +
                    "}",
                out);
  });
}

sf_status sf_gamma_expand(sf_context* ctx, const char* poly, size_t center, sf_text** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    auto g = sf::gamma_expand(parse_poly(poly), center);
    return emit("{\"center\":" + std::to_string(g.center) + ",\"gamma\":" + sf::json_array(g.gamma) + "}", out);
  });
}

sf_status sf_stats(sf_context* ctx, unsigned k, const char* input, sf_input_kind as, sf_format format,
                   sf_text** out) {
  return guarded(ctx, [&] {
    require(out && input, "null argument");
    require(k >= 1, "k must be positive");
    auto text = trim(input);
    sf_input_kind kind = as;
    if (kind == SF_INPUT_AUTO) {
      kind = SF_INPUT_FOREST;
      if (!looks_like_forest(text)) {
        try {
          (void)sf::KStirlingWord::parse(text, k);
          kind = SF_INPUT_WORD;
        } catch (const sf::Error&) {
        }
      }
    }
    if (kind == SF_INPUT_WORD) return emit(word_stats(sf::KStirlingWord::parse(text, k), format), out);
    return emit(forest_stats_text(sf::parse_forest(text, k), format), out);
  });
}

sf_status sf_map(sf_context* ctx, const char* name, unsigned k, const char* input, int has_x, int32_t x,
                 const char* set, sf_text** out) {
  return guarded(ctx, [&] {
    require(out && name && input, "null argument");
    require(k >= 1, "k must be positive");
    return emit(apply_map(name, k, trim(input), has_x, x, set), out);
  });
}

sf_status sf_enumerate_open(sf_context* ctx, unsigned n, unsigned k, sf_kind kind, sf_filter filter, uint64_t limit,
                            sf_format format, sf_cursor** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    require(k >= 1, "k must be positive");
    require(!(kind == SF_KIND_PERMS && filter == SF_FILTER_STAR), "the star filter applies to forests only");
    auto cursor = std::make_unique<sf_cursor>();
    cursor->kind = kind;
    cursor->format = format;
    cursor->filter = filter;
    cursor->limit = limit;
    cursor->k = k;
    if (kind == SF_KIND_PERMS) {
      sf::for_each_k_stirling(
          n, k,
          [&](std::span<const sf::Label> w) {
            if (keep_word(w, k, filter)) cursor->words.emplace_back(w.begin(), w.end());
          },
          ctx->limits);
    } else {
      cursor->forests = sf::enumerate_forests(n, k, ctx->limits);
      std::erase_if(cursor->forests, [&](const sf::Forest& f) { return !keep_forest(f, filter); });
    }
    *out = cursor.release();
    return SF_OK;
  });
}

sf_status sf_enumerate_next(sf_cursor* cursor, sf_text** out) {
  if (!cursor || !out) return SF_ERR_ARGUMENT;
  if (cursor->limit && cursor->emitted >= cursor->limit) return SF_DONE;
  try {
    std::string value;
    if (cursor->kind == SF_KIND_PERMS) {
      if (cursor->next >= cursor->words.size()) return SF_DONE;
      auto text = sf::format_word(cursor->words[cursor->next++]);
      value = cursor->format == SF_FORMAT_JSON ? "{\"word\":" + sf::json_string(text) + "}" : text;
    } else {
      if (cursor->next >= cursor->forests.size()) return SF_DONE;
      const auto& f = cursor->forests[cursor->next++];
      auto text = sf::serialize_forest(f);
      value = cursor->format == SF_FORMAT_JSON
                  ? "{\"forest\":" + sf::json_string(text) + ",\"trees\":" + sf::forest_to_json(f) + "}"
                  : text;
    }
    ++cursor->emitted;
    *out = new sf_text{std::move(value)};
    return SF_OK;
  } catch (const std::bad_alloc&) {
    return SF_ERR_MEMORY;
  }
}

void sf_enumerate_close(sf_cursor* cursor) { delete cursor; }

sf_status sf_verify(sf_context* ctx, unsigned n_max, unsigned k_max, const char* suites, sf_report_list** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    auto list = std::make_unique<sf_report_list>();
    list->reports = sf::run_suite(n_max, k_max, parse_suites(suites), ctx->limits);
    for (const auto& r : list->reports) {
      list->json.push_back(sf::to_json(r));
      list->text.push_back(sf::to_text(r));
      list->failures += !r.pass;
    }
    *out = list.release();
    return SF_OK;
  });
}

size_t sf_report_count(const sf_report_list* list) { return list ? list->reports.size() : 0; }
size_t sf_report_failures(const sf_report_list* list) { return list ? list->failures : 0; }

int sf_report_passed(const sf_report_list* list, size_t index) {
  return list && index < list->reports.size() && list->reports[index].pass;
}

const char* sf_report_json(const sf_report_list* list, size_t index) {
  return list && index < list->json.size() ? list->json[index].c_str() : nullptr;
}

const char* sf_report_text(const sf_report_list* list, size_t index) {
  return list && index < list->text.size() ? list->text[index].c_str() : nullptr;
}

void sf_report_list_destroy(sf_report_list* list) { delete list; }

}  // extern "C"
