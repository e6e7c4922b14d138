#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>

#include "nalen/nalen.h"

using json = nlohmann::json;

namespace {

struct AlgebraHandle {
  nalen_algebra* p = nullptr;
  ~AlgebraHandle() { nalen_algebra_free(p); }
};

AlgebraHandle example(const std::string& request) {
  AlgebraHandle h;
  REQUIRE(nalen_algebra_example(request.c_str(), &h.p) == NALEN_OK);
  return h;
}

json call(int (*f)(const nalen_algebra*, const char*, char**), const nalen_algebra* a, const std::string& opts) {
  char* out = nullptr;
  int st = f(a, opts.c_str(), &out);
  REQUIRE_MESSAGE(st == NALEN_OK, nalen_last_error());
  json j = json::parse(out);
  nalen_string_free(out);
  return j;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("status names and version") {
    CHECK(std::string(nalen_status_name(NALEN_OK)) == "ok");
    CHECK(std::string(nalen_status_name(NALEN_PARSE_ERROR)) == "ParseError");
    CHECK(std::string(nalen_status_name(NALEN_ALREADY_UNITAL)) == "AlreadyUnital");
    CHECK(std::string(nalen_status_name(42)) == "unknown_error");
    CHECK(std::string(nalen_version()).size() > 0);
  }

  TEST_CASE("print and parse round trip") {
    AlgebraHandle a = example(R"j({"name": "aflex"})j");
    size_t dim = 0;
    REQUIRE(nalen_algebra_dim(a.p, &dim) == NALEN_OK);
    CHECK(dim == 5);
    char* text = nullptr;
    REQUIRE(nalen_algebra_print(a.p, &text) == NALEN_OK);
    AlgebraHandle b;
    CHECK(nalen_algebra_parse(text, &b.p) == NALEN_OK);
    nalen_string_free(text);
    int eq = 0;
    REQUIRE(nalen_algebra_equal(a.p, b.p, &eq) == NALEN_OK);
    CHECK(eq == 1);
  }

  TEST_CASE("errors carry status and message") {
    AlgebraHandle h;
    CHECK(nalen_algebra_parse("field gf 4\ndim 2\n", &h.p) == NALEN_PARSE_ERROR);
    CHECK(h.p == nullptr);
    CHECK(std::string(nalen_last_error()).find("line 1") != std::string::npos);
    CHECK(nalen_algebra_example(R"j({"name": "nope"})j", &h.p) != NALEN_OK);
    CHECK(nalen_algebra_load("/nonexistent/file.alg", &h.p) != NALEN_OK);
    size_t dim = 0;
    CHECK(nalen_algebra_dim(nullptr, &dim) == NALEN_INVALID_ARGUMENT);

    AlgebraHandle spin = example(R"j({"name": "spin", "n": 2})j");
    CHECK(nalen_algebra_hull(spin.p, &h.p) == NALEN_ALREADY_UNITAL);
    char* out = nullptr;
    CHECK(nalen_canonical(nullptr, R"j({"word": "1", "variant": "alt"})j", &out) == NALEN_WORD_TOO_SHORT);
    CHECK(nalen_canonical(nullptr, R"j({"word": "((1 2) (3 4))"})j", &out) == NALEN_NOT_RESTRICTED_FORM);
    CHECK(out == nullptr);
    AlgebraHandle chain = example(R"j({"name": "nil3"})j");
    CHECK(nalen_exact_length(chain.p, nullptr, &out) == NALEN_NOT_FINITE_FIELD);
    uint64_t v = 0;
    CHECK(nalen_formula("alt_min_dim", 1, 0, &v) == NALEN_DOMAIN_ERROR);
    CHECK(nalen_formula("nope", 1, 0, &v) == NALEN_INVALID_ARGUMENT);
  }

  TEST_CASE("classification report") {
    AlgebraHandle a = example(R"j({"name": "aflex"})j");
    json j = call(nalen_classify, a.p, R"j({"seed": 7})j");
    CHECK(j["command"] == "classify");
    CHECK(j["verdicts"]["descendingly_flexible"]["verdict"] == "holds-exhaustive");
    const json& da = j["verdicts"]["descendingly_alternative"];
    CHECK(da["verdict"] == "fails");
    CHECK(da["witness"]["relation"] == "desc-alternative-pair");
    CHECK(da["witness"]["instance"] == "e1(e1 e2)");
    CHECK(da["witness"]["replayed"] == true);
    CHECK(j["falsified"] == false);
  }

  TEST_CASE("length reports") {
    AlgebraHandle z = example(R"j({"name": "z2n", "n": 2})j");
    json d = call(nalen_diffseq, z.p, R"j({"set": "2,3"})j");
    CHECK(d["sequence"]["d"] == json::array({1, 2, 1}));
    CHECK(d["sequence"]["length"] == 2);
    json e = call(nalen_exact_length, z.p, R"j({"threads": 2})j");
    CHECK(e["length"] == 2);
    json s = call(nalen_search, z.p, R"j({"trials": 16, "seed": 3})j");
    CHECK(s["trials"] == 16);
    CHECK(s["lower_bound"].is_number());
    CHECK(s["lower_bound"].get<int>() <= 2);
    char* out = nullptr;
    REQUIRE(nalen_infer_unity(z.p, &out) == NALEN_OK);
    json u = json::parse(out);
    nalen_string_free(out);
    CHECK(u["matches_declared"] == true);
  }

  TEST_CASE("bounds and canonical reports") {
    AlgebraHandle a = example(R"j({"name": "aalt"})j");
    json b = call(nalen_bounds, a.p, "");
    CHECK(b["algebra_length"] == 3);
    CHECK(b["passed"] == true);
    CHECK(b["entries"].size() > 0);
    json c = call(nalen_canonical, a.p, R"j({"word": "(1 (2 1))", "variant": "alt", "set": "1,2"})j");
    CHECK(c["verified"] == true);
    CHECK(c["canonical"]["variant"] == "alt-two-block");
    json f = call(nalen_canonical, nullptr, R"j({"word": "((1 2) 3)", "variant": "flex"})j");
    CHECK(f["canonical"].contains("shape"));
    CHECK(!f.contains("verified"));
  }

  TEST_CASE("formulas") {
    uint64_t v = 0;
    REQUIRE(nalen_formula("alt_min_dim", 3, 0, &v) == NALEN_OK);
    CHECK(v == 5);
    REQUIRE(nalen_formula("flex_max_length", 12, 0, &v) == NALEN_OK);
    CHECK(v == 5);
    REQUIRE(nalen_formula("alt_word_dim", 3, 1, &v) == NALEN_OK);
    CHECK(v == 5);
  }
}
