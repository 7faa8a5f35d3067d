#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "hardy/c_api.h"
#include "json.hpp"

using nlohmann::json;

namespace {
// Takes ownership of a library string.
std::string take(char* s) {
    std::string out = s ? s : "";
    hardy_string_free(s);
    return out;
}

const char* kSpecA = R"({"rank": 1, "log_derivatives": ["-1*t1^1"]})";
const char* kEuler = R"({"order": 1, "derivation": 1, "coefficients": [
    {"index": [0, 1], "series": "1"}, {"index": [1, 0], "series": "-2"}, {"index": [0, 0], "series": "1*t1^1"}]})";
}  // namespace

TEST_CASE("series handles and error reporting") {
    hardy_series* s = nullptr;
    REQUIRE(hardy_series_parse("1*t1^1 + 3*t1^2", 1, &s) == HARDY_OK);
    char* txt = nullptr;
    REQUIRE(hardy_series_str(s, &txt) == HARDY_OK);
    CHECK(take(txt) == "1*t1^1 + 3*t1^2");
    REQUIRE(hardy_series_valuation(s, &txt) == HARDY_OK);
    CHECK(take(txt) == "(1)");
    hardy_series* t = nullptr;
    REQUIRE(hardy_series_truncate(s, "(2)", &t) == HARDY_OK);
    REQUIRE(hardy_series_str(t, &txt) == HARDY_OK);
    CHECK(take(txt) == "1*t1^1 + O((2))");
    hardy_series_free(t);
    hardy_series_free(s);

    hardy_series* bad = nullptr;
    CHECK(hardy_series_parse("1*t1^", 1, &bad) == HARDY_E_PARSE);
    CHECK(bad == nullptr);
    CHECK(std::string(hardy_what()).size() > 0);
    CHECK(hardy_series_parse(nullptr, 1, &bad) == HARDY_E_ARG);
    CHECK(std::string(hardy_version()).size() > 0);
}

TEST_CASE("spec validation through the C API") {
    hardy_spec* spec = nullptr;
    REQUIRE(hardy_spec_from_json(kSpecA, &spec) == HARDY_OK);
    CHECK(hardy_spec_rank(spec) == 1);
    char* rep = nullptr;
    REQUIRE(hardy_spec_validate(spec, &rep) == HARDY_OK);
    CHECK(json::parse(take(rep)).at("valid") == true);
    hardy_spec_free(spec);

    const char* literal = R"({"rank": 3, "log_derivatives": ["-1", "-1*t2^1", "-1*t1^1*t2^2*t3^-1"]})";
    REQUIRE(hardy_spec_from_json(literal, &spec) == HARDY_OK);
    CHECK(hardy_spec_validate(spec, &rep) == HARDY_E_DOMAIN);
    auto j = json::parse(take(rep));
    CHECK(j.at("valid") == false);
    hardy_spec_free(spec);
}

TEST_CASE("derive, evaluate and solve through the C API") {
    hardy_spec* spec = nullptr;
    REQUIRE(hardy_spec_from_json(kSpecA, &spec) == HARDY_OK);
    hardy_series* y = nullptr;
    REQUIRE(hardy_series_parse("1*t1^1", 1, &y) == HARDY_OK);
    hardy_series* d = nullptr;
    REQUIRE(hardy_derive(spec, y, 0, 1, &d) == HARDY_OK);
    char* txt = nullptr;
    REQUIRE(hardy_series_str(d, &txt) == HARDY_OK);
    CHECK(take(txt) == "-1*t1^2");
    hardy_series_free(d);

    hardy_equation* e = nullptr;
    REQUIRE(hardy_equation_from_json(spec, kEuler, &e) == HARDY_OK);
    hardy_series* v = nullptr;
    REQUIRE(hardy_eval(spec, e, y, &v) == HARDY_OK);
    REQUIRE(hardy_series_valuation(v, &txt) == HARDY_OK);
    CHECK(take(txt) == "inf");
    hardy_series_free(v);

    char* ind = nullptr;
    REQUIRE(hardy_indicial(e, &ind) == HARDY_OK);
    CHECK(take(ind).find("2") != std::string::npos);

    char* outs = nullptr;
    REQUIRE(hardy_solve(spec, e, R"({"max_terms": 4, "resonance_policy": "zero"})", &outs) == HARDY_OK);
    auto j = json::parse(take(outs));
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("variant") == "SolutionPrefix");
    CHECK(j[0].at("prefix") == "1*t1^1");

    char* R = nullptr;
    REQUIRE(hardy_support_bound(spec, j.dump().c_str(), 1, &R) == HARDY_OK);
    auto rj = json::parse(take(R));
    CHECK(rj.at("rank") == 1);

    CHECK(hardy_solve(spec, e, R"({"resonance_policy": "sometimes"})", &outs) == HARDY_E_PARSE);
    CHECK(hardy_solve(spec, e, "{not json", &outs) == HARDY_E_PARSE);

    hardy_equation* c = nullptr;
    char* bound = nullptr;
    REQUIRE(hardy_conjugate_add(spec, e, y, &c, &bound) == HARDY_OK);
    CHECK(json::parse(take(bound)).contains("cosets"));
    char* cj = nullptr;
    REQUIRE(hardy_equation_to_json(c, &cj) == HARDY_OK);
    CHECK(json::parse(take(cj)).at("coefficients").size() == 2);
    hardy_equation_free(c);
    CHECK(hardy_change_derivation(spec, e, 1, &c, nullptr) == HARDY_OK);
    hardy_equation_free(c);

    hardy_equation_free(e);
    hardy_series_free(y);
    hardy_spec_free(spec);
}

TEST_CASE("grid sets and q table through the C API") {
    int m = -5;
    REQUIRE(hardy_gridset_member("{ ((0); (3), (5)) } exact", "(7)", 10000, &m) == HARDY_OK);
    CHECK(m == 0);
    REQUIRE(hardy_gridset_member("{ ((0); (3), (5)) } exact", "(8)", 10000, &m) == HARDY_OK);
    CHECK(m == 1);
    char* out = nullptr;
    REQUIRE(hardy_gridset_enumerate("{ ((0); (3), (5)) } exact", "(12)", 100, &out) == HARDY_OK);
    CHECK(json::parse(take(out)).size() == 8);
    CHECK(hardy_gridset_enumerate("{ ((0,0); (0,1)) } exact", "(1,0)", 10, &out) == HARDY_E_DOMAIN);
    REQUIRE(hardy_gridset_translate("{ ((0); (3), (5)) } exact", "(7)", 10000, &out) == HARDY_OK);
    CHECK(json::parse(take(out)).contains("cosets"));
    REQUIRE(hardy_qtable(4, &out) == HARDY_OK);
    CHECK(take(out).find("4*m*D^2m + 3*(Dm)^2") != std::string::npos);
    CHECK(hardy_qtable(0, &out) == HARDY_E_ARG);
}
