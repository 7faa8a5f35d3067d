#include "doctest.h"
#include "hardy/io.hpp"
#include "support.hpp"

using namespace hardy;
using namespace testing_support;

namespace {
Series S(std::string_view s, std::size_t r) { return Series::parse(s, r); }
}  // namespace

TEST_CASE("spec and equation json round trip") {
    for (const auto& spec : {spec_A(), spec_B(), spec_C(), spec_D()}) {
        auto back = io::spec_from_json(io::spec_to_json(spec));
        CHECK(back.rank() == spec.rank());
        for (std::size_t k = 1; k <= spec.rank(); ++k) CHECK(back.theta(k) == spec.theta(k));
    }
    Gen g(3);
    for (int it = 0; it < 50; ++it) {
        auto F = g.diffpoly(2, 2, it % 3);
        CHECK(io::equation_from_json(io::equation_to_json(F), 2) == F);
    }
    CHECK_THROWS_AS(io::equation_from_json(nlohmann::json::parse(R"({"order":1,"derivation":0,"coefficients":[
        {"index":[0,1,2],"series":"1"}]})"), 1), DomainError);
}

TEST_CASE("outcome json round trip") {
    DiffPoly euler(1, 1, 1);
    euler.add(MultiIndex{0, 1}, S("1", 1));
    euler.add(MultiIndex{1, 0}, S("-2", 1));
    euler.add(MultiIndex{0, 0}, S("1*t1^1", 1));
    DiffPoly stab(1, 0, 0);
    stab.add(MultiIndex{2}, S("1", 1));
    stab.add(MultiIndex{1}, S("1*t1^1", 1));
    stab.add(MultiIndex{0}, S("1*t1^2", 1));
    for (const auto& P : {euler, stab})
        for (const auto& o : solve(P, spec_A())) {
            auto j = io::outcome_to_json(o);
            auto back = io::outcome_from_json(j, 1);
            CHECK(back.kind == o.kind);
            CHECK(back.prefix == o.prefix);
            CHECK(back.supportBound.str() == o.supportBound.str());
            CHECK(back.valuationTrace.size() == o.valuationTrace.size());
            CHECK(back.provenance.size() == o.provenance.size());
            CHECK(io::outcome_to_json(back) == j);
        }
}

TEST_CASE("constants json reports violations") {
    auto bad = DerivationSpec(3, {S("-1", 3), S("-1*t2^1", 3), S("-1*t1^1*t2^2*t3^-1", 3)});
    auto j = io::constants_to_json(bad);
    CHECK_FALSE(j.at("valid").get<bool>());
    bool hd2 = false;
    for (const auto& v : j.at("violations")) hd2 = hd2 || v.at("axiom") == "HD2";
    CHECK(hd2);
    auto ok = io::constants_to_json(spec_B());
    CHECK(ok.at("valid").get<bool>());
    CHECK(ok.at("k0") == 2);
}
