#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "cobhamlab/json_io.hpp"
#include "helpers.hpp"

using namespace cobhamlab;
using nlohmann::json;
using testutil::wd;

TEST_CASE("substitution round trip") {
    json j = json::parse(R"({"alphabet": ["0", "1"], "rules": {"0": "01", "1": "0"}, "start": "0"})");
    Substitution s = substitution_from_json(j);
    CHECK(s.alphabet().size() == 2);
    CHECK(s.rule(0) == wd("01"));
    CHECK(s.rule(1) == wd("0"));
    CHECK(s.start() == 0);
    CHECK(substitution_from_json(substitution_to_json(s)).rule(0) == s.rule(0));
}

TEST_CASE("substitution with multi-character letter names uses arrays") {
    json j = json::parse(
        R"({"alphabet": ["aa", "bb"], "rules": {"aa": ["aa", "bb"], "bb": ["aa"]}, "start": "aa"})");
    Substitution s = substitution_from_json(j);
    CHECK(s.rule(0) == Word{0, 1});
    json back = substitution_to_json(s);
    CHECK(back["rules"]["aa"].is_array());
    CHECK(substitution_from_json(back).rule(1) == Word{0});
}

TEST_CASE("substitution schema violations carry locations") {
    json missing = json::parse(R"({"alphabet": ["0"], "start": "0"})");
    CHECK_THROWS_WITH_AS(substitution_from_json(missing), doctest::Contains("/rules"),
                         SchemaError);
    json bad_letter =
        json::parse(R"({"alphabet": ["0"], "rules": {"0": "01"}, "start": "0"})");
    CHECK_THROWS_AS(substitution_from_json(bad_letter), SchemaError);
    json bad_start =
        json::parse(R"({"alphabet": ["0"], "rules": {"0": "00"}, "start": "9"})");
    CHECK_THROWS_WITH_AS(substitution_from_json(bad_start), doctest::Contains("/start"),
                         SchemaError);
}

TEST_CASE("matrix round trip") {
    json j = json::parse(R"({"size": 2, "rows": [[2, 1], [1, 1]]})");
    IntMatrix m = matrix_from_json(j);
    CHECK(m.at(0, 0) == 2);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"size": 2, "rows": [[1, 2]]})")),
                    SchemaError);
}

TEST_CASE("expansion data round trip") {
    json j = json::parse(R"({"preperiod": [1, 1], "period": []})");
    ParryData p = parry_from_json(j);
    CHECK(p.preperiod() == std::vector<int>{1, 1});
    CHECK(p.finite());
    CHECK(parry_from_json(parry_to_json(p)) == p);
    CHECK_THROWS_AS(parry_from_json(json::parse(R"({"preperiod": [0], "period": []})")),
                    InadmissibleParryError);
}

TEST_CASE("system parsing") {
    NumerationSystem u = system_from_json(json::parse(R"({"parry": {"preperiod": [1, 1], "period": []}})"));
    CHECK(u.value(4) == 8);
    NumerationSystem v =
        system_from_json(json::parse(R"({"recurrence": [1, 1], "initial": [1, 2]})"));
    CHECK(v.value(4) == 8);
    CHECK_THROWS_AS(system_from_json(json::parse(R"({"base": "x"})")), SchemaError);
}

TEST_CASE("automaton round trip") {
    DigitDFA even = ap_recognizer(2, 0, NumerationSystem::base(2),
                                  ReadingOrder::MostSignificantFirst);
    json j = dfa_to_json(even);
    DigitDFA back = dfa_from_json(j);
    CHECK(back.same_language(even));
    CHECK(back.order() == even.order());
    json broken = j;
    broken["delta"][0][0] = 999;
    CHECK_THROWS_WITH_AS(dfa_from_json(broken), doctest::Contains("/delta"), SchemaError);
}

TEST_CASE("set specs") {
    IntegerSetSpec s = set_spec_from_json(
        json::parse(R"({"kind": "ap_union", "aps": [[5, 2]], "add": [7], "remove": [2]})"),
        nullptr);
    CHECK(s.contains(7));
    CHECK_FALSE(s.contains(2));
    CHECK(s.contains(12));
    IntegerSetSpec back = set_spec_from_json(set_spec_to_json(s), nullptr);
    for (unsigned long n = 0; n < 50; ++n) CHECK(back.contains(n) == s.contains(n));
    CHECK_THROWS_WITH_AS(set_spec_from_json(json::parse(R"({"kind": "nope"})"), nullptr),
                         doctest::Contains("/kind"), SchemaError);
}

TEST_CASE("reports serialize deterministically") {
    IntegerSetSpec set = IntegerSetSpec::ap_union({{{5, 2}}, {}, {}});
    CobhamReport r = cobham_experiment(set, ParryData({2}, {}), ParryData({1, 1}, {}));
    json a = cobham_report_to_json(r);
    json b = cobham_report_to_json(
        cobham_experiment(set, ParryData({2}, {}), ParryData({1, 1}, {})));
    CHECK(a.dump(2) == b.dump(2));
    CHECK(a["verdict"] == "consistent");
    CHECK(a["alpha"]["exact"] == true);
    CHECK(a["periodicity"]["period"] == 5);
    CHECK(a["dependence"]["status"] == "independent_up_to_bound");
}

TEST_CASE("interval and decomposition views") {
    AlgebraicInterval phi =
        AlgebraicInterval::largest_real_root(IntPoly::parse("x^2-x-1"));
    json j = interval_to_json(phi);
    CHECK(j["poly"] == "x^2-x-1");
    CHECK(j["decimal"].get<std::string>().substr(0, 7) == "1.61803");

    PrimitiveDecomposition d = primitive_decomposition(testutil::sigma_abc().incidence_matrix());
    json dj = decomposition_to_json(d, testutil::sigma_abc().alphabet());
    CHECK(dj["p"] == 1);
    CHECK(dj["q"] == 1);
    CHECK(dj["partition"][0] == json::array({"a"}));
    CHECK(dj["partition"][1] == json::array({"b", "c"}));
}
