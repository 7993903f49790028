#include <doctest.h>

#include <string>

#include "arrbound/report.hpp"

using namespace arrbound;

namespace {

AnalysisResult analyze_builtin(const std::string& name, std::optional<Int> known = std::nullopt) {
    AnalyzeOptions opts;
    opts.known_b1 = known;
    return analyze(builtin(name), opts);
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("C^3 JSON report carries the full schema") {
    auto j = to_json(analyze_builtin("A3", 7));
    CHECK(j["arrangement"]["d"] == 6);
    CHECK(j["arrangement"]["ambient"] == 3);
    CHECK(j["arrangement"]["forms"].size() == 6);
    CHECK(j["flats"].size() == 7);
    for (const auto& f : j["flats"]) {
        CHECK(f["dim"] == 1);
        CHECK(f["d_L"].is_number_integer());
        CHECK(f["hyperplanes"].is_array());
    }
    CHECK(j["euler"]["chi_proj"] == 2);
    CHECK(j["euler"]["chi_fiber"] == 12);
    CHECK(j["b1"]["lower"] == 5);
    CHECK(j["b1"]["upper_degree"] == 9);
    CHECK(j["b1"]["upper_display"] == 9);
    CHECK(j["b1"]["upper_massey"] == 13);
    CHECK(j["b1"]["cdo"] == 2);
    CHECK(j["divisor"]["factored"] == "Phi_3(t)^2");
    CHECK(j["divisor"]["degree"] == 4);
    CHECK(j["divisor"]["expanded"] == nlohmann::json::array({1, 2, 3, 2, 1}));
    CHECK(j["per_eigenvalue"]["3"] == 2);
    CHECK(j["per_eigenvalue"]["2"] == 0);
    CHECK(j["monodromy_forced_trivial"] == false);
    CHECK(j["b2"]["lower"] == 16);
    CHECK(j["b2"]["upper"] == 20);
    CHECK(j["known"]["b1"] == 7);
    CHECK(j["known"]["slack"] == 2);
    CHECK(j["notes"].is_array());
    CHECK_FALSE(j.contains("b3"));
}

TEST_CASE("JSON schema holds for every corpus member") {
    for (const auto& e : corpus()) {
        AnalyzeOptions opts;
        opts.known_b1 = e.known_b1;
        opts.known_source = e.source;
        auto j = to_json(analyze(e.arrangement, opts));
        CAPTURE(e.name);
        for (const char* key : {"arrangement", "flats", "euler", "b1", "divisor", "per_eigenvalue",
                                "monodromy_forced_trivial", "b2", "notes", "verdict"})
            CHECK(j.contains(key));
        CHECK(j["arrangement"]["d"].is_number_integer());
        CHECK(j["arrangement"]["ambient"] == 3);
        CHECK(j["arrangement"]["forms"].is_array());
        for (const auto& f : j["flats"]) {
            CHECK(f["dim"].is_number_integer());
            CHECK(f["d_L"].is_number_integer());
            CHECK(f["hyperplanes"].is_array());
        }
        for (const char* key : {"lower", "upper_degree", "upper_display", "upper_massey", "cdo"})
            CHECK(j["b1"][key].is_number_integer());
        CHECK(j["euler"]["chi_proj"].is_number_integer());
        CHECK(j["euler"]["chi_fiber"].is_number_integer());
        CHECK(j["divisor"]["factored"].is_string());
        CHECK(j["divisor"]["expanded"].is_array());
        for (const auto& c : j["divisor"]["expanded"]) CHECK(c.is_number_integer());
        CHECK(j["divisor"]["degree"].is_number_integer());
        for (const auto& [order, bound] : j["per_eigenvalue"].items())
            CHECK(bound.is_number_integer());
        CHECK(j["monodromy_forced_trivial"].is_boolean());
        CHECK(j["b2"]["lower"].is_number_integer());
        CHECK(j["b2"]["upper"].is_number_integer());
        if (e.known_b1) {
            CHECK(j["known"]["b1"] == *e.known_b1);
            CHECK(j["known"]["slack"].is_number_integer());
        }
        for (const auto& n : j["notes"]) CHECK(n.is_string());
        // nothing in the schema is a float
        std::function<void(const nlohmann::json&)> no_floats = [&](const nlohmann::json& v) {
            CHECK_FALSE(v.is_number_float());
            if (v.is_object() || v.is_array())
                for (const auto& item : v) no_floats(item);
        };
        no_floats(j);
    }
}

TEST_CASE("lattice serialization carries keys, Mobius values, and containment edges") {
    auto lat = compute_lattice(builtin("boolean4"));
    auto j = lattice_to_json(lat);
    CHECK(j["ambient"] == 4);
    CHECK(j["d"] == 4);
    CHECK(j["flats"].size() == 10);  // six planes then four lines
    CHECK(j["has_center"] == true);
    CHECK(j["center_mobius"] == 1);
    // each line sits inside three of the six planes: twelve edges
    CHECK(j["contains"].size() == 12);
    int planes_seen = 0;
    for (const auto& f : j["flats"]) {
        if (f["dim"] == 2) {
            ++planes_seen;
            CHECK(f["p_L"] == 2);
            CHECK(f["mobius"] == 1);
            CHECK(f["key"].size() == 2);
        } else {
            CHECK(f["dim"] == 1);
            CHECK(f["mobius"] == -1);
            CHECK(f["direction"].size() == 4);
        }
    }
    CHECK(planes_seen == 6);
    // stable order: planes before lines
    for (size_t i = 1; i < j["flats"].size(); ++i)
        CHECK(j["flats"][i - 1]["dim"] >= j["flats"][i]["dim"]);
}

TEST_CASE("text and JSON reports agree on the numbers") {
    for (const char* name : {"A3", "B3", "pappus1", "pencil(5)"}) {
        auto res = analyze_builtin(name);
        auto j = to_json(res);
        auto text = to_text(res);
        CAPTURE(name);
        CHECK(contains(text, "d = " + j["arrangement"]["d"].dump()));
        CHECK(contains(text, "(divisor degree): " + j["b1"]["upper_degree"].dump()));
        CHECK(contains(text, "(display form):   " + j["b1"]["upper_display"].dump()));
        CHECK(contains(text, "(Massey):         " + j["b1"]["upper_massey"].dump()));
        CHECK(contains(text, "eigenspace: " + j["b1"]["cdo"].dump()));
        CHECK(contains(text, "chi(F) = " + j["euler"]["chi_fiber"].dump()));
        CHECK(contains(text, std::string(j["divisor"]["factored"])));
        CHECK(contains(text, "b2 range: [" + j["b2"]["lower"].dump() + ", " +
                                 j["b2"]["upper"].dump() + "]"));
        CHECK(contains(text, std::string(j["verdict"])));
    }
}

TEST_CASE("verdict strings") {
    auto b3 = analyze_builtin("B3", 8);
    CHECK(contains(b3.verdict, "forced trivial"));
    CHECK(contains(b3.verdict, "b1 = 8"));

    auto p1 = analyze_builtin("pappus1", 10);
    CHECK(contains(p1.verdict, "b1 in [8, 14]"));
    CHECK(contains(p1.verdict, "primitive-3rd-root eigenspace <= 3"));
    CHECK(contains(p1.verdict, "slack 4"));
    CHECK_FALSE(contains(p1.verdict, "inconclusive"));

    auto p2 = analyze_builtin("pappus2", 8);
    CHECK(contains(p2.verdict, "slack 6"));
    CHECK(contains(p2.verdict, "obstruction inconclusive"));
    CHECK(contains(to_text(analyze_builtin("pappus2", 8)), "obstruction inconclusive"));
}

TEST_CASE("C^4 report shape") {
    auto res = analyze_builtin("boolean4");
    auto j = to_json(res);
    CHECK(j["euler"]["chi_fiber"] == 0);
    CHECK(j["euler"]["chi_fiber_paper"] == 32);
    CHECK(j["b1"]["lower"] == 3);
    CHECK(j["b2"]["lower"] == 6);
    CHECK(j["b2"]["upper"] == 9);
    CHECK(j["b3"] == 7);
    CHECK(j["c4_terms"].size() == 4);
    bool flagged = false;
    for (const auto& n : j["notes"])
        if (contains(std::string(n), "disagrees")) flagged = true;
    CHECK(flagged);
    for (const auto& f : j["flats"])
        if (f["dim"] == 2) CHECK(f["p_L"] == 2);
    auto text = to_text(res);
    CHECK(contains(text, "b2(F) <= 9"));
    CHECK(contains(text, "b3(F) <= 7"));
    CHECK(contains(text, "disagrees"));
}

TEST_CASE("multi divisor shows up in the report when requested") {
    AnalyzeOptions opts;
    opts.mult = MultiSpec{{1, 2, 3}};
    auto res = analyze(builtin("boolean3"), opts);
    REQUIRE(res.multi_divisor);
    auto j = to_json(res);
    CHECK(j["multi"]["multiplicities"] == nlohmann::json::array({1, 2, 3}));
    CHECK(j["multi"]["divisor"]["degree"] == res.multi_divisor->degree());
    auto text = to_text(res);
    CHECK(contains(text, "multiplicities (1,2,3)"));
    CHECK(contains(text, res.multi_divisor->factored_string()));
}

TEST_CASE("corpus claims all pass on the shipped arrangements") {
    for (const auto& e : corpus()) {
        auto claims = check_corpus_claims(e);
        REQUIRE_FALSE(claims.empty());
        for (const auto& c : claims) {
            CAPTURE(c.entry);
            CAPTURE(c.claim);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("corrupting B3 makes its claims fail") {
    const CorpusEntry* b3 = find_corpus_entry("B3");
    REQUIRE(b3);
    Arrangement broken = b3->arrangement;
    broken.forms.pop_back();  // drop y+z
    auto claims = check_corpus_claims(*b3, broken);
    int failures = 0;
    for (const auto& c : claims) failures += c.pass ? 0 : 1;
    CHECK(failures > 0);
}

TEST_CASE("known-b1 notes carry the citation") {
    AnalyzeOptions opts;
    opts.known_b1 = 7;
    opts.known_source = find_corpus_entry("A3")->source;
    auto res = analyze(builtin("A3"), opts);
    bool cited = false;
    for (const auto& n : res.notes)
        if (contains(n, "Cohen-Suciu")) cited = true;
    CHECK(cited);
}
