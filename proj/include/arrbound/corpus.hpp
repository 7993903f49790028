#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrbound/arrangement.hpp"
#include "arrbound/bounds_c3.hpp"
#include "arrbound/lattice.hpp"

namespace arrbound {

// A regression entry: a classical arrangement together with the published
// first Betti number of its Milnor fiber, which this tool can bound but not
// compute.  Known values are cited constants, used only for slack reporting.
struct CorpusEntry {
    std::string name;
    Arrangement arrangement;
    std::optional<Int> known_b1;
    std::map<int, Int> known_eigen;  // eigenvalue order -> dimension of each eigenspace
    std::string source;
};

inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        const std::string cs = "Cohen-Suciu, J. London Math. Soc. 51 (1995), via Fox calculus";
        std::vector<CorpusEntry> v;
        v.push_back({"B3", builtin("B3"), 8, {}, cs});
        v.push_back({"ex52", builtin("ex52"), 5, {}, cs});
        v.push_back({"A3", builtin("A3"), 7, {{3, 1}}, cs});
        v.push_back({"pappus1", builtin("pappus1"), 10, {{3, 1}}, cs});
        v.push_back({"pappus2", builtin("pappus2"), 8, {}, cs});
        return v;
    }();
    return entries;
}

inline const CorpusEntry* find_corpus_entry(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return &e;
    return nullptr;
}

struct ClaimResult {
    std::string entry;
    std::string claim;
    std::string detail;
    bool pass = false;
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (int x : v) {
        if (!s.empty()) s += ",";
        s += std::to_string(x);
    }
    return "{" + s + "}";
}

inline bool all_components_have(const FlatLattice& lat, const std::vector<int>& mults) {
    for (int h = 0; h < lat.d; ++h)
        if (lat.multiplicities_in_hyperplane(h) != mults) return false;
    return true;
}

}  // namespace detail

// Check every machine-checkable claim attached to a corpus entry against a
// given arrangement (normally the entry's own, but tests may substitute a
// corrupted one).
inline std::vector<ClaimResult> check_corpus_claims(const CorpusEntry& e, const Arrangement& arr) {
    std::vector<ClaimResult> out;
    auto add = [&](const std::string& claim, bool pass, const std::string& detail) {
        out.push_back({e.name, claim, detail, pass});
    };
    FlatLattice lat = compute_lattice(arr);
    BoundsReport r = analyze_c3(lat, e.known_b1);

    auto mult_claim = [&](int h, std::vector<int> want, const std::string& where) {
        auto got = lat.multiplicities_in_hyperplane(h);
        add("1-flat multiplicities on " + where + " are " + detail::join_ints(want), got == want,
            "got " + detail::join_ints(got));
    };

    if (e.name == "B3") {
        mult_claim(0, {4, 4, 2, 2}, "x=0");
        add("divisor bound on p(t) is 1", r.divisor.is_one(), "got " + r.divisor.factored_string());
        add("b1 forced to d-1 = 8", r.b1_lower == 8 && r.b1_upper_degree == 8 && r.b1_upper_display == 8,
            "bounds [" + std::to_string(r.b1_lower) + ", " + std::to_string(r.b1_upper_degree) + "]");
        add("known b1 = 8 matches the forced value", r.known_b1 && r.slack && *r.slack == 0,
            "slack " + (r.slack ? std::to_string(*r.slack) : std::string("n/a")));
    } else if (e.name == "ex52") {
        mult_claim(1, {4, 2, 2}, "y=0");
        mult_claim(2, {3, 2, 2, 2}, "z=0");
        add("divisor bound on p(t) is 1", r.divisor.is_one(), "got " + r.divisor.factored_string());
        add("b1 forced to d-1 = 5", r.b1_upper_degree == 5 && r.monodromy_forced_trivial,
            "upper " + std::to_string(r.b1_upper_degree));
        add("CDO eigenspace bound is 1 (strictly weaker)", r.cdo_value == 1,
            "got " + std::to_string(r.cdo_value));
    } else if (e.name == "A3") {
        bool all = detail::all_components_have(lat, {3, 3, 2});
        add("1-flat multiplicities are 3,3,2 in every component", all, "");
        add("divisor bound is Phi_3(t)^2", r.divisor == CycloPoly::phi(3, 2),
            "got " + r.divisor.factored_string());
        add("b1 <= 9", r.b1_upper_degree == 9 && r.b1_upper_display == 9,
            "upper " + std::to_string(r.b1_upper_degree));
        add("each eigenspace of order 3 has dimension <= 2", r.per_eigenvalue.at(3) == 2,
            "got " + std::to_string(r.per_eigenvalue.at(3)));
        add("known b1 = 7 within bounds, slack 2",
            r.known_b1 && *r.known_b1 >= r.b1_lower && *r.known_b1 <= r.b1_upper_degree && r.slack &&
                *r.slack == 2,
            "slack " + (r.slack ? std::to_string(*r.slack) : std::string("n/a")));
    } else if (e.name == "pappus1") {
        bool all = detail::all_components_have(lat, {3, 3, 3, 2, 2});
        add("1-flat multiplicities are 3,3,3,2,2 in every component", all, "");
        add("b1 <= 14", r.b1_upper_degree == 14 && r.b1_upper_display == 14,
            "upper " + std::to_string(r.b1_upper_degree));
        add("each eigenspace of order 3 has dimension <= 3", r.per_eigenvalue.at(3) == 3,
            "got " + std::to_string(r.per_eigenvalue.at(3)));
        add("known b1 = 10 within bounds, slack 4",
            r.known_b1 && *r.known_b1 <= r.b1_upper_degree && r.slack && *r.slack == 4,
            "slack " + (r.slack ? std::to_string(*r.slack) : std::string("n/a")));
    }
    for (const auto& [order, dim] : e.known_eigen) {
        auto it = r.per_eigenvalue.find(order);
        bool within = it != r.per_eigenvalue.end() && dim <= it->second;
        add("cited order-" + std::to_string(order) + " eigenspace dimension " + std::to_string(dim) +
                " respects the computed bound",
            within,
            it == r.per_eigenvalue.end() ? "order not in bound table"
                                         : "bound " + std::to_string(it->second));
    }
    if (e.name == "pappus2") {
        bool all = detail::all_components_have(lat, {3, 3, 3, 2, 2});
        add("1-flat multiplicities are 3,3,3,2,2 in every component", all, "");
        add("b1 <= 14 although the true value is 8", r.b1_upper_degree == 14,
            "upper " + std::to_string(r.b1_upper_degree));
        add("divisor bound does not force trivial monodromy", !r.monodromy_forced_trivial,
            "divisor " + r.divisor.factored_string());
        add("known b1 = d-1: monodromy trivial but the obstruction is inconclusive",
            r.known_b1 && *r.known_b1 == r.d - 1 && *r.slack == 6,
            "slack " + (r.slack ? std::to_string(*r.slack) : std::string("n/a")));
    }
    return out;
}

inline std::vector<ClaimResult> check_corpus_claims(const CorpusEntry& e) {
    return check_corpus_claims(e, e.arrangement);
}

}  // namespace arrbound
