#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrbound/arrangement.hpp"
#include "arrbound/bounds_c3.hpp"
#include "arrbound/bounds_c4.hpp"
#include "arrbound/corpus.hpp"
#include "arrbound/lattice.hpp"
#include "arrbound/multi_arrangement.hpp"

namespace arrbound {

struct AnalyzeOptions {
    std::optional<Int> known_b1;
    std::optional<MultiSpec> mult;
    std::string known_source;  // citation for known_b1, when there is one
};

namespace detail {

inline std::string ordinal(int n) {
    int mod100 = n % 100;
    const char* suffix = "th";
    if (mod100 < 11 || mod100 > 13) {
        switch (n % 10) {
            case 1: suffix = "st"; break;
            case 2: suffix = "nd"; break;
            case 3: suffix = "rd"; break;
        }
    }
    return std::to_string(n) + suffix;
}

}  // namespace detail

// Full analysis of one arrangement: lattice plus the rank-appropriate bounds.
struct AnalysisResult {
    Arrangement arrangement;
    FlatLattice lattice;
    std::optional<BoundsReport> c3;
    std::optional<C4Bounds> c4;
    std::optional<MultiSpec> mult;
    std::optional<CycloPoly> multi_divisor;
    std::string verdict;
    std::vector<std::string> notes;
};

inline AnalysisResult analyze(const Arrangement& arr, const AnalyzeOptions& opts = {}) {
    if (opts.mult && arr.ambient_dim != 3)
        throw std::invalid_argument("multiplicities are supported for C^3 arrangements only");
    AnalysisResult res;
    res.arrangement = arr;
    res.lattice = compute_lattice(arr);
    if (arr.ambient_dim == 3) {
        res.c3 = analyze_c3(res.lattice, opts.known_b1);
        const BoundsReport& r = *res.c3;
        if (opts.mult) {
            res.mult = opts.mult;
            res.multi_divisor = multi_divisor_bound(res.lattice, *opts.mult);
        }
        std::ostringstream v;
        if (r.monodromy_forced_trivial) {
            v << "monodromy on H1 forced trivial; b1 = " << r.b1_lower;
        } else {
            v << "b1 in [" << r.b1_lower << ", " << r.b1_upper_degree << "]";
            Int worst = 0;
            int worst_order = 0;
            for (const auto& [n, bound] : r.per_eigenvalue)
                if (bound > worst) {
                    worst = bound;
                    worst_order = n;
                }
            if (worst > 0)
                v << "; each primitive-" << detail::ordinal(worst_order) << "-root eigenspace <= "
                  << worst;
            if (r.known_b1) {
                if (*r.slack > 0) v << "; bound not tight: slack " << *r.slack;
                if (*r.known_b1 == r.d - 1) v << "; obstruction inconclusive";
            }
        }
        res.verdict = v.str();
        for (const auto& [n, e] : r.divisor.exponents())
            if (n > 2)
                res.notes.push_back("Phi_" + std::to_string(n) +
                                    "(t) = " + CycloPoly::phi(n).expanded_string());
        if (r.known_b1) {
            std::string src = opts.known_source.empty() ? "supplied externally" : opts.known_source;
            res.notes.push_back("known b1 is a cited constant (" + src + "), not computed here");
        }
    } else {
        res.c4 = analyze_c4(res.lattice);
        const C4Bounds& r = *res.c4;
        std::ostringstream v;
        v << "b2(F) <= " << r.b2_upper << ", b3(F) <= " << r.b3_upper;
        res.verdict = v.str();
        res.notes.push_back(
            "b2 term sums local rank-3 Milnor fiber b2 bounds over the dim-1 flats of each "
            "hyperplane, plus (2p+1)(d_L-2)((d,d_L)-1) over its dim-2 flats");
        if (!r.chi_agree)
            res.notes.push_back("closed-form chi(F) value " + std::to_string(r.chi_fiber_paper) +
                                " (\"paper formula\") disagrees with the covering-degree oracle " +
                                std::to_string(r.chi_fiber_oracle) +
                                "; the oracle value is the one used as chi(F)");
    }
    return res;
}

inline nlohmann::json lattice_flats_json(const FlatLattice& lat) {
    nlohmann::json flats = nlohmann::json::array();
    for (const auto& f : lat.flats) {
        nlohmann::json j;
        j["dim"] = f.dim;
        j["d_L"] = f.d_L();
        j["hyperplanes"] = f.hyperplanes;
        if (lat.ambient == 4 && f.dim == 2) j["p_L"] = lat.lines_in_plane(f);
        flats.push_back(std::move(j));
    }
    return flats;
}

// Standalone lattice serialization: flats in the stable (dim desc, key lex)
// order plus all strict containment edges between them.
inline nlohmann::json lattice_to_json(const FlatLattice& lat) {
    nlohmann::json j;
    j["ambient"] = lat.ambient;
    j["d"] = lat.d;
    nlohmann::json flats = nlohmann::json::array();
    for (const auto& f : lat.flats) {
        nlohmann::json jf;
        jf["id"] = f.id;
        jf["dim"] = f.dim;
        jf["d_L"] = f.d_L();
        jf["hyperplanes"] = f.hyperplanes;
        jf["key"] = f.key;
        jf["mobius"] = lat.mobius[static_cast<size_t>(f.id)];
        if (!f.direction.empty()) jf["direction"] = f.direction;
        if (lat.ambient == 4 && f.dim == 2) jf["p_L"] = lat.lines_in_plane(f);
        flats.push_back(std::move(jf));
    }
    j["flats"] = flats;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& outer : lat.flats)
        for (const auto& inner : lat.flats)
            if (inner.dim < outer.dim && lat.flat_contains(outer, inner))
                edges.push_back({outer.id, inner.id});
    j["contains"] = edges;
    j["has_center"] = lat.has_center;
    if (lat.has_center) j["center_mobius"] = lat.center_mobius;
    return j;
}

inline nlohmann::json divisor_json(const CycloPoly& p) {
    nlohmann::json j;
    j["factored"] = p.factored_string();
    j["expanded"] = p.expand();
    j["degree"] = p.degree();
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [n, e] : p.exponents()) exps[std::to_string(n)] = e;
    j["exponents"] = exps;
    return j;
}

inline nlohmann::json to_json(const AnalysisResult& res) {
    nlohmann::json j;
    const Arrangement& arr = res.arrangement;
    j["arrangement"]["d"] = arr.d();
    j["arrangement"]["ambient"] = arr.ambient_dim;
    {
        std::vector<std::string> forms;
        for (const auto& f : arr.forms) forms.push_back(f.str(arr.var_names));
        j["arrangement"]["forms"] = forms;
    }
    j["flats"] = lattice_flats_json(res.lattice);
    if (res.c3) {
        const BoundsReport& r = *res.c3;
        j["euler"]["chi_proj"] = r.euler.chi_proj;
        j["euler"]["chi_fiber"] = r.euler.chi_fiber;
        j["b1"]["lower"] = r.b1_lower;
        j["b1"]["upper_degree"] = r.b1_upper_degree;
        j["b1"]["upper_display"] = r.b1_upper_display;
        j["b1"]["upper_massey"] = r.b1_upper_massey;
        j["b1"]["cdo"] = r.cdo_value;
        j["divisor"] = divisor_json(r.divisor);
        nlohmann::json pe = nlohmann::json::object();
        for (const auto& [n, bound] : r.per_eigenvalue) pe[std::to_string(n)] = bound;
        j["per_eigenvalue"] = pe;
        j["monodromy_forced_trivial"] = r.monodromy_forced_trivial;
        j["b2"]["lower"] = r.b2_lower;
        j["b2"]["upper"] = r.b2_upper;
        if (r.known_b1) {
            j["known"]["b1"] = *r.known_b1;
            j["known"]["slack"] = *r.slack;
        }
        if (res.mult) {
            j["multi"]["multiplicities"] = res.mult->multiplicities;
            j["multi"]["divisor"] = divisor_json(*res.multi_divisor);
        }
    } else {
        const C4Bounds& r = *res.c4;
        j["euler"]["chi_fiber"] = r.chi_fiber_oracle;
        j["euler"]["chi_fiber_paper"] = r.chi_fiber_paper;
        j["b1"]["lower"] = r.d - 1;
        j["b2"]["lower"] = r.b2_complement;
        j["b2"]["upper"] = r.b2_upper;
        j["b3"] = r.b3_upper;
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : r.per_hyperplane)
            terms.push_back({{"hyperplane", t.hyperplane},
                             {"b_sum", t.b_sum},
                             {"plane_sum", t.plane_sum},
                             {"total", t.total()}});
        j["c4_terms"] = terms;
    }
    j["verdict"] = res.verdict;
    j["notes"] = res.notes;
    return j;
}

inline std::string to_text(const AnalysisResult& res) {
    std::ostringstream o;
    const Arrangement& arr = res.arrangement;
    o << "arrangement: C^" << arr.ambient_dim << ", d = " << arr.d() << "\n";
    for (int i = 0; i < arr.d(); ++i) {
        o << "  H" << i << ": " << arr.forms[static_cast<size_t>(i)].str(arr.var_names);
        if (static_cast<size_t>(i) < arr.labels.size() && !arr.labels[static_cast<size_t>(i)].empty())
            o << "   (" << arr.labels[static_cast<size_t>(i)] << ")";
        o << "\n";
    }

    const FlatLattice& lat = res.lattice;
    o << "flats (codim >= 2): " << lat.flats.size() << "\n";
    for (const auto& f : lat.flats) {
        o << "  dim " << f.dim << "  d_L=" << f.d_L() << "  hyperplanes {";
        for (size_t k = 0; k < f.hyperplanes.size(); ++k)
            o << (k ? "," : "") << f.hyperplanes[static_cast<size_t>(k)];
        o << "}";
        if (lat.ambient == 4 && f.dim == 2) o << "  p_L=" << lat.lines_in_plane(f);
        if (f.dim == 1 && !f.direction.empty()) {
            o << "  direction (";
            for (size_t k = 0; k < f.direction.size(); ++k) o << (k ? "," : "") << f.direction[k];
            o << ")";
        }
        o << "\n";
    }
    o << (lat.ambient == 3 ? "1-flat" : "codim-2 flat") << " multiplicities per hyperplane:\n";
    for (int h = 0; h < lat.d; ++h) {
        o << "  H" << h << ": ";
        auto mults = lat.multiplicities_in_hyperplane(h);
        for (size_t k = 0; k < mults.size(); ++k) o << (k ? "," : "") << mults[k];
        o << "\n";
    }

    if (res.c3) {
        const BoundsReport& r = *res.c3;
        o << "euler: chi(P^2 \\ [A]) = " << r.euler.chi_proj << ", chi(F) = " << r.euler.chi_fiber
          << "\n";
        o << "b1 lower bound:                 " << r.b1_lower << "  (= d-1)\n";
        o << "b1 upper bound (divisor degree): " << r.b1_upper_degree << "\n";
        o << "b1 upper bound (display form):   " << r.b1_upper_display << "\n";
        o << "b1 upper bound (Massey):         " << r.b1_upper_massey << "\n";
        o << "CDO bound per nontrivial eigenspace: " << r.cdo_value << "\n";
        o << "characteristic polynomial of the monodromy on H1(F): (t-1)^" << (r.d - 1)
          << " * p(t), where p(t) divides\n";
        o << "  " << r.divisor.factored_string() << " = " << r.divisor.expanded_string()
          << "   (degree " << r.divisor.degree() << ")\n";
        if (!r.per_eigenvalue.empty()) {
            o << "eigenspace bounds by eigenvalue order (n | d, n > 1):\n";
            for (const auto& [n, bound] : r.per_eigenvalue) o << "  n=" << n << ": " << bound << "\n";
        }
        o << "b2 range: [" << r.b2_lower << ", " << r.b2_upper << "]\n";
        if (r.known_b1) o << "known b1 = " << *r.known_b1 << ", slack " << *r.slack << "\n";
        if (res.multi_divisor) {
            o << "multiplicities (";
            for (size_t k = 0; k < res.mult->multiplicities.size(); ++k)
                o << (k ? "," : "") << res.mult->multiplicities[k];
            o << "): first characteristic polynomial of F_m divides\n";
            o << "  " << res.multi_divisor->factored_string() << " = "
              << res.multi_divisor->expanded_string() << "   (degree " << res.multi_divisor->degree()
              << ")\n";
        }
    } else {
        const C4Bounds& r = *res.c4;
        o << "euler: chi(F) = " << r.chi_fiber_oracle << " (covering-degree oracle)\n";
        o << "       chi(F) paper formula = " << r.chi_fiber_paper
          << (r.chi_agree ? "  (agrees)" : "  ** disagrees with the oracle **") << "\n";
        o << "b2(M(A)) = " << r.b2_complement << "\n";
        o << "per-hyperplane terms (local b2 sum + plane sum):\n";
        for (const auto& t : r.per_hyperplane)
            o << "  H" << t.hyperplane << ": " << t.b_sum << " + " << t.plane_sum << " = "
              << t.total() << "\n";
        o << "b1 lower bound: " << (r.d - 1) << "  (= d-1)\n";
        o << "b2(F) <= " << r.b2_upper << "\n";
        o << "b3(F) <= " << r.b3_upper << "\n";
    }
    o << "verdict: " << res.verdict << "\n";
    for (const auto& n : res.notes) o << "note: " << n << "\n";
    return o.str();
}

}  // namespace arrbound
