#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrbound/report.hpp"

namespace {

using namespace arrbound;

Arrangement load_arrangement(const std::string& path) {
    if (path.starts_with("builtin:")) return builtin(path.substr(8));
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_arrangement(ss.str());
}

MultiSpec parse_mult(const std::string& s) {
    MultiSpec ms;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        Int v = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad multiplicity '" + item + "'");
        ms.multiplicities.push_back(v);
    }
    if (ms.multiplicities.empty()) throw std::invalid_argument("empty multiplicity list");
    return ms;
}

int run_analyze(const std::string& path, const std::string& mult, std::optional<Int> known_b1,
                const std::string& format) {
    try {
        Arrangement arr = load_arrangement(path);
        AnalyzeOptions opts;
        opts.known_b1 = known_b1;
        if (!mult.empty()) {
            if (arr.ambient_dim != 3) throw std::invalid_argument("--mult is only supported in C^3");
            opts.mult = parse_mult(mult);
            opts.mult->validate(arr.d());
        }
        AnalysisResult res = analyze(arr, opts);
        if (format == "json")
            std::cout << to_json(res).dump(2) << "\n";
        else
            std::cout << to_text(res);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_examples_list() {
    std::cout << "built-in arrangements:\n";
    for (const auto& n : builtin_names()) {
        std::cout << "  " << n;
        if (const auto* e = find_corpus_entry(n); e && e->known_b1)
            std::cout << "   (known b1 = " << *e->known_b1 << ", " << e->source << ")";
        std::cout << "\n";
    }
    std::cout << "parameterized: pencil(k) with k >= 2, generic4(d) with d >= 1\n";
    return 0;
}

int run_examples(const std::string& name, const std::string& format) {
    try {
        std::vector<const CorpusEntry*> todo;
        if (name == "all") {
            for (const auto& e : corpus()) todo.push_back(&e);
        } else if (const auto* e = find_corpus_entry(name)) {
            todo.push_back(e);
        } else {
            // a builtin without attached claims: just analyze it
            Arrangement arr = builtin(name);
            AnalysisResult res = analyze(arr);
            if (format == "json")
                std::cout << to_json(res).dump(2) << "\n";
            else
                std::cout << to_text(res);
            return 0;
        }

        bool any_fail = false;
        nlohmann::json results = nlohmann::json::array();
        for (const auto* e : todo) {
            AnalyzeOptions opts;
            opts.known_b1 = e->known_b1;
            opts.known_source = e->source;
            AnalysisResult res = analyze(e->arrangement, opts);
            auto claims = check_corpus_claims(*e);
            if (format == "json") {
                nlohmann::json je;
                je["name"] = e->name;
                je["report"] = to_json(res);
                nlohmann::json jc = nlohmann::json::array();
                for (const auto& c : claims) {
                    jc.push_back({{"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}});
                    any_fail = any_fail || !c.pass;
                }
                je["claims"] = jc;
                results.push_back(std::move(je));
            } else {
                for (const auto& c : claims) {
                    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << e->name << ": " << c.claim;
                    if (!c.pass && !c.detail.empty()) std::cout << "  [" << c.detail << "]";
                    std::cout << "\n";
                    any_fail = any_fail || !c.pass;
                }
            }
        }
        if (format == "json") std::cout << results.dump(2) << "\n";
        return any_fail ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bound calculator for Milnor fibers of central hyperplane arrangements"};
    app.require_subcommand(1);

    std::string path, mult, format = "text";
    Int known_b1 = -1;

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze an arrangement file (or builtin:<name>)");
    analyze_cmd->add_option("path", path, ".arr file, or builtin:<name>")->required();
    analyze_cmd->add_option("--mult", mult, "comma-separated multiplicities m1,...,md");
    analyze_cmd->add_option("--known-b1", known_b1, "published b1(F), for slack reporting");
    analyze_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* examples_cmd = app.add_subcommand("examples", "built-in arrangements");
    auto* list_cmd = examples_cmd->add_subcommand("list", "list built-in names");
    std::string run_name;
    auto* run_cmd = examples_cmd->add_subcommand("run", "run a built-in (or 'all') with its checks");
    run_cmd->add_option("name", run_name, "builtin name or 'all'")->required();
    run_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    examples_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    if (analyze_cmd->parsed())
        return run_analyze(path, mult,
                           analyze_cmd->count("--known-b1") ? std::optional<Int>(known_b1)
                                                            : std::nullopt,
                           format);
    if (list_cmd->parsed()) return run_examples_list();
    if (run_cmd->parsed()) return run_examples(run_name, format);
    return 0;
}
