// lmss: decide whether the local maximum stable sets of a forest or unicycle
// graph form a greedoid, and cross-check the answer by brute force.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lmss/classifier.hpp"
#include "lmss/corpus.hpp"
#include "lmss/fuzz.hpp"
#include "lmss/graph_io.hpp"
#include "lmss/serialize.hpp"
#include "lmss/stability.hpp"

namespace {

using namespace lmss;

enum Exit { kOk = 0, kVerdictFalse = 1, kInputError = 2, kInvariant = 3 };

Graph read_input(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0) return corpus(spec.substr(7));
    if (spec == "-") {
        std::string text{std::istreambuf_iterator<char>(std::cin), {}};
        return parse_edge_list(text);
    }
    return load_graph(spec);
}

std::string braces(const Graph& g, VertexSet s) {
    std::string out = "{";
    for (const auto& l : g.labels_of(s)) out += (out.size() > 1 ? ", " : "") + l;
    return out + "}";
}

std::string describe(const Graph& g, const Witness& w) {
    if (auto m = std::get_if<Matching>(&w)) {
        std::string out = "maximum matching not uniquely restricted: {";
        for (std::size_t i = 0; i < m->edges().size(); ++i) {
            auto [u, v] = m->edges()[i];
            out += (i ? ", " : "") + g.label(u) + "-" + g.label(v);
        }
        return out + "}";
    }
    if (auto s = std::get_if<VertexSet>(&w))
        return "N[S] is not König-Egerváry for S = " + braces(g, *s);
    if (auto a = std::get_if<AxiomWitness>(&w)) {
        std::string out = std::string(to_string(a->axiom)) + " fails at X = " + braces(g, a->x);
        if (a->y) out += ", Y = " + braces(g, *a->y);
        return out;
    }
    return "none";
}

void print_verdict(const Graph& g, const Verdict& v, bool json) {
    if (json) {
        std::cout << to_json(g, v).dump() << '\n';
        return;
    }
    std::cout << "greedoid: " << (v.is_greedoid ? "yes" : "no") << '\n'
              << "branch: " << to_string(v.branch) << '\n';
    if (v.cycle_length) std::cout << "cycle length: " << *v.cycle_length << '\n';
    if (v.psi_size) std::cout << "|Psi|: " << *v.psi_size << '\n';
    if (!v.is_greedoid) std::cout << "witness: " << describe(g, v.witness) << '\n';
}

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream in(csv);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local maximum stable set greedoids of forests and unicycle graphs"};
    app.require_subcommand(1);

    Limits limits;
    app.add_option("--max-vertices", limits.structural, "Size guard for α, μ and single-set queries")
        ->capture_default_str();
    app.add_option("--max-enum", limits.enumeration, "Size guard for whole-family enumeration")
        ->capture_default_str();

    std::string input;
    bool json = false, strict = false;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Edge-list file, .json file, corpus:NAME, or - for stdin")
            ->required();
    };

    auto* classify = app.add_subcommand("classify", "Decide by the unicycle characterization");
    add_input(classify);
    classify->add_flag("--json", json);
    classify->add_flag("--strict", strict, "Exit 1 when Ψ(G) is not a greedoid");

    auto* brute = app.add_subcommand("brute", "Decide by enumerating Ψ(G) and checking the axioms");
    add_input(brute);
    brute->add_flag("--json", json);
    brute->add_flag("--strict", strict, "Exit 1 when Ψ(G) is not a greedoid");

    auto* cross = app.add_subcommand("cross", "Run both deciders and compare");
    add_input(cross);
    cross->add_flag("--json", json);

    auto* psi = app.add_subcommand("psi", "List Ψ(G)");
    add_input(psi);
    psi->add_flag("--json", json);

    std::string set_csv, method = "search";
    auto* chain = app.add_subcommand("chain", "Accessibility chain for a member of Ψ(G)");
    add_input(chain);
    chain->add_option("--set", set_csv, "Comma-separated labels")->required();
    chain->add_option("--method", method, "search | forest | triangle")
        ->check(CLI::IsMember({"search", "forest", "triangle"}))
        ->capture_default_str();
    chain->add_flag("--json", json);

    auto* prefilter = app.add_subcommand("prefilter", "Induced-cycle certificate of non-greedoid Ψ(G)");
    add_input(prefilter);
    prefilter->add_flag("--json", json);

    Campaign campaign;
    std::string family = "any";
    bool serial = false, timing = false;
    auto* fuzz = app.add_subcommand("fuzz", "Seeded cross-validation campaign (JSON Lines)");
    fuzz->add_option("--count", campaign.count)->capture_default_str();
    fuzz->add_option("--min-n", campaign.min_n)->capture_default_str();
    fuzz->add_option("--max-n", campaign.max_n)->capture_default_str();
    fuzz->add_option("--max-cycle", campaign.max_cycle)->capture_default_str();
    fuzz->add_option("--cycle", family, "three | even | odd | forest | any")
        ->check(CLI::IsMember({"three", "even", "odd", "forest", "any"}))
        ->capture_default_str();
    fuzz->add_option("--seed", campaign.seed)->capture_default_str();
    fuzz->add_flag("--disconnected", campaign.disconnected, "Allow several components");
    fuzz->add_flag("--serial", serial, "Use the serial reference loop");
    fuzz->add_flag("--timing", timing, "Include per-instance milliseconds (breaks byte-identity)");

    std::string corpus_name;
    auto* corpus_cmd = app.add_subcommand("corpus", "List built-in graphs, or print one as an edge list");
    corpus_cmd->add_option("name", corpus_name);

    std::string format = "edges";
    auto* export_cmd = app.add_subcommand("export", "Convert a graph");
    add_input(export_cmd);
    export_cmd->add_option("--format", format, "dot | json | edges")
        ->check(CLI::IsMember({"dot", "json", "edges"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (corpus_cmd->parsed()) {
            if (corpus_name.empty())
                for (const auto& n : corpus_names()) std::cout << n << '\n';
            else
                std::cout << to_edge_list(corpus(corpus_name));
            return kOk;
        }
        if (fuzz->parsed()) {
            campaign.family = family_from_string(family);
            campaign.limits = limits;
            auto reports = serial ? run_fuzz_serial(campaign) : run_fuzz(campaign);
            write_reports(std::cout, campaign, reports, timing);
            return summarize(reports).ok() ? kOk : kInvariant;
        }

        const Graph g = read_input(input);
        if (classify->parsed() || brute->parsed()) {
            auto v = classify->parsed() ? classify_unicycle(g, limits) : brute_force_greedoid(g, limits);
            print_verdict(g, v, json);
            return strict && !v.is_greedoid ? kVerdictFalse : kOk;
        }
        if (cross->parsed()) {
            auto cv = cross_validate(g, limits);
            if (json) {
                std::cout << Json{{"classifier", to_json(g, cv.classifier)},
                                  {"oracle", to_json(g, cv.oracle)},
                                  {"agree", cv.agree}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << "classifier: " << (cv.classifier.is_greedoid ? "yes" : "no") << " ("
                          << to_string(cv.classifier.branch) << ")\n"
                          << "brute force: " << (cv.oracle.is_greedoid ? "yes" : "no") << '\n'
                          << "agree: " << (cv.agree ? "yes" : "no") << '\n';
            }
            return cv.agree ? kOk : kInvariant;
        }
        if (psi->parsed()) {
            auto family_sets = enumerate_psi(g, limits);
            if (json) {
                std::cout << to_json(g, family_sets).dump() << '\n';
            } else {
                for (VertexSet s : family_sets) std::cout << braces(g, s) << '\n';
            }
            return kOk;
        }
        if (chain->parsed()) {
            const VertexSet s = g.set_of(split_labels(set_csv));
            std::optional<Chain> c;
            if (method == "forest") c = chain_for_forest(g, s, limits);
            else if (method == "triangle") c = chain_via_triangle(g, s, limits).chain;
            else c = find_accessibility_chain(g, s, limits);
            if (json) {
                std::cout << (c ? to_json(g, *c) : Json(nullptr)).dump() << '\n';
            } else if (!c) {
                std::cout << "no accessibility chain\n";
            } else {
                for (std::size_t i = 0; i < c->size(); ++i)
                    std::cout << (i ? " < " : "") << braces(g, c->steps[i]);
                std::cout << '\n';
            }
            return kOk;
        }
        if (prefilter->parsed()) {
            auto p = cycle_psi_prefilter(g, limits);
            if (json) {
                std::cout << Json{{"passes", p.passes},
                                  {"witness", p.witness ? to_json(g, *p.witness) : Json(nullptr)}}
                                 .dump()
                          << '\n';
            } else if (p.passes) {
                std::cout << "inconclusive: no maximum stable set of an induced cycle (k >= 4) is in Psi\n";
            } else {
                std::cout << "not a greedoid: " << braces(g, *p.witness)
                          << " is a maximum stable set of an induced cycle and lies in Psi\n";
            }
            return kOk;
        }
        if (export_cmd->parsed()) {
            if (format == "dot") std::cout << to_dot(g);
            else if (format == "json") std::cout << to_graph_json(g) << '\n';
            else std::cout << to_edge_list(g);
            return kOk;
        }
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kInvariant;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
