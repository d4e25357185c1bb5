#include "lmss/fuzz.hpp"

#include <chrono>
#include <ostream>

#include "lmss/graph_io.hpp"
#include "lmss/stability.hpp"

namespace lmss {

const char* to_string(Family f) {
    switch (f) {
        case Family::forest: return "forest";
        case Family::three: return "three";
        case Family::even: return "even";
        case Family::odd: return "odd";
        case Family::any: return "any";
    }
    return "?";
}

Family family_from_string(std::string_view name) {
    for (auto f : {Family::forest, Family::three, Family::even, Family::odd, Family::any})
        if (name == to_string(f)) return f;
    throw DomainError("unknown graph family '" + std::string(name) + "'");
}

namespace {

bool allowed(Family f, std::size_t k) {
    switch (f) {
        case Family::forest: return false;
        case Family::three: return k == 3;
        case Family::even: return k % 2 == 0;
        case Family::odd: return k % 2 == 1 && k >= 5;
        case Family::any: return true;
    }
    return false;
}

Parity parity_of(Family f) {
    switch (f) {
        case Family::three: return Parity::three;
        case Family::even: return Parity::even;
        case Family::odd: return Parity::odd;
        default: return Parity::any;
    }
}

std::size_t smallest_order(Family f) {
    switch (f) {
        case Family::forest: return 1;
        case Family::three: return 3;
        case Family::even: return 4;
        case Family::odd: return 5;
        case Family::any: return 3;
    }
    return 1;
}

}  // namespace

GeneratorSpec instance_spec(const Campaign& c, std::size_t index) {
    const auto lo = std::max(c.min_n, smallest_order(c.family));
    if (c.max_n < lo) throw DomainError("max_n is too small for the requested family");
    if (c.family != Family::forest && c.max_cycle < smallest_order(c.family))
        throw DomainError("max_cycle is too small for the requested family");
    std::mt19937_64 rng(instance_seed(c.seed, index));

    GeneratorSpec spec;
    spec.vertex_count = lo + draw_below(rng, c.max_n - lo + 1);
    spec.connected = !c.disconnected;
    spec.parity = parity_of(c.family);
    if (c.family != Family::forest) {
        std::vector<std::size_t> lengths;
        for (std::size_t k = 3; k <= std::min(spec.vertex_count, c.max_cycle); ++k)
            if (allowed(c.family, k)) lengths.push_back(k);
        spec.cycle_length = lengths[draw_below(rng, lengths.size())];
    }
    spec.seed = rng();
    return spec;
}

bool Report::ok() const {
    return !error && verdicts && verdicts->agree && prefilter_sound && chain_failures == 0 &&
           odd_matchings_ur.value_or(true);
}

Report run_instance(const Campaign& c, std::size_t index) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.index = index;
    try {
        r.spec = instance_spec(c, index);
        r.graph = generate_random_unicycle(r.spec);
        const Graph& g = r.graph;
        r.verdicts = cross_validate(g, c.limits);
        r.prefilter = cycle_psi_prefilter(g, c.limits);
        r.prefilter_sound = r.prefilter.passes || !r.verdicts->oracle.is_greedoid;

        const auto length = r.verdicts->classifier.cycle_length;
        if (!length || *length == 3) {
            for (VertexSet s : enumerate_psi(g, c.limits)) {
                ++r.chains_checked;
                Chain chain;
                if (length) {
                    auto built = chain_via_triangle(g, s, c.limits);
                    r.triangle_repairs += built.repairs;
                    chain = std::move(built.chain);
                } else {
                    chain = chain_for_forest(g, s, c.limits);
                }
                bool good = is_valid_chain(g, chain, s);
                if (length) good = good && find_accessibility_chain(g, s, c.limits).has_value();
                if (!good) ++r.chain_failures;
            }
        } else if (*length % 2 == 1) {
            r.odd_matchings_ur = all_max_matchings_ur(g, c.limits).all_uniquely_restricted;
        }
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<Report> run_fuzz(const Campaign& c) {
    std::vector<Report> reports(c.count);
    const auto count = static_cast<std::ptrdiff_t>(c.count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) reports[i] = run_instance(c, static_cast<std::size_t>(i));
    return reports;
}

std::vector<Report> run_fuzz_serial(const Campaign& c) {
    std::vector<Report> reports;
    reports.reserve(c.count);
    for (std::size_t i = 0; i < c.count; ++i) reports.push_back(run_instance(c, i));
    return reports;
}

Summary summarize(const std::vector<Report>& reports) {
    Summary s;
    for (const auto& r : reports) {
        ++s.count;
        if (r.error) ++s.errors;
        if (r.verdicts) {
            if (r.verdicts->agree) ++s.agreements;
            else ++s.disagreements;
            if (r.verdicts->oracle.is_greedoid) ++s.greedoids;
        }
        s.chains_checked += r.chains_checked;
        s.chain_failures += r.chain_failures;
        s.triangle_repairs += r.triangle_repairs;
        if (!r.prefilter.passes) ++s.prefilter_fired;
        if (!r.prefilter_sound) ++s.prefilter_unsound;
        if (r.odd_matchings_ur == false) ++s.odd_ur_failures;
        if (!r.spec.connected) ++s.disconnected_instances;
    }
    return s;
}

Json to_json(const Report& r, bool timing) {
    Json out;
    out["index"] = r.index;
    out["seed"] = r.spec.seed;
    out["n"] = r.spec.vertex_count;
    out["cycle_length"] = r.spec.cycle_length ? Json(*r.spec.cycle_length) : Json(nullptr);
    out["connected"] = r.spec.connected;
    out["graph"] = Json::parse(to_graph_json(r.graph));
    if (r.verdicts) {
        out["classifier"] = to_json(r.graph, r.verdicts->classifier);
        out["oracle"] = to_json(r.graph, r.verdicts->oracle);
        out["agree"] = r.verdicts->agree;
    }
    out["prefilter"] = {{"passes", r.prefilter.passes},
                        {"witness", r.prefilter.witness ? to_json(r.graph, *r.prefilter.witness)
                                                        : Json(nullptr)}};
    out["chains_checked"] = r.chains_checked;
    out["chain_failures"] = r.chain_failures;
    out["triangle_repairs"] = r.triangle_repairs;
    out["odd_matchings_ur"] = r.odd_matchings_ur ? Json(*r.odd_matchings_ur) : Json(nullptr);
    out["error"] = r.error ? Json(*r.error) : Json(nullptr);
    out["ok"] = r.ok();
    if (timing) out["millis"] = r.millis;
    return out;
}

Json to_json(const Campaign& c, const Summary& s) {
    return {{"summary", true},
            {"family", to_string(c.family)},
            {"master_seed", c.seed},
            {"count", s.count},
            {"agreements", s.agreements},
            {"disagreements", s.disagreements},
            {"greedoids", s.greedoids},
            {"errors", s.errors},
            {"chains_checked", s.chains_checked},
            {"chain_failures", s.chain_failures},
            {"triangle_repairs", s.triangle_repairs},
            {"prefilter_fired", s.prefilter_fired},
            {"prefilter_unsound", s.prefilter_unsound},
            {"odd_ur_failures", s.odd_ur_failures},
            {"disconnected_instances", s.disconnected_instances},
            {"ok", s.ok()}};
}

void write_reports(std::ostream& out, const Campaign& c, const std::vector<Report>& reports,
                   bool timing) {
    for (const auto& r : reports) out << to_json(r, timing).dump() << '\n';
    out << to_json(c, summarize(reports)).dump() << '\n';
}

}  // namespace lmss
