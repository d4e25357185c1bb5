#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lmss/classifier.hpp"
#include "lmss/generator.hpp"
#include "lmss/limits.hpp"
#include "lmss/serialize.hpp"

namespace lmss {

enum class Family { forest, three, even, odd, any };
const char* to_string(Family f);
/// Throws DomainError on an unknown name.
Family family_from_string(std::string_view name);

struct Campaign {
    std::size_t count = 100;
    std::size_t min_n = 1;
    std::size_t max_n = 12;
    std::size_t max_cycle = 8;
    Family family = Family::any;
    std::uint64_t seed = 1;
    bool disconnected = false;
    Limits limits{};
};

/// Instance `index` of a campaign: vertex count uniform over the feasible
/// range, cycle length uniform over the lengths in [3, min(n, max_cycle)]
/// allowed by the family.
GeneratorSpec instance_spec(const Campaign& c, std::size_t index);

struct Report {
    std::size_t index = 0;
    GeneratorSpec spec;
    Graph graph;
    std::optional<CrossValidation> verdicts;
    PrefilterResult prefilter;
    bool prefilter_sound = true;          // prefilter fired => oracle says no
    std::size_t chains_checked = 0;       // forest / triangle constructions validated
    std::size_t chain_failures = 0;
    std::size_t triangle_repairs = 0;     // see TriangleChain::repairs
    std::optional<bool> odd_matchings_ur;  // odd cycles: all maximum matchings UR
    std::optional<std::string> error;      // invariant violation or other failure
    double millis = 0.0;

    bool ok() const;
};

/// Generates, cross-validates, and runs the family's theorem side checks.
/// Never throws for instance-level failures; they land in Report::error.
Report run_instance(const Campaign& c, std::size_t index);

/// Instances are evaluated in an OpenMP parallel loop; the result is in index order.
std::vector<Report> run_fuzz(const Campaign& c);
/// Serial reference for run_fuzz; identical output.
std::vector<Report> run_fuzz_serial(const Campaign& c);

struct Summary {
    std::size_t count = 0;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    std::size_t greedoids = 0;
    std::size_t errors = 0;
    std::size_t chains_checked = 0;
    std::size_t chain_failures = 0;
    std::size_t triangle_repairs = 0;
    std::size_t prefilter_fired = 0;
    std::size_t prefilter_unsound = 0;
    std::size_t odd_ur_failures = 0;
    std::size_t disconnected_instances = 0;

    bool ok() const {
        return disagreements == 0 && errors == 0 && chain_failures == 0 && prefilter_unsound == 0 &&
               odd_ur_failures == 0;
    }
};

Summary summarize(const std::vector<Report>& reports);

Json to_json(const Report& r, bool timing);
Json to_json(const Campaign& c, const Summary& s);

/// JSON Lines: one object per report in index order, the summary last.
void write_reports(std::ostream& out, const Campaign& c, const std::vector<Report>& reports,
                   bool timing);

}  // namespace lmss
