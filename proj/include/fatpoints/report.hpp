#pragma once

// JSON encodings of the result types.

#include <string>

#include "json.hpp"

#include "base_locus.hpp"
#include "cremona.hpp"
#include "curves.hpp"
#include "divisor.hpp"
#include "interpolation.hpp"

namespace fatpoints {

using json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "fatpoints.report/1";

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

inline json to_json(const DivisorClass& D) {
    return json{{"n", D.n}, {"d", D.d}, {"mults", D.mults}};
}

inline json to_json(const CurveClass& C) {
    return json{{"family", to_string(C.family)}, {"degree", C.delta}, {"points", C.support()}};
}

inline json to_json(const SystemReport& r) {
    json trials = json::array();
    for (const auto& t : r.trial_results)
        trials.push_back({{"prime", t.prime}, {"seed", t.seed ? json(*t.seed) : json()}, {"rank", t.rank}, {"h0", t.h0}});
    return json{{"class", to_json(r.divisor)},
                {"monomial_count", r.monomial_count},
                {"rank", r.rank},
                {"h0", r.h0},
                {"v", to_json(r.v)},
                {"e", to_json(r.e)},
                {"dim", to_json(r.dim)},
                {"speciality", to_json(r.speciality)},
                {"status", to_string(r.status)},
                {"prime", r.prime},
                {"seed", r.seed ? json(*r.seed) : json()},
                {"trials", r.trials},
                {"trial_results", trials}};
}

inline json to_json(const ReductionTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"base_indices", s.base_indices},
                         {"k", s.k},
                         {"before", to_json(s.before)},
                         {"after", to_json(s.after)},
                         {"clamped", s.clamped}});
    return json{{"input", to_json(t.input)},
                {"steps", steps},
                {"final", to_json(t.final_class)},
                {"outcome", to_string(t.outcome)}};
}

inline json to_json(const SpecialityPrediction& p) {
    json contributions = json::array();
    for (const auto& c : p.contributions)
        contributions.push_back({{"curve", to_json(c.curve)}, {"t", c.t}, {"correction", to_json(c.correction)}});
    return json{{"contributions", contributions},
                {"total", to_json(p.total)},
                {"actual", p.actual ? to_json(*p.actual) : json()},
                {"residual", p.residual ? to_json(*p.residual) : json()}};
}

inline json to_json(const SectionProbeReport& r) {
    json out{{"section_dim", r.section_dim},
             {"trials", r.trials},
             {"zero_counts", r.zero_counts},
             {"hits", r.hits},
             {"verdict", r.verdict_string()}};
    if (!r.closure_hits.empty()) out["closure_hits"] = r.closure_hits;
    if (!r.sections.empty()) {
        json dump = json::array();
        for (std::size_t t = 0; t < r.sections.size(); ++t) {
            const auto& m = r.sections[t].basis;
            json rows = json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<Residue>(m.row(i).begin(), m.row(i).end()));
            dump.push_back({{"parametrization", rows}, {"zeros", r.zeros[t]}});
        }
        out["dump"] = dump;
    }
    return out;
}

}  // namespace fatpoints
