#pragma once

#include <span>
#include <string>
#include <vector>

#include "ontoscope/errors.hpp"
#include "ontoscope/tuples.hpp"

namespace ontoscope {

// Conditional probability table p(outcome | joint preparation) over finite
// label sets. Rows are joint preparation contexts, columns are outcomes.
struct EmpiricalModel {
    int sites = 0;
    std::vector<std::vector<std::string>> prep_sets;  // per site
    std::vector<std::string> outcomes;
    std::vector<double> table;  // [context * outcomes.size() + outcome]

    int outcome_count() const { return static_cast<int>(outcomes.size()); }

    std::vector<int> prep_radices() const {
        std::vector<int> r(prep_sets.size());
        for (std::size_t i = 0; i < prep_sets.size(); ++i) r[i] = static_cast<int>(prep_sets[i].size());
        return r;
    }

    long context_count() const {
        auto r = prep_radices();
        return tuple_count(r);
    }

    double& at(long ctx, int o) { return table[ctx * outcome_count() + o]; }
    double at(long ctx, int o) const { return table[ctx * outcome_count() + o]; }

    std::span<const double> row(long ctx) const {
        return {table.data() + ctx * outcome_count(), static_cast<std::size_t>(outcome_count())};
    }

    std::string context_key(long ctx) const {
        auto r = prep_radices();
        auto digits = decode_tuple(ctx, r);
        std::vector<std::string> parts(sites);
        for (int i = 0; i < sites; ++i) parts[i] = prep_sets[i][digits[i]];
        return join_key(parts);
    }

    int outcome_index(const std::string& label) const {
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            if (outcomes[i] == label) return static_cast<int>(i);
        }
        return -1;
    }

    long context_index(std::span<const std::string> preps) const {
        if (static_cast<int>(preps.size()) != sites) {
            throw ArityMismatch("joint preparation has wrong number of sites");
        }
        std::vector<int> digits(sites);
        for (int i = 0; i < sites; ++i) {
            int idx = -1;
            for (std::size_t k = 0; k < prep_sets[i].size(); ++k) {
                if (prep_sets[i][k] == preps[i]) idx = static_cast<int>(k);
            }
            if (idx < 0) throw LabelMismatch("unknown preparation label '" + preps[i] + "'");
            digits[i] = idx;
        }
        auto r = prep_radices();
        return encode_tuple(digits, r);
    }
};

// The outcome label that excludes a given joint preparation.
inline std::string exclusion_outcome_label(const std::string& context_key) {
    return "not(" + context_key + ")";
}

}  // namespace ontoscope
