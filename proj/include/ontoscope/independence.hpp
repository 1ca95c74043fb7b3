#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ontoscope/ontology.hpp"

namespace ontoscope::independence {

// Classical-correlation decomposition: a distribution over a finite common
// past plus per-site factorized conditionals.
struct CCWitness {
    OnticSpace space;
    std::vector<std::vector<std::string>> prep_sets;  // per site
    std::vector<std::string> common_past;             // labels of Lambda_c
    std::vector<double> weight;                       // distribution over Lambda_c

    // locals[site][(p * |Lambda_c| + c) * |Lambda| + lambda]
    std::vector<std::vector<double>> locals;

    int sites() const { return static_cast<int>(prep_sets.size()); }
    int c_count() const { return static_cast<int>(common_past.size()); }
    double local(int site, int p, int c, int lam) const {
        return locals[site][(p * c_count() + c) * space.size() + lam];
    }
    double& local(int site, int p, int c, int lam) {
        return locals[site][(p * c_count() + c) * space.size() + lam];
    }

    // sum_c weight(c) prod_i locals_i(lambda_i | p_i, c)
    CondDist reconstruct() const;
};

struct IndependenceVerdict {
    bool holds = false;
    double max_violation = 0.0;
    std::string witness_context;  // human-readable location of the worst cell
};

// Eq.-3 check: joint equals the product of single-site marginals. A failing
// subsystem condition is itself a failure (its certificate is reported).
IndependenceVerdict check_preparation_independence(const CondDist& dist, double tol = 1e-9);

// Eq.-5 check: each site's marginal is independent of off-site settings.
IndependenceVerdict check_subsystem_condition(const CondDist& dist, double tol = 1e-9);

struct CCVerdict {
    IndependenceVerdict verdict;
    double reconstruction_residual = 0.0;
    // conditional overlap of locals(.|p0,c) vs locals(.|p1,c), indexed
    // [c][site]; feeds the Proposition-1 analysis
    std::vector<std::vector<double>> cond_overlap;
};

CCVerdict verify_cc_witness(const CondDist& dist, const CCWitness& witness, double tol = 1e-9);

struct WitnessSearch {
    int max_c = 2;
    bool deterministic_locals = true;
    // restrict to witnesses whose locals are identical across sites; whether
    // the three-state model admits one is left to the search
    bool exchangeable_locals = false;
    double tol = 1e-9;
};

// Exhaustive search over deterministic local assignments (site, prep, c) ->
// lambda, solving a feasibility LP over weight(c) for each. Lexicographic
// enumeration; the first witness wins. NotFound (= nullopt) is exhaustive
// within the searched class only.
std::optional<CCWitness> find_cc_witness(const CondDist& dist, const WitnessSearch& search);

// The |Lambda_c| = 2 witness for the three-state model: c is uniform, device
// A maps psi -> l3/l1 and phi -> l3/l2 across the two pasts, device B the
// mirror image. Reconstructs the omega1 = omega2 = 1/2 table exactly.
CCWitness toy_witness();

// |Lambda_c| = 1 witness from the single-site marginals; reconstructs the
// distribution exactly iff it is preparation independent.
CCWitness trivial_witness(const CondDist& dist, double tol = 1e-9);

}  // namespace ontoscope::independence
