#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ontoscope/empirical.hpp"
#include "ontoscope/errors.hpp"
#include "ontoscope/permutation.hpp"
#include "ontoscope/tuples.hpp"

namespace ontoscope {

struct OnticSpace {
    std::vector<std::string> labels;

    OnticSpace() = default;
    explicit OnticSpace(std::vector<std::string> lbls);

    int size() const { return static_cast<int>(labels.size()); }
    int index(const std::string& label) const;
    bool operator==(const OnticSpace& other) const { return labels == other.labels; }
};

// A single probability distribution over an ontic space.
struct Dist {
    OnticSpace space;
    std::vector<double> p;

    Dist() = default;
    Dist(OnticSpace s, std::vector<double> values) : space(std::move(s)), p(std::move(values)) {}
};

// Dense conditional distribution mu(lambda_1..lambda_n | p_1..p_n) over a
// shared per-site ontic space. Rows are preparation contexts; entries within
// a row enumerate ontic tuples.
class CondDist {
public:
    CondDist() = default;
    CondDist(OnticSpace space, std::vector<std::vector<std::string>> prep_sets);

    int sites() const { return static_cast<int>(prep_sets_.size()); }
    const OnticSpace& space() const { return space_; }
    const std::vector<std::vector<std::string>>& prep_sets() const { return prep_sets_; }

    long context_count() const { return contexts_; }
    long lambda_count() const { return lambdas_; }

    double& at(long ctx, long lam) { return table_[ctx * lambdas_ + lam]; }
    double at(long ctx, long lam) const { return table_[ctx * lambdas_ + lam]; }
    std::span<const double> row(long ctx) const {
        return {table_.data() + ctx * lambdas_, static_cast<std::size_t>(lambdas_)};
    }
    std::span<double> row(long ctx) {
        return {table_.data() + ctx * lambdas_, static_cast<std::size_t>(lambdas_)};
    }

    std::vector<int> prep_radices() const;
    std::vector<int> lambda_radices() const;

    long context_index(std::span<const std::string> preps) const;
    std::string context_key(long ctx) const;
    std::string lambda_key(long lam) const;

    // true when every site draws preparations from the same label set
    bool shared_prep_set() const;

private:
    OnticSpace space_;
    std::vector<std::vector<std::string>> prep_sets_;
    long contexts_ = 0;
    long lambdas_ = 0;
    std::vector<double> table_;
};

// Measurement response functions xi(o | lambda_1..lambda_m) on an ontic
// tuple space.
struct ResponseFunctions {
    OnticSpace space;
    int sites = 0;
    std::vector<std::string> outcomes;
    std::vector<double> xi;  // [outcome * lambda_tuples + lambda]

    long lambda_count() const;
    double at(int o, long lam) const { return xi[o * lambda_count() + lam]; }
    double& at(int o, long lam) { return xi[o * lambda_count() + lam]; }
    std::span<const double> outcome_row(int o) const {
        return {xi.data() + o * lambda_count(), static_cast<std::size_t>(lambda_count())};
    }
    int outcome_index(const std::string& label) const;
};

struct OntologicalModel {
    OnticSpace space;
    CondDist preps;
    ResponseFunctions responses;
};

struct Violation {
    std::string kind;   // "normalization", "nonnegativity", "range", "arity"
    std::string where;  // location in the model
    double magnitude = 0.0;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks distribution normalization/nonnegativity everywhere and response
// normalization (sum_o xi = 1) on every ontic tuple reachable with positive
// probability under some preparation. Unreachable tuples are exempt: the
// three-state model's response functions are deliberately sub-normalized on
// the never-prepared (l3,l3) cell, and flagging that here would make the
// model unusable while the exclusion checker exists precisely to hunt such
// gaps on product-form inputs.
ValidationReport validate(const OntologicalModel& model, double tol = 1e-9);

// p(o | p_vec) = sum_lambda xi(o, lambda) mu(lambda | p_vec)
EmpiricalModel operational_table(const OntologicalModel& model, double tol = 1e-9);

// (1/2) sum |d1 - d2|; equals 1 - sum min(d1, d2) on finite spaces
double trace_distance(const Dist& d1, const Dist& d2);

struct OverlapReport {
    double omega = 0.0;
    double distance = 0.0;
    std::vector<std::string> delta;  // ontic labels carrying joint support
    std::vector<std::pair<std::string, double>> per_prep_mass;
};

// Eq.-2 style overlap of two distributions labelled by preparations.
OverlapReport overlap_of(const Dist& a, const Dist& b,
                         const std::string& label_a, const std::string& label_b,
                         double support_tol = 1e-12);

// Single-site epistemic overlap between preparations p and q at `site`.
// Requires well-defined marginals there (subsystem condition).
OverlapReport overlap(const OntologicalModel& model, const std::string& p,
                      const std::string& q, int site, double tol = 1e-9);

// Single-site marginal; throws IllDefinedMarginal with the two conflicting
// conditioning contexts if off-site preparations influence it.
CondDist marginal(const CondDist& dist, int site, double tol = 1e-9);

// Convenience: the marginal at `site` conditioned on preparation label p.
Dist marginal_dist(const CondDist& dist, int site, const std::string& p, double tol = 1e-9);

// Permutation action on sites: both the ontic tuple and the preparation
// tuple are relabelled by the inverse permutation.
CondDist permute(const CondDist& dist, const Permutation& pi);

// Invariance under all transpositions (they generate the symmetric group).
bool is_symmetric(const CondDist& dist, double tol = 1e-9);

// Average over all n! site permutations.
CondDist symmetrize(const CondDist& dist);

// Product of independent blocks: sites concatenate.
CondDist tensor(const CondDist& a, const CondDist& b);

// Product of single-site distributions (Eq.-3 form).
CondDist product(const std::vector<CondDist>& factors);

// The three-ontic-state model: supp mu_psi = {l1,l3}, supp mu_phi = {l2,l3},
// overlap region {l3}; region masses per the two-device table, response
// functions the four not(...) outcomes with the 1 / 1/2 / 0 case split.
// Requires omega1, omega2 > 0 and omega1 + omega2 <= 1.
OntologicalModel toy_model(double omega1, double omega2);

// Names for the toy model's labels, shared with the CLI defaults.
inline const char* kPsi = "psi";
inline const char* kPhi = "phi";

struct SampleResult {
    std::map<std::string, std::int64_t> counts;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    std::string generator;  // PRNG name, recorded for reproducibility
};

// Draws lambda from preps(.|p_vec) then an outcome from xi(.|lambda).
SampleResult sample(const OntologicalModel& model, std::span<const std::string> prep,
                    std::int64_t shots, std::uint64_t seed);

// max over contexts of the half-L1 distance between rows; the conditional
// trace distance convention used by the de Finetti bounds as well.
double conditional_trace_distance(const CondDist& a, const CondDist& b);

}  // namespace ontoscope
