#include "ontoscope/ontology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ontoscope/kernels.hpp"
#include "ontoscope/rng.hpp"

namespace ontoscope {

OnticSpace::OnticSpace(std::vector<std::string> lbls) : labels(std::move(lbls)) {
    if (labels.empty()) throw DomainError("ontic space must be non-empty");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw DomainError("ontic labels must be unique");
}

int OnticSpace::index(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return static_cast<int>(i);
    }
    throw LabelMismatch("unknown ontic label '" + label + "'");
}

CondDist::CondDist(OnticSpace space, std::vector<std::vector<std::string>> prep_sets)
    : space_(std::move(space)), prep_sets_(std::move(prep_sets)) {
    if (prep_sets_.empty()) throw DomainError("conditional distribution needs at least one site");
    for (const auto& ps : prep_sets_) {
        if (ps.empty()) throw DomainError("every site needs a non-empty preparation set");
    }
    contexts_ = 1;
    lambdas_ = 1;
    for (const auto& ps : prep_sets_) contexts_ *= static_cast<long>(ps.size());
    for (int i = 0; i < sites(); ++i) lambdas_ *= space_.size();
    table_.assign(contexts_ * lambdas_, 0.0);
}

std::vector<int> CondDist::prep_radices() const {
    std::vector<int> r(prep_sets_.size());
    for (std::size_t i = 0; i < prep_sets_.size(); ++i) r[i] = static_cast<int>(prep_sets_[i].size());
    return r;
}

std::vector<int> CondDist::lambda_radices() const {
    return std::vector<int>(sites(), space_.size());
}

long CondDist::context_index(std::span<const std::string> preps) const {
    if (static_cast<int>(preps.size()) != sites()) {
        throw ArityMismatch("joint preparation has wrong number of sites");
    }
    std::vector<int> digits(sites());
    for (int i = 0; i < sites(); ++i) {
        int idx = -1;
        for (std::size_t k = 0; k < prep_sets_[i].size(); ++k) {
            if (prep_sets_[i][k] == preps[i]) idx = static_cast<int>(k);
        }
        if (idx < 0) throw LabelMismatch("unknown preparation label '" + preps[i] + "'");
        digits[i] = idx;
    }
    auto r = prep_radices();
    return encode_tuple(digits, r);
}

std::string CondDist::context_key(long ctx) const {
    auto r = prep_radices();
    auto digits = decode_tuple(ctx, r);
    std::vector<std::string> parts(sites());
    for (int i = 0; i < sites(); ++i) parts[i] = prep_sets_[i][digits[i]];
    return join_key(parts);
}

std::string CondDist::lambda_key(long lam) const {
    auto r = lambda_radices();
    auto digits = decode_tuple(lam, r);
    std::vector<std::string> parts(sites());
    for (int i = 0; i < sites(); ++i) parts[i] = space_.labels[digits[i]];
    return join_key(parts);
}

bool CondDist::shared_prep_set() const {
    for (int i = 1; i < sites(); ++i) {
        if (prep_sets_[i] != prep_sets_[0]) return false;
    }
    return true;
}

long ResponseFunctions::lambda_count() const {
    long n = 1;
    for (int i = 0; i < sites; ++i) n *= space.size();
    return n;
}

int ResponseFunctions::outcome_index(const std::string& label) const {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i] == label) return static_cast<int>(i);
    }
    return -1;
}

std::string ValidationReport::to_string() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.kind << " at " << v.where << " (magnitude " << v.magnitude << ")\n";
    }
    return os.str();
}

ValidationReport validate(const OntologicalModel& model, double tol) {
    ValidationReport report;
    const CondDist& preps = model.preps;
    const ResponseFunctions& resp = model.responses;

    if (!(preps.space() == model.space)) {
        report.violations.push_back({"arity", "preparation distribution ontic space differs from model space", 0.0});
    }
    if (!(resp.space == model.space)) {
        report.violations.push_back({"arity", "response ontic space differs from model space", 0.0});
    }
    if (resp.sites > preps.sites()) {
        report.violations.push_back({"arity", "responses act on more sites than the preparations provide",
                                     static_cast<double>(resp.sites - preps.sites())});
        return report;
    }

    for (long ctx = 0; ctx < preps.context_count(); ++ctx) {
        double total = 0.0;
        for (long lam = 0; lam < preps.lambda_count(); ++lam) {
            double v = preps.at(ctx, lam);
            if (v < -tol) {
                report.violations.push_back({"nonnegativity",
                                             "mu(" + preps.lambda_key(lam) + " | " + preps.context_key(ctx) + ")", -v});
            }
            total += v;
        }
        if (std::fabs(total - 1.0) > tol) {
            report.violations.push_back({"normalization", "mu(. | " + preps.context_key(ctx) + ")",
                                         std::fabs(total - 1.0)});
        }
    }

    // response range first, everywhere
    for (int o = 0; o < static_cast<int>(resp.outcomes.size()); ++o) {
        for (long lam = 0; lam < resp.lambda_count(); ++lam) {
            double v = resp.at(o, lam);
            if (v < -tol || v > 1.0 + tol) {
                std::string where = "xi(" + resp.outcomes[o] + ", lambda#" + std::to_string(lam) + ")";
                report.violations.push_back({"range", where, std::max(-v, v - 1.0)});
            }
        }
    }

    // Eq.-1 normalization on reachable tuples only. When the responses act
    // on a prefix of the sites, reachability is assessed on that prefix.
    const long resp_lams = resp.lambda_count();
    std::vector<char> reachable(resp_lams, 0);
    const int per_site = preps.space().size();
    std::vector<int> full_radices = preps.lambda_radices();
    for (long ctx = 0; ctx < preps.context_count(); ++ctx) {
        for (long lam = 0; lam < preps.lambda_count(); ++lam) {
            if (preps.at(ctx, lam) > 1e-12) {
                auto digits = decode_tuple(lam, full_radices);
                long prefix = 0;
                for (int i = 0; i < resp.sites; ++i) prefix = prefix * per_site + digits[i];
                reachable[prefix] = 1;
            }
        }
    }
    std::vector<int> resp_radices(resp.sites, per_site);
    for (long lam = 0; lam < resp_lams; ++lam) {
        if (!reachable[lam]) continue;
        double total = 0.0;
        for (std::size_t o = 0; o < resp.outcomes.size(); ++o) total += resp.at(static_cast<int>(o), lam);
        if (std::fabs(total - 1.0) > tol) {
            auto digits = decode_tuple(lam, resp_radices);
            std::vector<std::string> parts(resp.sites);
            for (int i = 0; i < resp.sites; ++i) parts[i] = preps.space().labels[digits[i]];
            report.violations.push_back({"normalization", "sum_o xi(o, (" + join_key(parts) + "))",
                                         std::fabs(total - 1.0)});
        }
    }
    return report;
}

EmpiricalModel operational_table(const OntologicalModel& model, double tol) {
    ValidationReport report = validate(model, tol);
    if (!report.ok()) {
        throw InvalidModel("operational_table requires a valid model:\n" + report.to_string());
    }
    const auto& k = kernels::active();
    const CondDist& preps = model.preps;
    const ResponseFunctions& resp = model.responses;

    EmpiricalModel em;
    em.sites = preps.sites();
    em.prep_sets = preps.prep_sets();
    em.outcomes = resp.outcomes;
    em.table.assign(preps.context_count() * resp.outcomes.size(), 0.0);

    if (resp.sites == preps.sites()) {
        for (long ctx = 0; ctx < preps.context_count(); ++ctx) {
            auto mu = preps.row(ctx);
            for (int o = 0; o < em.outcome_count(); ++o) {
                em.at(ctx, o) = k.dot(resp.outcome_row(o).data(), mu.data(), mu.size());
            }
        }
    } else {
        // responses act on the leading `resp.sites` sites; marginalize the rest
        const long resp_lams = resp.lambda_count();
        const long rest = preps.lambda_count() / resp_lams;
        std::vector<double> margin(resp_lams);
        for (long ctx = 0; ctx < preps.context_count(); ++ctx) {
            std::fill(margin.begin(), margin.end(), 0.0);
            auto mu = preps.row(ctx);
            for (long lam = 0; lam < preps.lambda_count(); ++lam) {
                margin[lam / rest] += mu[lam];
            }
            for (int o = 0; o < em.outcome_count(); ++o) {
                em.at(ctx, o) = k.dot(resp.outcome_row(o).data(), margin.data(), margin.size());
            }
        }
    }
    return em;
}

double trace_distance(const Dist& d1, const Dist& d2) {
    if (!(d1.space == d2.space)) throw SpaceMismatch("trace distance needs a common ontic space");
    if (d1.p.size() != d2.p.size()) throw SpaceMismatch("distribution length mismatch");
    const auto& k = kernels::active();
    return 0.5 * k.sum_abs_diff(d1.p.data(), d2.p.data(), d1.p.size());
}

OverlapReport overlap_of(const Dist& a, const Dist& b,
                         const std::string& label_a, const std::string& label_b,
                         double support_tol) {
    if (!(a.space == b.space)) throw SpaceMismatch("overlap needs a common ontic space");
    const auto& k = kernels::active();
    OverlapReport rep;
    rep.distance = trace_distance(a, b);
    rep.omega = k.sum_min(a.p.data(), b.p.data(), a.p.size());
    double mass_a = 0.0, mass_b = 0.0;
    for (std::size_t i = 0; i < a.p.size(); ++i) {
        double lo = std::min(a.p[i], b.p[i]);
        if (lo > support_tol) {
            rep.delta.push_back(a.space.labels[i]);
            mass_a += a.p[i];
            mass_b += b.p[i];
        }
    }
    rep.per_prep_mass.emplace_back(label_a, mass_a);
    rep.per_prep_mass.emplace_back(label_b, mass_b);
    return rep;
}

CondDist marginal(const CondDist& dist, int site, double tol) {
    if (site < 0 || site >= dist.sites()) throw DomainError("site index out of range");
    const auto prep_r = dist.prep_radices();
    const auto lam_r = dist.lambda_radices();
    const int nprep = prep_r[site];
    const int nlam = dist.space().size();

    CondDist out(dist.space(), {dist.prep_sets()[site]});
    std::vector<char> seen(nprep, 0);
    std::vector<long> first_ctx(nprep, -1);

    std::vector<int> pd(dist.sites());
    std::vector<int> ld(dist.sites());
    std::vector<double> acc(nlam, 0.0);
    for (long ctx = 0; ctx < dist.context_count(); ++ctx) {
        decode_tuple(ctx, prep_r, pd);
        const int p = pd[site];
        std::fill(acc.begin(), acc.end(), 0.0);
        for (long lam = 0; lam < dist.lambda_count(); ++lam) {
            decode_tuple(lam, lam_r, ld);
            acc[ld[site]] += dist.at(ctx, lam);
        }
        if (!seen[p]) {
            seen[p] = 1;
            first_ctx[p] = ctx;
            for (int l = 0; l < nlam; ++l) out.at(p, l) = acc[l];
        } else {
            for (int l = 0; l < nlam; ++l) {
                if (std::fabs(out.at(p, l) - acc[l]) > tol) {
                    throw IllDefinedMarginal(
                        "site " + std::to_string(site) + " marginal for preparation '" +
                            dist.prep_sets()[site][p] + "' depends on other sites' settings",
                        dist.context_key(first_ctx[p]), dist.context_key(ctx));
                }
            }
        }
    }
    return out;
}

Dist marginal_dist(const CondDist& dist, int site, const std::string& p, double tol) {
    CondDist m = marginal(dist, site, tol);
    std::vector<std::string> key{p};
    long ctx = m.context_index(key);
    auto row = m.row(ctx);
    return Dist(dist.space(), std::vector<double>(row.begin(), row.end()));
}

OverlapReport overlap(const OntologicalModel& model, const std::string& p,
                      const std::string& q, int site, double tol) {
    Dist dp = marginal_dist(model.preps, site, p, tol);
    Dist dq = marginal_dist(model.preps, site, q, tol);
    return overlap_of(dp, dq, p, q);
}

CondDist permute(const CondDist& dist, const Permutation& pi) {
    if (pi.size() != dist.sites()) throw ArityMismatch("permutation degree != site count");
    if (!dist.shared_prep_set()) {
        throw ArityMismatch("permuting sites requires a shared preparation set");
    }
    const Permutation inv = pi.inverse();
    const auto prep_r = dist.prep_radices();
    const auto lam_r = dist.lambda_radices();
    CondDist out(dist.space(), dist.prep_sets());

    std::vector<int> pd(dist.sites()), ld(dist.sites());
    std::vector<int> ps(dist.sites()), ls(dist.sites());
    for (long ctx = 0; ctx < dist.context_count(); ++ctx) {
        decode_tuple(ctx, prep_r, pd);
        for (int i = 0; i < dist.sites(); ++i) ps[i] = pd[inv(i)];
        long src_ctx = encode_tuple(ps, prep_r);
        for (long lam = 0; lam < dist.lambda_count(); ++lam) {
            decode_tuple(lam, lam_r, ld);
            for (int i = 0; i < dist.sites(); ++i) ls[i] = ld[inv(i)];
            out.at(ctx, lam) = dist.at(src_ctx, encode_tuple(ls, lam_r));
        }
    }
    return out;
}

bool is_symmetric(const CondDist& dist, double tol) {
    if (!dist.shared_prep_set()) {
        throw ArityMismatch("symmetry requires a shared preparation set");
    }
    const auto& k = kernels::active();
    for (int i = 0; i < dist.sites(); ++i) {
        for (int j = i + 1; j < dist.sites(); ++j) {
            CondDist perm = permute(dist, Permutation::transposition(dist.sites(), i, j));
            for (long ctx = 0; ctx < dist.context_count(); ++ctx) {
                auto a = dist.row(ctx);
                auto b = perm.row(ctx);
                std::vector<double> diff(a.begin(), a.end());
                for (std::size_t t = 0; t < diff.size(); ++t) diff[t] -= b[t];
                if (k.max_abs(diff.data(), diff.size()) > tol) return false;
            }
        }
    }
    return true;
}

CondDist symmetrize(const CondDist& dist) {
    auto perms = Permutation::all(dist.sites());
    CondDist out(dist.space(), dist.prep_sets());
    const double w = 1.0 / static_cast<double>(perms.size());
    for (const auto& pi : perms) {
        CondDist term = permute(dist, pi);
        for (long ctx = 0; ctx < out.context_count(); ++ctx) {
            for (long lam = 0; lam < out.lambda_count(); ++lam) {
                out.at(ctx, lam) += w * term.at(ctx, lam);
            }
        }
    }
    return out;
}

CondDist tensor(const CondDist& a, const CondDist& b) {
    if (!(a.space() == b.space())) throw SpaceMismatch("tensor factors must share the ontic space");
    std::vector<std::vector<std::string>> preps = a.prep_sets();
    for (const auto& ps : b.prep_sets()) preps.push_back(ps);
    CondDist out(a.space(), std::move(preps));
    const long bl = b.lambda_count();
    const long bc = b.context_count();
    for (long ca = 0; ca < a.context_count(); ++ca) {
        for (long cb = 0; cb < bc; ++cb) {
            long ctx = ca * bc + cb;
            for (long la = 0; la < a.lambda_count(); ++la) {
                const double va = a.at(ca, la);
                if (va == 0.0) continue;
                for (long lb = 0; lb < bl; ++lb) {
                    out.at(ctx, la * bl + lb) = va * b.at(cb, lb);
                }
            }
        }
    }
    return out;
}

CondDist product(const std::vector<CondDist>& factors) {
    if (factors.empty()) throw DomainError("product of zero factors");
    for (const auto& f : factors) {
        if (f.sites() != 1) throw DomainError("product expects single-site factors");
    }
    CondDist out = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
    return out;
}

OntologicalModel toy_model(double omega1, double omega2) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0) || omega1 + omega2 > 1.0) {
        throw DomainError("toy model requires omega1, omega2 > 0 with omega1 + omega2 <= 1");
    }
    OnticSpace space({"l1", "l2", "l3"});
    const int L1 = 0, L2 = 1, L3 = 2;
    std::vector<std::string> pp{kPsi, kPhi};
    CondDist preps(space, {pp, pp});

    auto lam = [&](int a, int b) { return static_cast<long>(a * 3 + b); };
    auto ctx = [&](int a, int b) { return static_cast<long>(a * 2 + b); };
    const int PSI = 0, PHI = 1;

    // The two-device table constrains region masses only, but the stated
    // supports make the placement unique: the non-overlap mass of psi sits
    // on l1 and of phi on l2, while the overlap region is the single point
    // l3. Writing Delta = {l3}:
    //   (psi,psi): (Delta,Delta')->(l3,l1), (Delta',Delta)->(l1,l3),
    //              (Delta',Delta')->(l1,l1)
    // and analogously with l2 for phi rows.
    preps.at(ctx(PSI, PSI), lam(L3, L1)) = omega1;
    preps.at(ctx(PSI, PSI), lam(L1, L3)) = omega1;
    preps.at(ctx(PSI, PSI), lam(L1, L1)) = 1.0 - 2.0 * omega1;

    preps.at(ctx(PSI, PHI), lam(L3, L2)) = omega1;
    preps.at(ctx(PSI, PHI), lam(L1, L3)) = omega2;
    preps.at(ctx(PSI, PHI), lam(L1, L2)) = 1.0 - omega1 - omega2;

    preps.at(ctx(PHI, PSI), lam(L3, L1)) = omega2;
    preps.at(ctx(PHI, PSI), lam(L2, L3)) = omega1;
    preps.at(ctx(PHI, PSI), lam(L2, L1)) = 1.0 - omega1 - omega2;

    preps.at(ctx(PHI, PHI), lam(L3, L2)) = omega2;
    preps.at(ctx(PHI, PHI), lam(L2, L3)) = omega2;
    preps.at(ctx(PHI, PHI), lam(L2, L2)) = 1.0 - 2.0 * omega2;

    ResponseFunctions resp;
    resp.space = space;
    resp.sites = 2;
    resp.outcomes = {
        exclusion_outcome_label("psi,psi"),
        exclusion_outcome_label("psi,phi"),
        exclusion_outcome_label("phi,psi"),
        exclusion_outcome_label("phi,phi"),
    };
    resp.xi.assign(4 * 9, 0.0);
    auto set = [&](int o, int a, int b, double v) { resp.at(o, lam(a, b)) = v; };
    // not(psi,psi)
    set(0, L2, L2, 1.0);
    set(0, L3, L2, 0.5);
    set(0, L2, L3, 0.5);
    // not(psi,phi)
    set(1, L2, L1, 1.0);
    set(1, L3, L1, 0.5);
    set(1, L2, L3, 0.5);
    // not(phi,psi)
    set(2, L1, L2, 1.0);
    set(2, L1, L3, 0.5);
    set(2, L3, L2, 0.5);
    // not(phi,phi)
    set(3, L1, L1, 1.0);
    set(3, L1, L3, 0.5);
    set(3, L3, L1, 0.5);
    // note sum_o xi(o, (l3,l3)) = 0: all four outcomes exclude the joint
    // overlap cell, which no preparation of this model ever reaches

    return OntologicalModel{space, std::move(preps), std::move(resp)};
}

SampleResult sample(const OntologicalModel& model, std::span<const std::string> prep,
                    std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) throw DomainError("shots must be >= 1");
    ValidationReport report = validate(model);
    if (!report.ok()) throw InvalidModel("sample requires a valid model:\n" + report.to_string());
    if (model.responses.sites != model.preps.sites()) {
        throw ArityMismatch("sample expects responses on all sites");
    }

    const long ctx = model.preps.context_index(prep);
    auto mu = model.preps.row(ctx);
    const int n_out = static_cast<int>(model.responses.outcomes.size());
    const long lams = model.preps.lambda_count();

    SampleResult res;
    res.shots = shots;
    res.seed = seed;
    res.generator = Xoshiro256::kName;
    for (const auto& o : model.responses.outcomes) res.counts[o] = 0;

    Xoshiro256 rng(seed);
    std::vector<double> xi_at(n_out);
    for (std::int64_t s = 0; s < shots; ++s) {
        int lam = rng.discrete(mu);
        if (lam < 0 || lam >= lams) throw NumericalBreakdown("drew an impossible ontic tuple");
        for (int o = 0; o < n_out; ++o) xi_at[o] = model.responses.at(o, lam);
        int o = rng.discrete(xi_at);
        if (o < 0) throw NumericalBreakdown("response functions vanish on a reachable tuple");
        ++res.counts[model.responses.outcomes[o]];
    }
    return res;
}

double conditional_trace_distance(const CondDist& a, const CondDist& b) {
    if (!(a.space() == b.space())) throw SpaceMismatch("conditional distance needs a common space");
    if (a.prep_sets() != b.prep_sets()) throw ShapeMismatch("conditional distance needs equal contexts");
    const auto& k = kernels::active();
    double worst = 0.0;
    for (long ctx = 0; ctx < a.context_count(); ++ctx) {
        double d = 0.5 * k.sum_abs_diff(a.row(ctx).data(), b.row(ctx).data(), a.lambda_count());
        worst = std::max(worst, d);
    }
    return worst;
}

}  // namespace ontoscope
