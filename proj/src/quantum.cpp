#include "ontoscope/quantum.hpp"

#include <cmath>

#include "ontoscope/errors.hpp"

namespace ontoscope::quantum {

namespace {

bool is_power_of_two(std::size_t n) {
    return n > 0 && (n & (n - 1)) == 0;
}

}  // namespace

int PureState::qubits() const {
    int k = 0;
    std::size_t n = amplitudes.size();
    while (n > 1) {
        n >>= 1;
        ++k;
    }
    return k;
}

double PureState::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return s;
}

PureState make_state(std::vector<Complex> amplitudes) {
    if (!is_power_of_two(amplitudes.size())) {
        throw DomainError("state length must be a power of two");
    }
    PureState st{std::move(amplitudes)};
    if (std::fabs(st.norm_sq() - 1.0) > 1e-12) {
        throw DomainError("state is not normalized");
    }
    return st;
}

Complex inner(const PureState& a, const PureState& b) {
    if (a.amplitudes.size() != b.amplitudes.size()) {
        throw DimensionMismatch("inner product of states with different dimension");
    }
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
        s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return s;
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<Complex> out(a.amplitudes.size() * b.amplitudes.size());
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
        for (std::size_t j = 0; j < b.amplitudes.size(); ++j) {
            out[i * b.amplitudes.size() + j] = a.amplitudes[i] * b.amplitudes[j];
        }
    }
    PureState st{std::move(out)};
    return st;
}

MeasurementCheck validate_measurement(const Measurement& m, double tol) {
    const int d = m.dim;
    MeasurementCheck check;
    std::vector<Complex> total(d * d, 0.0);
    for (const auto& eff : m.outcomes) {
        if (static_cast<int>(eff.matrix.size()) != d * d) {
            return {false, "effect '" + eff.label + "' has wrong dimension"};
        }
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) {
                Complex v = eff.matrix[r * d + c];
                if (std::abs(v - std::conj(eff.matrix[c * d + r])) > tol) {
                    return {false, "effect '" + eff.label + "' is not Hermitian"};
                }
                total[r * d + c] += v;
            }
        }
        // idempotency: spectrum in {0,1}
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) {
                Complex sq = 0.0;
                for (int t = 0; t < d; ++t) sq += eff.matrix[r * d + t] * eff.matrix[t * d + c];
                if (std::abs(sq - eff.matrix[r * d + c]) > 1e-11) {
                    return {false, "effect '" + eff.label + "' is not a projector"};
                }
            }
        }
    }
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            Complex want = (r == c) ? 1.0 : 0.0;
            if (std::abs(total[r * d + c] - want) > tol) {
                return {false, "effects do not sum to the identity"};
            }
        }
    }
    return check;
}

PreparationPair canonical_pair(double theta) {
    if (!(theta > 0.0) || theta > M_PI / 2.0 + 1e-15) {
        throw DomainError("canonical pair requires 0 < theta <= pi/2");
    }
    PureState psi = make_state({Complex(1.0, 0.0), Complex(0.0, 0.0)});
    PureState phi = make_state({Complex(std::cos(theta), 0.0), Complex(std::sin(theta), 0.0)});
    return PreparationPair{std::move(psi), std::move(phi), theta};
}

long min_subsystems(double theta) {
    if (!(theta > 0.0) || theta > M_PI / 2.0 + 1e-15) {
        throw DomainError("min_subsystems requires 0 < theta <= pi/2");
    }
    const double denom = std::log2(std::tan(theta / 2.0) + 1.0);
    const double raw = 1.0 / denom;
    if (!(raw < 1e6)) {
        throw OverflowError("required subsystem count exceeds 10^6");
    }
    // guard the ceiling against values sitting one ulp above an integer
    long m = static_cast<long>(std::ceil(raw - 1e-9));
    return m < 1 ? 1 : m;
}

Measurement pbr_measurement(const PreparationPair& pair) {
    const double ol = std::abs(inner(pair.psi, pair.phi));
    if (std::fabs(ol - M_SQRT1_2) > 1e-9) {
        throw UnsupportedPair("conclusive exclusion basis implemented for overlap sqrt(2)/2 only");
    }
    if (pair.psi.amplitudes.size() != 2 || pair.phi.amplitudes.size() != 2) {
        throw UnsupportedPair("expected single-qubit preparations");
    }

    // Orthogonal complements with opposite handedness: psi_p rotates +90,
    // phi_p rotates -90, so that <psi_p|phi_p> = -<psi|phi>. That sign is
    // what makes the four two-qubit vectors below mutually orthogonal.
    const PureState psi_p =
        make_state({-std::conj(pair.psi.amplitudes[1]), std::conj(pair.psi.amplitudes[0])});
    const PureState phi_p =
        make_state({std::conj(pair.phi.amplitudes[1]), -std::conj(pair.phi.amplitudes[0])});

    const double r = M_SQRT1_2;
    auto basis_vec = [&](const PureState& a, const PureState& b,
                         const PureState& c, const PureState& d) {
        PureState ab = tensor(a, b);
        PureState cd = tensor(c, d);
        std::vector<Complex> v(4);
        for (int i = 0; i < 4; ++i) v[i] = r * (ab.amplitudes[i] + cd.amplitudes[i]);
        return v;
    };

    // each vector is orthogonal to one product preparation
    std::vector<std::pair<std::string, std::vector<Complex>>> basis;
    basis.emplace_back(exclusion_outcome_label("psi,psi"),
                       basis_vec(pair.psi, psi_p, psi_p, pair.psi));
    basis.emplace_back(exclusion_outcome_label("psi,phi"),
                       basis_vec(pair.psi, phi_p, psi_p, pair.phi));
    basis.emplace_back(exclusion_outcome_label("phi,psi"),
                       basis_vec(pair.phi, psi_p, phi_p, pair.psi));
    basis.emplace_back(exclusion_outcome_label("phi,phi"),
                       basis_vec(pair.phi, phi_p, phi_p, pair.phi));

    Measurement meas;
    meas.dim = 4;
    for (auto& [label, vec] : basis) {
        Measurement::Effect eff;
        eff.label = label;
        eff.matrix.assign(16, 0.0);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                eff.matrix[i * 4 + j] = vec[i] * std::conj(vec[j]);
            }
        }
        meas.outcomes.push_back(std::move(eff));
    }

    MeasurementCheck check = validate_measurement(meas);
    if (!check.ok) {
        throw NumericalBreakdown("constructed exclusion basis failed validation: " + check.detail);
    }
    return meas;
}

EmpiricalModel born_table(const PreparationPair& pair, const Measurement& meas) {
    int m = 0;
    int d = meas.dim;
    while (d > 1) {
        if (d % 2 != 0) throw DimensionMismatch("measurement dimension is not a power of two");
        d /= 2;
        ++m;
    }
    if (pair.psi.amplitudes.size() != 2) {
        throw DimensionMismatch("born_table expects single-qubit preparations");
    }

    EmpiricalModel em;
    em.sites = m;
    em.prep_sets.assign(m, {"psi", "phi"});
    for (const auto& eff : meas.outcomes) em.outcomes.push_back(eff.label);
    em.table.assign(em.context_count() * em.outcome_count(), 0.0);

    for (long ctx = 0; ctx < em.context_count(); ++ctx) {
        // m-fold product state for this context
        PureState joint = make_state({Complex(1.0, 0.0)});
        long code = ctx;
        std::vector<int> digits(m);
        for (int i = m - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(code % 2);
            code /= 2;
        }
        for (int i = 0; i < m; ++i) {
            joint = tensor(joint, digits[i] == 0 ? pair.psi : pair.phi);
        }
        for (int o = 0; o < em.outcome_count(); ++o) {
            const auto& mat = meas.outcomes[o].matrix;
            Complex acc = 0.0;
            for (int r = 0; r < meas.dim; ++r) {
                Complex rowdot = 0.0;
                for (int c = 0; c < meas.dim; ++c) {
                    rowdot += mat[r * meas.dim + c] * joint.amplitudes[c];
                }
                acc += std::conj(joint.amplitudes[r]) * rowdot;
            }
            em.at(ctx, o) = acc.real();
        }
        double total = 0.0;
        for (int o = 0; o < em.outcome_count(); ++o) total += em.at(ctx, o);
        if (std::fabs(total - 1.0) > 1e-12) {
            throw NumericalBreakdown("born rule row failed to normalize");
        }
    }
    return em;
}

ExclusionCertificate is_conclusive_exclusion(const EmpiricalModel& table, double tol) {
    ExclusionCertificate cert;
    const long ctxs = table.context_count();
    if (ctxs != table.outcome_count()) {
        throw LabelMismatch("exclusion requires as many outcomes as joint preparations");
    }
    for (long ctx = 0; ctx < ctxs; ++ctx) {
        const std::string key = table.context_key(ctx);
        const int o = table.outcome_index(exclusion_outcome_label(key));
        if (o < 0) {
            throw LabelMismatch("no outcome labelled '" + exclusion_outcome_label(key) + "'");
        }
        const double v = table.at(ctx, o);
        if (std::fabs(v) > tol) {
            cert.violations.push_back({key, table.outcomes[o], v});
        }
    }
    cert.conclusive = cert.violations.empty();
    return cert;
}

}  // namespace ontoscope::quantum
