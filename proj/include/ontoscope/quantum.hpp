#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ontoscope/empirical.hpp"

namespace ontoscope::quantum {

using Complex = std::complex<double>;

struct PureState {
    std::vector<Complex> amplitudes;  // length 2^k

    int qubits() const;
    double norm_sq() const;
};

// Throws DomainError unless the length is a power of two and the squared
// magnitudes sum to 1 within 1e-12.
PureState make_state(std::vector<Complex> amplitudes);

Complex inner(const PureState& a, const PureState& b);
PureState tensor(const PureState& a, const PureState& b);

struct Measurement {
    struct Effect {
        std::string label;
        std::vector<Complex> matrix;  // dense row-major, dim x dim
    };
    int dim = 0;
    std::vector<Effect> outcomes;
};

// Hermiticity, completeness (effects sum to identity) and, for the
// projective measurements built here, idempotency -- which pins the spectrum
// to {0,1}.
struct MeasurementCheck {
    bool ok = true;
    std::string detail;
};
MeasurementCheck validate_measurement(const Measurement& m, double tol = 1e-12);

struct PreparationPair {
    PureState psi;
    PureState phi;
    double theta = 0.0;  // angular separation, |<psi|phi>| = cos(theta)
};

// psi = (1,0), phi = (cos theta, sin theta); requires 0 < theta <= pi/2.
PreparationPair canonical_pair(double theta);

// ceil(1 / log2(tan(theta/2) + 1)); throws OverflowError past 10^6.
long min_subsystems(double theta);

// The four-outcome entangled-basis measurement on two qubits whose born
// table realizes conclusive exclusion for the canonical pair at overlap
// sqrt(2)/2. The construction is verified, not assumed: see the tests and
// is_conclusive_exclusion.
Measurement pbr_measurement(const PreparationPair& pair);

// entry(o | p_vec) = <p_vec| M_o |p_vec> over all m-fold products of
// {psi, phi}.
EmpiricalModel born_table(const PreparationPair& pair, const Measurement& meas);

struct ExclusionCertificate {
    bool conclusive = false;
    struct Cell {
        std::string prep;
        std::string outcome;
        double value;
    };
    std::vector<Cell> violations;
};

// entry(not(p_vec) | p_vec) = 0 for every joint preparation; the outcome
// labels must be in bijection with the preparations via not(...).
ExclusionCertificate is_conclusive_exclusion(const EmpiricalModel& table, double tol = 1e-12);

}  // namespace ontoscope::quantum
