#include "ontoscope/kernels.hpp"

#include <cmath>

// Reference kernels. Compiled with -ffp-contract=off so that mul+add stays
// two roundings, matching the AVX2 path lane for lane.

namespace ontoscope::kernels {

namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = y[i] + a * x[i];
    }
}

void scale_scalar(double a, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] *= a;
    }
}

double sum_scalar(const double* x, std::size_t n) {
    double s[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        s[i & 3] += x[i];
    }
    return (s[0] + s[1]) + (s[2] + s[3]);
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        s[i & 3] += x[i] * y[i];
    }
    return (s[0] + s[1]) + (s[2] + s[3]);
}

double sum_abs_diff_scalar(const double* x, const double* y, std::size_t n) {
    double s[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        s[i & 3] += std::fabs(x[i] - y[i]);
    }
    return (s[0] + s[1]) + (s[2] + s[3]);
}

double sum_min_scalar(const double* x, const double* y, std::size_t n) {
    double s[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        // matches _mm256_min_pd(x, y): second operand wins ties
        s[i & 3] += (y[i] < x[i]) ? y[i] : x[i];
    }
    return (s[0] + s[1]) + (s[2] + s[3]);
}

double max_abs_scalar(const double* x, std::size_t n) {
    double s[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        double v = std::fabs(x[i]);
        if (v > s[i & 3]) s[i & 3] = v;
    }
    double a = (s[1] > s[0]) ? s[1] : s[0];
    double b = (s[3] > s[2]) ? s[3] : s[2];
    return (b > a) ? b : a;
}

}  // namespace

const Ops& scalar() {
    static const Ops ops{
        "scalar",
        axpy_scalar,
        scale_scalar,
        sum_scalar,
        dot_scalar,
        sum_abs_diff_scalar,
        sum_min_scalar,
        max_abs_scalar,
    };
    return ops;
}

}  // namespace ontoscope::kernels
