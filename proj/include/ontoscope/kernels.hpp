#pragma once

#include <cstddef>

namespace ontoscope::kernels {

// Data-parallel double kernels used by the LP pivots and the distribution
// arithmetic. Two implementations ship: a scalar reference and an AVX2
// variant selected at runtime. Both follow the same arithmetic contract so
// their results are bit-identical, which the equivalence tests assert:
//
//  * elementwise ops (axpy, scale) perform one multiply and one add per
//    element, never an FMA;
//  * reductions (sum, dot, sum_abs_diff, sum_min, max_abs) accumulate into
//    four stripes, element i into stripe i mod 4, and combine the stripes
//    as (s0+s1)+(s2+s3);
//  * min(a,b) means b < a ? b : a, abs is a sign-bit clear.
struct Ops {
    const char* name;
    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // y[i] *= a
    void (*scale)(double a, double* y, std::size_t n);
    double (*sum)(const double* x, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);
    // sum |x[i] - y[i]|
    double (*sum_abs_diff)(const double* x, const double* y, std::size_t n);
    // sum min(x[i], y[i])
    double (*sum_min)(const double* x, const double* y, std::size_t n);
    double (*max_abs)(const double* x, std::size_t n);
};

const Ops& scalar();

// Null when the binary was built without AVX2 support or the CPU lacks it.
const Ops* avx2();

// Dispatch decided once per process: ONTOSCOPE_KERNELS=scalar|avx2 forces a
// variant, otherwise the best available one is used.
const Ops& active();

}  // namespace ontoscope::kernels
