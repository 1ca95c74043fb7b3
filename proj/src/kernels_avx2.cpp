#include "ontoscope/kernels.hpp"

#include <immintrin.h>

// AVX2 kernels. Tail elements (n mod 4) fall back to the scalar stripe rule;
// because the vector blocks start at offset 0, absolute index i always lands
// in stripe i mod 4, exactly as in the scalar reference.

namespace ontoscope::kernels {

namespace {

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d vx = _mm256_loadu_pd(x + i);
        vy = _mm256_add_pd(vy, _mm256_mul_pd(va, vx));
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) {
        y[i] = y[i] + a * x[i];
    }
}

void scale_avx2(double a, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_mul_pd(_mm256_loadu_pd(y + i), va));
    }
    for (; i < n; ++i) {
        y[i] *= a;
    }
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    }
    alignas(32) double s[4];
    _mm256_store_pd(s, acc);
    for (; i < n; ++i) {
        s[i & 3] += x[i];
    }
    return (s[0] + s[1]) + (s[2] + s[3]);
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    alignas(32) double s[4];
    _mm256_store_pd(s, acc);
    for (; i < n; ++i) {
        s[i & 3] += x[i] * y[i];
    }
    return (s[0] + s[1]) + (s[2] + s[3]);
}

double sum_abs_diff_avx2(const double* x, const double* y, std::size_t n) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign_mask, d));
    }
    alignas(32) double s[4];
    _mm256_store_pd(s, acc);
    for (; i < n; ++i) {
        double d = x[i] - y[i];
        s[i & 3] += d < 0 ? -d : d;
    }
    return (s[0] + s[1]) + (s[2] + s[3]);
}

double sum_min_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_min_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    alignas(32) double s[4];
    _mm256_store_pd(s, acc);
    for (; i < n; ++i) {
        s[i & 3] += (y[i] < x[i]) ? y[i] : x[i];
    }
    return (s[0] + s[1]) + (s[2] + s[3]);
}

double max_abs_avx2(const double* x, std::size_t n) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x + i)));
    }
    alignas(32) double s[4];
    _mm256_store_pd(s, acc);
    for (; i < n; ++i) {
        double v = x[i] < 0 ? -x[i] : x[i];
        if (v > s[i & 3]) s[i & 3] = v;
    }
    double a = (s[1] > s[0]) ? s[1] : s[0];
    double b = (s[3] > s[2]) ? s[3] : s[2];
    return (b > a) ? b : a;
}

}  // namespace

const Ops* avx2_impl() {
    static const Ops ops{
        "avx2",
        axpy_avx2,
        scale_avx2,
        sum_avx2,
        dot_avx2,
        sum_abs_diff_avx2,
        sum_min_avx2,
        max_abs_avx2,
    };
    return &ops;
}

}  // namespace ontoscope::kernels
