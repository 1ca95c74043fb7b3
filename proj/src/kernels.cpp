#include "ontoscope/kernels.hpp"

#include <cstdlib>
#include <string_view>

#include "ontoscope/errors.hpp"

namespace ontoscope::kernels {

#ifdef ONTOSCOPE_BUILD_AVX2
const Ops* avx2_impl();
#endif

const Ops* avx2() {
#ifdef ONTOSCOPE_BUILD_AVX2
    static const Ops* ops = __builtin_cpu_supports("avx2") ? avx2_impl() : nullptr;
    return ops;
#else
    return nullptr;
#endif
}

const Ops& active() {
    static const Ops& chosen = []() -> const Ops& {
        const char* env = std::getenv("ONTOSCOPE_KERNELS");
        if (env != nullptr) {
            std::string_view want(env);
            if (want == "scalar") return scalar();
            if (want == "avx2") {
                const Ops* v = avx2();
                if (v == nullptr) {
                    throw Error("ONTOSCOPE_KERNELS=avx2 but AVX2 is unavailable on this host/build");
                }
                return *v;
            }
            throw Error("unknown ONTOSCOPE_KERNELS value (expected scalar or avx2)");
        }
        const Ops* v = avx2();
        return v != nullptr ? *v : scalar();
    }();
    return chosen;
}

}  // namespace ontoscope::kernels
