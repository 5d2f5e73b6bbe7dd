#include "contact_ve/philox.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>

namespace contact_ve::rng {

namespace {

struct Kernels {
    PhiloxBulkFn bulk = &philox4x32_bulk_scalar;
    UnitDoubleFn unit = &unit_doubles_scalar;
    const char* name = "scalar";
};

Kernels g_kernels;
std::once_flag g_once;

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

void select_kernels() {
    const char* force = std::getenv("CONTACT_VE_SIMD");
    if (force != nullptr && std::strcmp(force, "scalar") == 0) {
        return;
    }
    const bool want_avx2 = force == nullptr || std::strcmp(force, "avx2") == 0;
#if defined(__x86_64__) || defined(__i386__)
    if (want_avx2 && avx2_available()) {
        g_kernels.bulk = &philox4x32_bulk_avx2;
        g_kernels.unit = &unit_doubles_avx2;
        g_kernels.name = "avx2";
    }
#else
    (void)want_avx2;
#endif
}

const Kernels& kernels() {
    std::call_once(g_once, select_kernels);
    return g_kernels;
}

} // namespace

PhiloxBulkFn philox_bulk_kernel() {
    return kernels().bulk;
}

UnitDoubleFn unit_double_kernel() {
    return kernels().unit;
}

const char* active_kernel_name() {
    return kernels().name;
}

} // namespace contact_ve::rng
