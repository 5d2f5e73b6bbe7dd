#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

// Philox4x32-10 counter-based generator (Salmon et al. 2011) plus the
// u32->unit-double conversion used by the simulator. Both exist as a
// scalar reference kernel and an AVX2 variant producing bit-identical
// output; the active kernel is chosen at runtime from CPU features.

namespace contact_ve::rng {

struct PhiloxKey {
    std::uint32_t k0;
    std::uint32_t k1;
};

// One 128-bit counter block: (c0, c1) is the 64-bit block index within a
// stream, (c2, c3) identifies the stream.
struct PhiloxCounter {
    std::uint32_t c0;
    std::uint32_t c1;
    std::uint32_t c2;
    std::uint32_t c3;
};

// Single-block reference; the known-answer vectors pin this function.
std::array<std::uint32_t, 4> philox4x32(PhiloxCounter ctr, PhiloxKey key);

// Fills out[0 .. 4*n_blocks) from consecutive blocks block, block+1, ...
// of stream (c2, c3). Output word j of block i lands at out[4*i + j].
using PhiloxBulkFn = void (*)(std::uint64_t block, std::uint32_t c2, std::uint32_t c3,
                              PhiloxKey key, std::size_t n_blocks, std::uint32_t* out);

// Converts 2*n consecutive u32 words into n doubles in [0,1) with 52-bit
// resolution: u = ((w0 | w1<<32) >> 12) * 2^-52.
using UnitDoubleFn = void (*)(const std::uint32_t* words, std::size_t n, double* out);

void philox4x32_bulk_scalar(std::uint64_t block, std::uint32_t c2, std::uint32_t c3,
                            PhiloxKey key, std::size_t n_blocks, std::uint32_t* out);
void unit_doubles_scalar(const std::uint32_t* words, std::size_t n, double* out);

#if defined(__x86_64__) || defined(__i386__)
void philox4x32_bulk_avx2(std::uint64_t block, std::uint32_t c2, std::uint32_t c3,
                          PhiloxKey key, std::size_t n_blocks, std::uint32_t* out);
void unit_doubles_avx2(const std::uint32_t* words, std::size_t n, double* out);
#endif

// Dispatched kernels. Selection happens once, on first call; the env var
// CONTACT_VE_SIMD=scalar|avx2 forces a kernel (avx2 falls back to scalar
// when unsupported).
PhiloxBulkFn philox_bulk_kernel();
UnitDoubleFn unit_double_kernel();
const char* active_kernel_name();

} // namespace contact_ve::rng
