#include "contact_ve/philox.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace contact_ve::rng {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

// 32x32->64 multiply of all eight u32 lanes against a broadcast multiplier,
// split into hi/lo 32-bit halves. _mm256_mul_epu32 only covers the even
// lanes, so the odd lanes go through a shifted second multiply.
inline void mul_hilo_u32x8(__m256i x, __m256i m, __m256i& hi, __m256i& lo) {
    const __m256i prod_even = _mm256_mul_epu32(x, m);
    const __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
    lo = _mm256_blend_epi32(prod_even, _mm256_slli_epi64(prod_odd, 32), 0xAA);
    hi = _mm256_blend_epi32(_mm256_srli_epi64(prod_even, 32), prod_odd, 0xAA);
}

} // namespace

void philox4x32_bulk_avx2(std::uint64_t block, std::uint32_t c2, std::uint32_t c3,
                          PhiloxKey key, std::size_t n_blocks, std::uint32_t* out) {
    const __m256i m0 = _mm256_set1_epi32(static_cast<int>(kMul0));
    const __m256i m1 = _mm256_set1_epi32(static_cast<int>(kMul1));
    const __m256i w0 = _mm256_set1_epi32(static_cast<int>(kWeyl0));
    const __m256i w1 = _mm256_set1_epi32(static_cast<int>(kWeyl1));
    const __m256i c2v = _mm256_set1_epi32(static_cast<int>(c2));
    const __m256i c3v = _mm256_set1_epi32(static_cast<int>(c3));

    std::size_t i = 0;
    for (; i + 8 <= n_blocks; i += 8) {
        alignas(32) std::uint32_t blo[8];
        alignas(32) std::uint32_t bhi[8];
        for (int j = 0; j < 8; ++j) {
            const std::uint64_t b = block + i + j;
            blo[j] = static_cast<std::uint32_t>(b);
            bhi[j] = static_cast<std::uint32_t>(b >> 32);
        }
        __m256i x0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(blo));
        __m256i x1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(bhi));
        __m256i x2 = c2v;
        __m256i x3 = c3v;
        __m256i k0 = _mm256_set1_epi32(static_cast<int>(key.k0));
        __m256i k1 = _mm256_set1_epi32(static_cast<int>(key.k1));

        for (int r = 0; r < 10; ++r) {
            __m256i hi0, lo0, hi1, lo1;
            mul_hilo_u32x8(x0, m0, hi0, lo0);
            mul_hilo_u32x8(x2, m1, hi1, lo1);
            const __m256i n0 = _mm256_xor_si256(_mm256_xor_si256(hi1, x1), k0);
            const __m256i n2 = _mm256_xor_si256(_mm256_xor_si256(hi0, x3), k1);
            x0 = n0;
            x1 = lo1;
            x2 = n2;
            x3 = lo0;
            k0 = _mm256_add_epi32(k0, w0);
            k1 = _mm256_add_epi32(k1, w1);
        }

        // Transpose the 4 SoA registers back to block-major order.
        const __m256i t0 = _mm256_unpacklo_epi32(x0, x1);
        const __m256i t1 = _mm256_unpackhi_epi32(x0, x1);
        const __m256i t2 = _mm256_unpacklo_epi32(x2, x3);
        const __m256i t3 = _mm256_unpackhi_epi32(x2, x3);
        const __m256i u0 = _mm256_unpacklo_epi64(t0, t2);
        const __m256i u1 = _mm256_unpackhi_epi64(t0, t2);
        const __m256i u2 = _mm256_unpacklo_epi64(t1, t3);
        const __m256i u3 = _mm256_unpackhi_epi64(t1, t3);
        std::uint32_t* dst = out + 4 * i;
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + 0),
                            _mm256_permute2x128_si256(u0, u1, 0x20));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + 8),
                            _mm256_permute2x128_si256(u2, u3, 0x20));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + 16),
                            _mm256_permute2x128_si256(u0, u1, 0x31));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + 24),
                            _mm256_permute2x128_si256(u2, u3, 0x31));
    }

    if (i < n_blocks) {
        philox4x32_bulk_scalar(block + i, c2, c3, key, n_blocks - i, out + 4 * i);
    }
}

void unit_doubles_avx2(const std::uint32_t* words, std::size_t n, double* out) {
    // Same arithmetic as the scalar kernel: u = ((w >> 12) | 2^52) - 2^52,
    // then scale by 2^-52. Exact at every step.
    const __m256i exp_bits = _mm256_set1_epi64x(0x4330000000000000LL);
    const __m256d offset = _mm256_set1_pd(0x1p52);
    const __m256d scale = _mm256_set1_pd(0x1p-52);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + 2 * i));
        w = _mm256_srli_epi64(w, 12);
        w = _mm256_or_si256(w, exp_bits);
        const __m256d d = _mm256_sub_pd(_mm256_castsi256_pd(w), offset);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, scale));
    }
    if (i < n) {
        unit_doubles_scalar(words + 2 * i, n - i, out + i);
    }
}

} // namespace contact_ve::rng

#endif
