#include "contact_ve/philox.hpp"

namespace contact_ve::rng {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::uint32_t c[4], std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t n0 = hi1 ^ c[1] ^ k0;
    const std::uint32_t n2 = hi0 ^ c[3] ^ k1;
    c[0] = n0;
    c[1] = lo1;
    c[2] = n2;
    c[3] = lo0;
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(PhiloxCounter ctr, PhiloxKey key) {
    std::uint32_t c[4] = {ctr.c0, ctr.c1, ctr.c2, ctr.c3};
    std::uint32_t k0 = key.k0;
    std::uint32_t k1 = key.k1;
    for (int r = 0; r < 10; ++r) {
        round_once(c, k0, k1);
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return {c[0], c[1], c[2], c[3]};
}

void philox4x32_bulk_scalar(std::uint64_t block, std::uint32_t c2, std::uint32_t c3,
                            PhiloxKey key, std::size_t n_blocks, std::uint32_t* out) {
    for (std::size_t i = 0; i < n_blocks; ++i) {
        const std::uint64_t b = block + i;
        const auto words = philox4x32({static_cast<std::uint32_t>(b),
                                       static_cast<std::uint32_t>(b >> 32), c2, c3},
                                      key);
        out[4 * i + 0] = words[0];
        out[4 * i + 1] = words[1];
        out[4 * i + 2] = words[2];
        out[4 * i + 3] = words[3];
    }
}

void unit_doubles_scalar(const std::uint32_t* words, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t w = static_cast<std::uint64_t>(words[2 * i]) |
                                (static_cast<std::uint64_t>(words[2 * i + 1]) << 32);
        // (w >> 12) < 2^52, so the conversion to double is exact and the
        // scaling by a power of two is exact; the AVX2 kernel reproduces
        // this bit for bit.
        out[i] = static_cast<double>(w >> 12) * 0x1p-52;
    }
}

} // namespace contact_ve::rng
