#pragma once

#include <array>
#include <cstdint>

#include "contact_ve/philox.hpp"

namespace contact_ve::rng {

// Buffered stream of unit doubles drawn from one Philox stream. Streams
// are keyed by (seed, replicate, subject): the seed forms the Philox key
// and (replicate, subject) the stream half of the counter, so distinct
// subjects and replicates consume disjoint counter ranges by construction
// and replicates can run on any thread layout without affecting output.
class UniformStream {
public:
    UniformStream(std::uint64_t seed, std::uint32_t replicate, std::uint32_t subject)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          c2_(replicate),
          c3_(subject) {}

    double next_unit() {
        if (pos_ == kBufDoubles) {
            refill();
        }
        return buf_[pos_++];
    }

    bool bernoulli(double p) { return next_unit() < p; }

private:
    static constexpr std::size_t kBufBlocks = 64;
    static constexpr std::size_t kBufDoubles = kBufBlocks * 2;

    void refill() {
        std::array<std::uint32_t, kBufBlocks * 4> words;
        philox_bulk_kernel()(block_, c2_, c3_, key_, kBufBlocks, words.data());
        unit_double_kernel()(words.data(), kBufDoubles, buf_.data());
        block_ += kBufBlocks;
        pos_ = 0;
    }

    PhiloxKey key_;
    std::uint32_t c2_;
    std::uint32_t c3_;
    std::uint64_t block_ = 0;
    std::size_t pos_ = kBufDoubles;
    std::array<double, kBufDoubles> buf_;
};

} // namespace contact_ve::rng
