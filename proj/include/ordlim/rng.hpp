#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace ordlim {

/// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key);

std::uint64_t splitmix64(std::uint64_t x);

/// Counter-based generator: value number `index` of stream `stream` is
/// Philox4x32-10 with key = seed and counter = (index, stream). Nothing is
/// stateful, so draws may be made in any order and from any thread.
///
/// Streams are derived by hashing: child(tag) has stream id
/// splitmix64(stream ^ splitmix64(tag + 1)). The library uses tag 1 for point
/// positions X_i (index i), tag 2 for pair variables ξ_ij (index i * n + j),
/// tag 3 + t for trial t.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    SeededRng child(std::uint64_t tag) const
    {
        return SeededRng(seed_, splitmix64(stream_ ^ splitmix64(tag + 1)));
    }

    /// Substream for trial t.
    SeededRng trial(std::uint64_t t) const { return child(3 + t); }

    std::uint64_t bits(std::uint64_t index) const;

    /// Uniform on [0,1) with 53 random bits.
    double uniform(std::uint64_t index) const
    {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) by rejection (consumes indices
    /// index * 64, index * 64 + 1, ...).
    std::uint64_t below(std::uint64_t index, std::uint64_t bound) const;

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
};

inline constexpr std::uint64_t tag_points = 1;
inline constexpr std::uint64_t tag_pairs = 2;

/// Worker count: ORDLIM_THREADS if set and positive, else the hardware
/// concurrency.
std::size_t default_threads();

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 means
/// default_threads()). Exceptions are rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn, std::size_t threads = 0);

}  // namespace ordlim
