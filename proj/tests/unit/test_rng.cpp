#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ordlim/rng.hpp"

using namespace ordlim;

TEST_CASE("Philox4x32-10 known answers")
{
    using A4 = std::array<std::uint32_t, 4>;
    using A2 = std::array<std::uint32_t, 2>;
    CHECK(philox4x32(A4{0, 0, 0, 0}, A2{0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32(A4{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, A2{0xffffffff, 0xffffffff}) ==
          A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32(A4{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, A2{0xa4093822, 0x299f31d0}) ==
          A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are pure functions of (seed, stream, index)")
{
    const SeededRng a(7), b(7);
    for (std::uint64_t i = 0; i < 100; ++i) CHECK(a.bits(i) == b.bits(i));
    CHECK(a.child(1).bits(0) != a.child(2).bits(0));
    CHECK(a.trial(0).stream() == a.child(3).stream());
    CHECK(SeededRng(8).bits(0) != a.bits(0));
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(a.bits(i));
    CHECK(seen.size() == 1000);
}

TEST_CASE("uniform and below")
{
    const SeededRng r(3);
    double sum = 0;
    for (std::uint64_t i = 0; i < 20000; ++i) {
        const double u = r.uniform(i);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));
    std::size_t counts[7] = {};
    for (std::uint64_t i = 0; i < 7000; ++i) {
        const auto v = r.below(i, 7);
        REQUIRE(v < 7);
        ++counts[v];
    }
    for (auto c : counts) CHECK(c > 850);
}

TEST_CASE("parallel_for")
{
    std::vector<int> hit(1000, 0);
    parallel_for(hit.size(), [&](std::size_t i) { hit[i] += 1; }, 4);
    for (int h : hit) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) { if (i == 5) throw std::runtime_error("x"); }, 3),
                    std::runtime_error);
}

TEST_CASE("ORDLIM_THREADS")
{
    setenv("ORDLIM_THREADS", "3", 1);
    CHECK(default_threads() == 3);
    unsetenv("ORDLIM_THREADS");
    CHECK(default_threads() >= 1);
}
