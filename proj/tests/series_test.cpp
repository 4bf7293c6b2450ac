#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "bperiod/rng.hpp"
#include "bperiod/series.hpp"

using namespace bperiod;

namespace {

BinarySeries make(std::vector<int> v) { return BinarySeries(std::span<const int>(v)); }

}  // namespace

TEST_CASE("validate reports the offending position") {
    const std::vector<int> good{0, 1, 1, 0};
    CHECK_FALSE(validate(good).has_value());

    const std::vector<int> bad{0, 2, 1};
    const auto err = validate(bad);
    REQUIRE(err.has_value());
    CHECK(err->position == 2);
    CHECK(err->message == "value out of alphabet at position 2");

    const auto empty = validate(std::span<const int>{});
    REQUIRE(empty.has_value());
    CHECK(empty->message == "empty series");

    CHECK_THROWS_AS(make({1, 0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(BinarySeries(std::vector<std::uint8_t>{}), std::invalid_argument);
}

TEST_CASE("fold drops the trailing remainder") {
    const auto f = fold(make({1, 0, 1, 1, 0, 0, 1}), 3);
    CHECK(f.blocks == 2);
    CHECK(f.discarded() == 1);
    CHECK(f.z == std::vector<double>{1.0, 0.0, 0.5});
    CHECK(f.ones == std::vector<std::size_t>{2, 0, 1});
}

TEST_CASE("fold of an alternating series") {
    const auto f = fold(make({0, 1, 0, 1, 0, 1, 0, 1}), 4);
    CHECK(f.blocks == 2);
    CHECK(f.discarded() == 0);
    CHECK(f.z == std::vector<double>{0.0, 1.0, 0.0, 1.0});
}

TEST_CASE("fold of all ones is all ones") {
    for (std::size_t d : {3u, 5u, 12u, 60u}) {
        const auto f = fold(make(std::vector<int>(127, 1)), d);
        for (double z : f.z) CHECK(z == 1.0);
    }
}

TEST_CASE("fold preconditions") {
    const auto s = make({1, 0, 1, 1});
    CHECK_THROWS_WITH((void)fold(s, 2), "d too small (q would be 0)");
    CHECK_THROWS_WITH((void)fold(s, 5), "series shorter than d");
}

TEST_CASE("fold conserves the number of ones in the used prefix") {
    for (std::uint64_t k = 0; k < 200; ++k) {
        StreamRng rng(7, k);
        const std::size_t n = 3 + rng() % 500;
        const std::size_t d = 3 + rng() % (n - 2);
        std::vector<std::uint8_t> bits(n);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng.bernoulli(0.3));
        const BinarySeries s(bits);
        const auto f = fold(s, d);

        std::size_t prefix = 0;
        for (std::size_t l = 0; l < d * f.blocks; ++l) prefix += bits[l];
        CHECK(std::accumulate(f.ones.begin(), f.ones.end(), std::size_t{0}) == prefix);
        for (std::size_t i = 0; i < d; ++i) {
            CHECK(f.z[i] >= 0.0);
            CHECK(f.z[i] <= 1.0);
            CHECK(f.z[i] * static_cast<double>(f.blocks) == doctest::Approx(static_cast<double>(f.ones[i])));
        }
    }
}

TEST_CASE("self-concatenation doubles blocks and keeps z when d divides n") {
    for (std::uint64_t k = 0; k < 50; ++k) {
        StreamRng rng(11, k);
        const std::size_t d = 3 + rng() % 20;
        const std::size_t n = d * (1 + rng() % 10);
        std::vector<std::uint8_t> bits(n);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng.bernoulli(0.5));
        std::vector<std::uint8_t> twice(bits);
        twice.insert(twice.end(), bits.begin(), bits.end());

        const auto a = fold(BinarySeries(bits), d);
        const auto b = fold(BinarySeries(twice), d);
        CHECK(b.blocks == 2 * a.blocks);
        CHECK(a.z == b.z);
    }
}
