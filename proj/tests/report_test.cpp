#include <doctest.h>

#include <string>
#include <vector>

#include "bperiod/report.hpp"
#include "bperiod/simulate.hpp"

using namespace bperiod;

TEST_CASE("constant series: degenerate, accepted, p = 1") {
    for (std::size_t d : {3u, 12u, 60u}) {
        const BinarySeries ones(std::vector<std::uint8_t>(1200, 1));
        const auto r = run_test(ones, d, 0.05);
        CHECK(r.degenerate);
        CHECK(r.statistic == 0.0);
        CHECK(r.p_exact == 1.0);
        CHECK(r.p_approx == 1.0);
        CHECK(r.decision == Decision::Accept);
        CHECK(r.decision_exact == Decision::Accept);
    }
}

TEST_CASE("report for n = 1200, d = 60") {
    StreamRng rng(1, 0);
    const auto series = simulate_series(PeriodicProfile({0.03}), 1200, rng);
    const auto r = run_test(series, 60, 0.05);
    CHECK(r.q == 29);
    CHECK(r.blocks == 20);
    CHECK(r.discarded == 0);
    CHECK(std::abs(r.k_alpha_approx - 0.2033) < 5e-5);
    CHECK(r.k_alpha_exact < r.k_alpha_approx);
    CHECK((r.decision == Decision::Reject) == (r.statistic > r.k_alpha_approx));
    CHECK((r.decision_exact == Decision::Reject) == (r.statistic > r.k_alpha_exact));
    CHECK(format_text(r).find("k_alpha approx    0.2033") != std::string::npos);
    CHECK(format_csv(r).find(",29,20,0,") != std::string::npos);
}

TEST_CASE("discarded observations are reported") {
    const BinarySeries s(std::vector<std::uint8_t>(1205, 0));
    const auto r = run_test(s, 60, 0.05);
    CHECK(r.discarded == 5);
    CHECK(r.blocks == 20);
}

TEST_CASE("the test path has no hidden randomness") {
    StreamRng rng(77, 1);
    const auto series = simulate_series(PeriodicProfile({0.2, 0.4, 0.6}), 2000, rng);
    const auto first = format_json(run_test(series, 60, 0.05));
    for (int i = 0; i < 5; ++i) CHECK(format_json(run_test(series, 60, 0.05)) == first);
}

TEST_CASE("a strong sine alternative is rejected across seeds") {
    ScenarioSpec spec;
    spec.kind = ScenarioKind::Sine;
    spec.r = 4;
    const auto profile = build_profile(spec);
    int rejected = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        StreamRng rng(seed, 0);
        const auto r = run_test(simulate_series(profile, 1200, rng), 60, 0.05);
        rejected += r.decision == Decision::Reject;
    }
    CHECK(rejected >= 49);
}

TEST_CASE("invalid level") {
    const BinarySeries s(std::vector<std::uint8_t>(100, 1));
    CHECK_THROWS_WITH((void)run_test(s, 12, 1.0), "invalid level");
    CHECK_THROWS_WITH((void)run_test(s, 2, 0.05), "d too small (q would be 0)");
}

TEST_CASE("theory summary output") {
    const auto s = detectability(PeriodicProfile({0.2, 0.5, 0.8}), 6);
    const auto text = format_text(s);
    CHECK(text.find("CONSISTENT") != std::string::npos);
    CHECK(text.find("0.9000 + 0.5196i") != std::string::npos);
    const auto csv = format_csv(s);
    CHECK(csv.rfind("i,e,v,r,d,b,regime,e_in_A,detect_re,detect_im,limit_g\n", 0) == 0);
    CHECK(csv.find("6,0.8000,0.1600,3,6,3,CONSISTENT,0,0.9000,0.5196,1.0000") != std::string::npos);
}
