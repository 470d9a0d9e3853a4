#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "burstkit/approx_exp.hpp"
#include "burstkit/exact.hpp"
#include "burstkit/synth.hpp"
#include "burstkit/viterbi.hpp"

using namespace burstkit;

TEST(RefitBeta, Examples) {
    EXPECT_DOUBLE_EQ(refit_beta(DelaySequence({1, 2, 3}), {{0, 0, 0}, 1}, 2.0), 0.5);
    EXPECT_DOUBLE_EQ(refit_beta(DelaySequence({1, 1}), {{1, 1}, 1}, 2.0), 0.5);
    EXPECT_NEAR(refit_beta(DelaySequence({2, 4, 1, 1}), {{0, 0, 1, 1}, 1}, 3.0), 1.0 / 3.0, 1e-16);
}

TEST(RefitBeta, IsStationaryPoint) {
    const DelaySequence d({0.5, 2.0, 0.3, 0.1, 4.0});
    const LevelSequence L{{0, 0, 1, 2, 0}, 2};
    const double beta = refit_beta(d, L, 2.5);
    auto f = [&](double b) { return score_total(L, d, BurstParams::exponential(2.5, b, 1.0, 2)); };
    EXPECT_LT(f(beta), f(beta * 1.001));
    EXPECT_LT(f(beta), f(beta / 1.001));
}

TEST(ExpAlpha, ConstantSequence) {
    const double c = 2.5;
    const DelaySequence d(std::vector<double>(20, c));
    const auto sol = exp_alpha(d, 2.0, 1.0, 1, 0.05);
    EXPECT_EQ(sol.levels.levels, std::vector<int>(20, 0));
    EXPECT_DOUBLE_EQ(sol.beta, 1.0 / c);
    const double opt = 20.0 * (1.0 + std::log(c));
    const double psi = 20.0 * std::log(c);
    EXPECT_LE(sol.score - psi, 1.05 * (opt - psi) + 1e-12);
}

TEST(ExpAlpha, CandidateCountBound) {
    const DelaySequence d({1, 2, 0.5, 3, 0.2});
    for (int k : {1, 2, 4})
        for (double alpha : {1.5, 2.0, 5.0})
            for (double eps : {0.01, 0.05, 0.5}) {
                const auto sol = exp_alpha(d, alpha, 1.0, k, eps);
                EXPECT_LE(sol.viterbi_calls, std::ceil(k * std::log(alpha) / std::log1p(eps)) + 1);
                EXPECT_EQ(sol.viterbi_calls, sol.diagnostics.beta_candidates);
            }
}

TEST(ExpAlpha, ShiftedGuaranteeAgainstExact) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> s(1 + t % 8);
        for (auto& x : s) x = u(rng);
        const DelaySequence d(s);
        const int k = 1 + t % 2;
        const double opt = solve_exp_alpha_exact(d, 2.0, 0.5, k).score;
        const double psi = *d.stats().psi;
        for (double eps : {0.05, 0.5})
            EXPECT_LE(exp_alpha(d, 2.0, 0.5, k, eps).score - psi, (1.0 + eps) * (opt - psi) + 1e-9);
    }
}

TEST(ExpAlpha, Errors) {
    EXPECT_THROW(exp_alpha(DelaySequence({1, 2}), 1.0, 1.0, 1, 0.1), DomainError);
    try {
        exp_alpha(DelaySequence({0, 2}), 2.0, 1.0, 1, 0.1);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("shift the delays by a small amount"), std::string::npos);
    }
}

TEST(ExpAlpha, RecoversPlantedBurst) {
    int good = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const auto p = generate({500, 100, 400, 1.0, 2.0, derive_seed(77, trial)});
        const auto sol = exp_alpha(p.delays, 2.0, 1.0, 1, 0.05);
        const auto& L = sol.levels.levels;
        const auto first = std::find(L.begin(), L.end(), 1);
        if (first == L.end()) continue;
        const auto last = std::find(L.rbegin(), L.rend(), 1);
        const long lo = first - L.begin();
        const long hi = L.rend() - last;
        const long overlap = std::max(0L, std::min(hi, 400L) - std::max(lo, 100L));
        good += overlap >= 240;
    }
    EXPECT_GE(good, 90);
}

TEST(TraversalOrder, StridesHalve) {
    EXPECT_TRUE(traversal_order(0).empty());
    EXPECT_EQ(traversal_order(1), (std::vector<std::size_t>{0}));
    EXPECT_EQ(traversal_order(5), (std::vector<std::size_t>{0, 4, 2, 1, 3}));
    EXPECT_EQ(traversal_order(8), (std::vector<std::size_t>{0, 4, 2, 6, 1, 3, 5, 7}));
    auto o = traversal_order(37);
    std::sort(o.begin(), o.end());
    for (std::size_t i = 0; i < o.size(); ++i) EXPECT_EQ(o[i], i);
}

TEST(PruneScan, ConstantSequenceSkipsMost) {
    const DelaySequence d(std::vector<double>(50, 1.5));
    PruneState st;
    const auto pruned = prune_scan(d, 2.0, 1.0, 3, 0.01, &st);
    const auto plain = exp_alpha(d, 2.0, 1.0, 3, 0.01);
    EXPECT_DOUBLE_EQ(pruned.score, plain.score);
    EXPECT_NEAR(st.refits.front(), 1.0 / 1.5, 1e-15);
    EXPECT_LT(st.tested.size() * 5, st.candidates.size());
}

TEST(PruneScan, EqualsPlainScan) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(u(rng) * 198);
        const int k = 1 + t % 4;
        const double alpha = 1.2 + 2.8 * u(rng);
        const auto p = generate({n, n / 3, 2 * n / 3, 1.0, 2.0 + 6.0 * u(rng), rng()});
        for (double eps : {0.05, std::ldexp(1.0, -8)}) {
            PruneState st;
            const auto pruned = prune_scan(p.delays, alpha, 1.0, k, eps, &st);
            const auto plain = exp_alpha(p.delays, alpha, 1.0, k, eps);
            EXPECT_NEAR(pruned.score, plain.score, 1e-9 * std::max(1.0, std::fabs(plain.score)));
            EXPECT_LE(pruned.viterbi_calls, plain.viterbi_calls);
            EXPECT_EQ(st.tested.size() + pruned.diagnostics.skipped, st.candidates.size());
            for (std::size_t i = 0; i < st.candidates.size(); ++i)
                EXPECT_NE(st.visited[i], st.skipped[i]);
        }
    }
}

TEST(PruneScan, RefitIsMonotoneInBeta) {
    const auto p = generate({80, 20, 50, 1.0, 5.0, 9});
    double prev = 0.0;
    for (int i = 0; i <= 3000; ++i) {
        const double beta = 0.05 * std::pow(400.0, i / 3000.0);
        const auto sol = viterbi(p.delays, BurstParams::exponential(3.0, beta, 1.0, 3));
        const double h = refit_beta(p.delays, sol.levels, 3.0);
        EXPECT_GE(h, prev * (1.0 - 1e-12));
        prev = h;
    }
}

TEST(ApproxExp, FlatWhenSpreadIsOne) {
    const auto sol = approx_exp(DelaySequence({2, 2, 2}), 1.0, 2, 0.1);
    EXPECT_EQ(sol.levels.levels, (std::vector<int>{0, 0, 0}));
    EXPECT_DOUBLE_EQ(sol.beta, 0.5);
    EXPECT_EQ(sol.diagnostics.alpha_candidates, 1u);
}

TEST(ApproxExp, AlphaCandidateBound) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(1.0, 10.0);
    for (int t = 0; t < 10; ++t) {
        std::vector<double> s(3 + t);
        for (auto& x : s) x = u(rng);
        const DelaySequence d(s);
        const int k = 1 + t % 3;
        const double eps = 0.1;
        const auto sol = approx_exp(d, 1.0, k, eps);
        EXPECT_LE(static_cast<double>(sol.diagnostics.alpha_candidates),
                  2.0 * k * std::log(d.stats().max / d.stats().min) / std::log1p(eps) + 1.0);
    }
}

TEST(ApproxExp, ShiftedGuaranteeAgainstExactAlphaGrid) {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> u(1.0, 10.0);
    for (int t = 0; t < 8; ++t) {
        std::vector<double> s(2 + t % 7);
        for (auto& x : s) x = u(rng);
        const DelaySequence d(s);
        const int k = 1 + t % 2;
        const double spread = d.stats().max / d.stats().min;
        double opt = kInfinity;
        for (int i = 0; i <= 300; ++i) {
            const double alpha = std::pow(spread, i / 300.0) * (1.0 + 1e-9);
            opt = std::min(opt, solve_exp_alpha_exact(d, alpha, 1.0, k).score);
        }
        const double psi = *d.stats().psi;
        const auto sol = approx_exp(d, 1.0, k, 0.1);
        EXPECT_LE(sol.score - psi, 1.1 * (opt - psi) + 1e-9);
        const auto pruned = approx_exp(d, 1.0, k, 0.1, true);
        EXPECT_NEAR(pruned.score, sol.score, 1e-9 * std::max(1.0, std::fabs(sol.score)));
    }
}
