// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "burstkit/approx_exp.hpp"
#include "burstkit/approx_geo.hpp"
#include "burstkit/exact.hpp"
#include "burstkit/experiment.hpp"
#include "burstkit/oracle.hpp"
#include "burstkit/synth.hpp"
#include "burstkit/viterbi.hpp"

using namespace burstkit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

bool rel_close(double a, double b, double tol) {
    if (a == b) return true;
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

DelaySequence random_real_delays(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::vector<double> s(n);
    for (auto& x : s) x = uniform(rng, lo, hi);
    return DelaySequence(std::move(s));
}

DelaySequence random_int_delays(std::mt19937_64& rng, std::size_t n, int hi) {
    std::vector<double> s(n);
    for (auto& x : s) x = uniform_int(rng, 0, hi);
    return DelaySequence(std::move(s), DelayKind::Integer);
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    std::vector<double> out(points);
    for (std::size_t i = 0; i < points; ++i)
        out[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * static_cast<double>(i) /
                                             static_cast<double>(points - 1));
    return out;
}

// Collects the first few failure messages and counts the rest.
class Failures {
public:
    void add(const std::string& msg) {
        if (count_++ < 3) first_ += (first_.empty() ? "" : "; ") + msg;
    }
    std::size_t count() const { return count_; }
    Outcome outcome(const std::string& ok_detail) const {
        if (count_ == 0) return {true, ok_detail};
        return {false, std::to_string(count_) + " failure(s): " + first_};
    }

private:
    std::size_t count_ = 0;
    std::string first_;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// ---------------------------------------------------------------------------

Outcome viterbi_oracle() {
    std::mt19937_64 rng(101);
    Failures fails;
    for (int t = 0; t < 500; ++t) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 8));
        const int k = uniform_int(rng, 0, 2);
        const double gamma = uniform(rng, 0.05, 2.0);
        const bool geo = t % 2 == 1;
        const DelaySequence s = geo ? random_int_delays(rng, n, 5) : random_real_delays(rng, n, 0.1, 10.0);
        const BurstParams p = geo ? BurstParams::geometric(uniform(rng, 0.0, 0.95), uniform(rng, 0.05, 0.95), gamma, k)
                                  : BurstParams::exponential(uniform(rng, 1.1, 4.0), uniform(rng, 0.05, 3.0), gamma, k);
        const Solution dp = viterbi(s, p);
        const Solution bf = brute_force_viterbi(s, p);
        if (!rel_close(dp.score, bf.score, 1e-9))
            fails.add("instance " + std::to_string(t) + " score " + fmt("%.12g", dp.score) + " vs " + fmt("%.12g", bf.score));
        else if (!(dp.levels == bf.levels))
            fails.add("instance " + std::to_string(t) + " levels differ");
    }
    return fails.outcome("500 instances match brute force");
}

Outcome exact_solver() {
    std::mt19937_64 rng(202);
    Failures fails;
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 8));
        const int k = uniform_int(rng, 0, 2);
        const double alpha = uniform(rng, 1.1, 4.0);
        const double gamma = uniform(rng, 0.05, 2.0);
        const DelaySequence s = random_real_delays(rng, n, 0.1, 10.0);
        const Solution ex = solve_exp_alpha_exact(s, alpha, gamma, k);

        const double mu = s.stats().mean;
        double grid_best = kInfinity;
        for (double beta : log_grid(0.5 / (std::pow(alpha, k) * mu), 2.0 / mu, 10'000))
            grid_best = std::min(grid_best, viterbi(s, BurstParams::exponential(alpha, beta, gamma, k)).score);

        if (!(ex.score <= grid_best + 1e-9))
            fails.add("instance " + std::to_string(t) + " exact " + fmt("%.12g", ex.score) + " > grid " + fmt("%.12g", grid_best));
        if (ex.beta != refit_beta(s, ex.levels, alpha))
            fails.add("instance " + std::to_string(t) + " beta is not the refit value");
    }
    return fails.outcome("100 instances, exact <= 1e4-point beta grid, beta = n/f");
}

// Bounds asserted on every instance that runs the corresponding solver.
struct CallCounts {
    Failures geo_alpha, exp_alpha, approx_exp, approx_geo;
    std::size_t checked = 0;

    void geo_alpha_calls(std::size_t calls, std::size_t n, double eps) {
        ++checked;
        const double bound =
            std::ceil((std::log(std::log(n + 1.0)) - std::log(std::log(2.0))) / std::log1p(eps)) + 1.0;
        if (static_cast<double>(calls) > bound)
            geo_alpha.add("geo_alpha calls " + std::to_string(calls) + " > " + fmt("%.0f", bound));
    }
    void exp_alpha_calls(std::size_t calls, int k, double alpha, double eps) {
        ++checked;
        const double bound = std::ceil(k * std::log(alpha) / std::log1p(eps)) + 1.0;
        if (static_cast<double>(calls) > bound)
            exp_alpha.add("exp_alpha calls " + std::to_string(calls) + " > " + fmt("%.0f", bound));
    }
    void approx_exp_outer(std::size_t outer, int k, const DelaySequence& s, double eps) {
        ++checked;
        const double bound = 2.0 * k * std::log(s.stats().max / s.stats().min) / std::log1p(eps) + 1.0;
        if (static_cast<double>(outer) > bound)
            approx_exp.add("approx_exp alpha candidates " + std::to_string(outer) + " > " + fmt("%.3f", bound));
    }
    void approx_geo_outer(std::size_t outer, int k, const DelaySequence& s, double eps) {
        if (k < 1) return;
        ++checked;
        const double n = static_cast<double>(s.size());
        const double bound = (std::log(k) + std::log1p(n * s.stats().mean) - std::log(eps) +
                              std::log(std::log1p(n * k))) / std::log1p(eps) + 2.0;
        if (static_cast<double>(outer) > bound)
            approx_geo.add("approx_geo alpha candidates " + std::to_string(outer) + " > " + fmt("%.3f", bound));
    }
};

CallCounts g_counts;

Outcome approximation_guarantees() {
    std::mt19937_64 rng(303);
    Failures fails;
    const GridOptions fixed_alpha;
    const GridOptions free_alpha;
    const double eps_values[] = {0.05, 0.5};

    for (int t = 0; t < 100; ++t) {
        const std::string tag = "instance " + std::to_string(t);

        // Geometric.
        {
            const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 8));
            const int k = uniform_int(rng, 0, 2);
            const double alpha = uniform(rng, 0.0, 0.9);
            const double gamma = uniform(rng, 0.1, 2.0);
            const DelaySequence s = random_int_delays(rng, n, 6);
            const double opt_a = grid_opt(s, Family::Geometric, gamma, k, alpha, fixed_alpha).score;
            const double opt = grid_opt(s, Family::Geometric, gamma, k, std::nullopt, free_alpha).score;
            for (double eps : eps_values) {
                const Solution ga = geo_alpha(s, alpha, gamma, k, eps);
                g_counts.geo_alpha_calls(ga.viterbi_calls, n, eps);
                if (!(ga.score <= (1.0 + eps) * opt_a + 1e-9))
                    fails.add(tag + " geo_alpha " + fmt("%.10g", ga.score) + " vs OPT " + fmt("%.10g", opt_a));
                const Solution ag = approx_geo(s, gamma, k, eps);
                g_counts.approx_geo_outer(ag.diagnostics.alpha_candidates, k, s, eps);
                if (!(ag.score <= (1.0 + eps) * opt + 1e-9))
                    fails.add(tag + " approx_geo " + fmt("%.10g", ag.score) + " vs OPT " + fmt("%.10g", opt));
            }
        }

        // Exponential.
        {
            const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 8));
            const int k = uniform_int(rng, 0, 2);
            const double alpha = uniform(rng, 1.2, 4.0);
            const double gamma = uniform(rng, 0.1, 2.0);
            const DelaySequence s = random_real_delays(rng, n, 0.1, 10.0);
            const double psi = *s.stats().psi;

            const double opt_a = solve_exp_alpha_exact(s, alpha, gamma, k).score;
            double opt = grid_opt(s, Family::Exponential, gamma, k, std::nullopt, free_alpha).score;
            const double spread = s.stats().max / s.stats().min;
            if (spread > 1.0)
                for (double a : log_grid(1.0 + 1e-9, spread, 200))
                    opt = std::min(opt, solve_exp_alpha_exact(s, a, gamma, k).score);

            for (double eps : eps_values) {
                const Solution ea = exp_alpha(s, alpha, gamma, k, eps);
                g_counts.exp_alpha_calls(ea.viterbi_calls, k, alpha, eps);
                if (!(ea.score - psi <= (1.0 + eps) * (opt_a - psi) + 1e-9))
                    fails.add(tag + " exp_alpha " + fmt("%.10g", ea.score) + " vs OPT " + fmt("%.10g", opt_a));
                const Solution ae = approx_exp(s, gamma, k, eps);
                g_counts.approx_exp_outer(ae.diagnostics.alpha_candidates, k, s, eps);
                if (!(ae.score - psi <= (1.0 + eps) * (opt - psi) + 1e-9))
                    fails.add(tag + " approx_exp " + fmt("%.10g", ae.score) + " vs OPT " + fmt("%.10g", opt));
            }
        }
    }
    return fails.outcome("100 instances per family and epsilon within (1+eps) of OPT");
}

Outcome call_count_bounds() {
    Outcome out{true, std::to_string(g_counts.checked) + " solver runs checked"};
    const std::pair<const char*, const Failures*> bounds[] = {
        {"geo_alpha", &g_counts.geo_alpha},
        {"exp_alpha", &g_counts.exp_alpha},
        {"approx_exp", &g_counts.approx_exp},
        {"approx_geo", &g_counts.approx_geo},
    };
    for (const auto& [name, f] : bounds) {
        const Outcome o = f->outcome("ok");
        out.pass = out.pass && o.pass;
        out.detail += std::string("; ") + name + ": " + o.detail;
    }
    return out;
}

// Several planted bursts of increasing intensity, concatenated.
DelaySequence bursty(std::uint64_t seed, std::size_t block, const std::vector<double>& burst_rates) {
    std::vector<double> all;
    std::uint64_t i = 0;
    for (double rate : burst_rates) {
        const PlantedSequence p = generate(
            {block, block / 3, 2 * block / 3, 1.0, rate, derive_seed(seed, i++)});
        all.insert(all.end(), p.delays.values().begin(), p.delays.values().end());
    }
    return DelaySequence(std::move(all));
}

Outcome pruning() {
    std::mt19937_64 rng(505);
    Failures fails;
    const double eps_values[] = {0.05, std::ldexp(1.0, -8)};
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 200));
        const int k = uniform_int(rng, 1, 4);
        const double alpha = uniform(rng, 1.2, 4.0);
        const double gamma = uniform(rng, 0.1, 2.0);
        const auto start = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        const auto end = static_cast<std::size_t>(uniform_int(rng, static_cast<int>(start), static_cast<int>(n)));
        const PlantedSequence p = generate({n, start, end, 1.0, uniform(rng, 1.5, 10.0), rng()});
        const double eps = eps_values[t % 2];

        const Solution plain = exp_alpha(p.delays, alpha, gamma, k, eps);
        const Solution pruned = exp_alpha(p.delays, alpha, gamma, k, eps, true);
        g_counts.exp_alpha_calls(plain.viterbi_calls, k, alpha, eps);
        g_counts.exp_alpha_calls(pruned.viterbi_calls, k, alpha, eps);
        const std::string tag = "instance " + std::to_string(t);
        if (!rel_close(plain.score, pruned.score, 1e-9))
            fails.add(tag + " pruned " + fmt("%.12g", pruned.score) + " vs plain " + fmt("%.12g", plain.score));
        if (pruned.viterbi_calls > plain.viterbi_calls) fails.add(tag + " pruned tested more candidates");
    }

    const DelaySequence data = bursty(2015, 400, {2.0, 4.0, 8.0, 16.0, 32.0});
    const double eps = std::ldexp(1.0, -13);
    const Solution plain = exp_alpha(data, 2.0, 1.0, 5, eps);
    const Solution pruned = exp_alpha(data, 2.0, 1.0, 5, eps, true);
    g_counts.exp_alpha_calls(plain.viterbi_calls, 5, 2.0, eps);
    if (!rel_close(plain.score, pruned.score, 1e-9)) fails.add("bursty data: pruned score differs");
    const double ratio = static_cast<double>(pruned.viterbi_calls) / static_cast<double>(plain.viterbi_calls);
    if (!(ratio <= 0.10)) fails.add("bursty data: tested ratio " + fmt("%.4f", ratio));
    return fails.outcome("100 random instances equal; bursty data tested " + std::to_string(pruned.viterbi_calls) +
                         "/" + std::to_string(plain.viterbi_calls) + " (" + fmt("%.2f%%", 100.0 * ratio) + ")");
}

Outcome fig3_trend() {
    const ExperimentConfig cfg = ExperimentConfig::burst_length_defaults();
    const auto rows = summarize(cfg, run_experiment(cfg));
    Failures fails;
    std::string at230;
    for (const auto& r : rows) {
        if (r.x >= 150 && !(r.expalpha <= r.expmean))
            fails.add("burst length " + std::to_string(r.x) + ": ExpAlpha " + fmt("%.2f", r.expalpha) +
                      " > ExpMean " + fmt("%.2f", r.expmean));
        if (r.x == 230) {
            at230 = fmt("%.2f", r.expalpha);
            if (!(r.expalpha >= 8.0 && r.expalpha <= 33.0)) fails.add("ExpAlpha mean at 230 is " + at230);
        }
    }
    if (at230.empty()) fails.add("burst length 230 missing");
    return fails.outcome("ExpAlpha <= ExpMean for lengths >= 150; mean at 230 = " + at230);
}

Outcome fig4_trend() {
    const ExperimentConfig cfg = ExperimentConfig::sequence_length_defaults();
    const auto rows = summarize(cfg, run_experiment(cfg));
    Failures fails;
    std::string at50;
    for (const auto& r : rows) {
        if (r.x == 50) {
            at50 = fmt("%.3f", r.expalpha) + "/" + fmt("%.3f", r.expmean);
            for (double v : {r.expalpha, r.expmean})
                if (!(v >= 0.10 && v <= 0.35)) fails.add("n=50 normalized Hamming " + fmt("%.3f", v));
        }
        if (r.x >= 300 && !(r.expalpha < r.expmean))
            fails.add("n=" + std::to_string(r.x) + ": ExpAlpha " + fmt("%.3f", r.expalpha) + " >= ExpMean " +
                      fmt("%.3f", r.expmean));
    }
    if (at50.empty()) fails.add("n=50 missing");
    return fails.outcome("n=50 ExpAlpha/ExpMean = " + at50 + "; ExpAlpha < ExpMean for n >= 300");
}

Outcome property_suites() {
    std::mt19937_64 rng(808);
    Failures fails;

    // Penalty non-negativity.
    for (int t = 0; t < 10'000; ++t) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 100'000));
        if (penalty(uniform_int(rng, 0, 20), uniform_int(rng, 0, 20), uniform(rng, 0.0, 10.0), n) < 0.0)
            fails.add("negative penalty");
    }

    for (int t = 0; t < 60; ++t) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 8));
        const int k = uniform_int(rng, 1, 2);
        const double gamma = uniform(rng, 0.1, 2.0);
        const std::string tag = "instance " + std::to_string(t);

        // Geometric beta range: nothing outside beats the best inside.
        {
            const DelaySequence s = random_int_delays(rng, n, 6);
            const double alpha = uniform(rng, 0.0, 0.9);
            const double mu = s.stats().mean;
            const double lo = mu / (1.0 + mu);
            const double hi = mu / (mu + 1.0 / static_cast<double>(n));
            const double inside = grid_opt(s, Family::Geometric, gamma, k, alpha).score;
            for (int i = 1; i < 4000; ++i) {
                const double beta = i / 4000.0;
                if (beta >= lo && beta <= hi) continue;
                const double outside = viterbi(s, BurstParams::geometric(alpha, beta, gamma, k)).score;
                if (detail::definitely_less(outside + 1e-9, inside)) {
                    fails.add(tag + " geo beta " + fmt("%.4f", beta) + " outside range beats it");
                    break;
                }
            }
        }

        // Exponential beta range, checked on the exact optimum.
        const DelaySequence s = random_real_delays(rng, n, 0.1, 10.0);
        const double alpha = uniform(rng, 1.2, 4.0);
        const double mu = s.stats().mean;
        const Solution ex = solve_exp_alpha_exact(s, alpha, gamma, k);
        const double lo = 1.0 / (std::pow(alpha, k) * mu);
        if (!(ex.beta >= lo * (1.0 - 1e-12) && ex.beta <= (1.0 / mu) * (1.0 + 1e-12)))
            fails.add(tag + " exact beta outside [1/(alpha^k mu), 1/mu]");

        // h(beta) = n / f(lambda(beta)) is non-decreasing.
        double prev = 0.0;
        for (double beta : log_grid(lo / 4.0, 4.0 / mu, 5000)) {
            const Solution v = viterbi(s, BurstParams::exponential(alpha, beta, gamma, k));
            const double h = refit_beta(s, v.levels, alpha);
            if (h < prev && !rel_close(h, prev, 1e-12)) {
                fails.add(tag + " h decreases at beta " + fmt("%.6g", beta));
                break;
            }
            prev = h;
        }
    }

    // Pruning safety: no skipped candidate beats the returned best.
    for (int t = 0; t < 40; ++t) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 120));
        const int k = uniform_int(rng, 1, 4);
        const double alpha = uniform(rng, 1.2, 4.0);
        const double gamma = uniform(rng, 0.1, 2.0);
        const PlantedSequence p = generate({n, n / 4, n / 2, 1.0, uniform(rng, 1.5, 10.0), rng()});
        PruneState st;
        const Solution best = prune_scan(p.delays, alpha, gamma, k, t % 2 ? 0.05 : 0.01, &st);
        for (std::size_t i = 0; i < st.candidates.size(); ++i) {
            if (!st.skipped[i]) continue;
            const double sc = viterbi(p.delays, BurstParams::exponential(alpha, st.candidates[i], gamma, k)).score;
            if (sc < best.score && !rel_close(sc, best.score, 1e-9)) {
                fails.add("instance " + std::to_string(t) + " skipped candidate " + std::to_string(i) + " beats best");
                break;
            }
        }
    }
    return fails.outcome("penalty, beta ranges, h monotone, pruning safety");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0 = no runtime limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "viterbi oracle equivalence", 30.0, viterbi_oracle},
        {2, "exact solver correctness", 120.0, exact_solver},
        {3, "approximation guarantees", 300.0, approximation_guarantees},
        {5, "pruning", 0.0, pruning},
        {4, "call-count bounds", 0.0, call_count_bounds},
        {6, "burst length trend", 600.0, fig3_trend},
        {7, "sequence length trend", 0.0, fig4_trend},
        {8, "property suites", 0.0, property_suites},
    };

    std::vector<std::string> lines(9);
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0.0 && secs > c.limit_s) {
            o.pass = false;
            o.detail += "; runtime " + fmt("%.1f", secs) + " s over limit " + fmt("%.0f", c.limit_s) + " s";
        }
        if (!o.pass) ++failed;
        std::ostringstream line;
        line << "criterion " << c.id << " [" << c.name << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
             << o.detail << " (" << fmt("%.1f", secs) << " s)";
        lines[static_cast<std::size_t>(c.id)] = line.str();
    }
    for (std::size_t i = 1; i < lines.size(); ++i) std::puts(lines[i].c_str());
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
