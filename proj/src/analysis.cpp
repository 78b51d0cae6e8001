#include "qwmem/analysis.hpp"

#include <cmath>
#include <string>

#include "qwmem/parallel.hpp"

namespace qwmem {

double LocalizationReport::capture(int w) const {
    if (w < 0 || window_capture.empty()) {
        return 0.0;
    }
    const auto last = window_capture.size() - 1;
    return window_capture[std::min<std::size_t>(static_cast<std::size_t>(w), last)];
}

LocalizationReport localization_report(const WalkState& s) {
    const int cap = s.capacity();
    const auto sites = s.sites();

    double total = 0.0;
    double first = 0.0;
    double squares = 0.0;
    for (std::size_t k = 0; k < sites.size(); ++k) {
        const double p = sites[k].probability();
        total += p;
        first += p * (static_cast<int>(k) - cap);
        squares += p * p;
    }

    LocalizationReport report;
    report.mean_position = first / total;
    double spread = 0.0;
    for (std::size_t k = 0; k < sites.size(); ++k) {
        const double d = (static_cast<int>(k) - cap) - report.mean_position;
        spread += sites[k].probability() * d * d;
    }
    report.std_dev = std::sqrt(spread / total);
    report.participation_ratio = total * total / squares;

    const int t = std::min(s.steps_elapsed(), cap);
    report.window_capture.resize(static_cast<std::size_t>(t) + 1);
    double running = s.at(0).probability();
    report.window_capture[0] = running;
    for (int w = 1; w <= t; ++w) {
        running += s.at(-w).probability() + s.at(w).probability();
        report.window_capture[static_cast<std::size_t>(w)] = running;
    }
    return report;
}

EavesdropperResult eavesdrop(const WalkState& s, SiteWindow window, const Qubit& true_input,
                             const MemoryConfig& cfg) {
    const int t = s.steps_elapsed();
    if (window.lo > window.hi || window.lo < -t || window.hi > t) {
        throw std::invalid_argument("eavesdropper window [" + std::to_string(window.lo) + ", " +
                                    std::to_string(window.hi) + "] is not inside [-" +
                                    std::to_string(t) + ", " + std::to_string(t) + "]");
    }
    EavesdropperResult result;
    result.window = window;
    Complex alpha_sum{};
    Complex beta_sum{};
    for (int j = window.lo; j <= window.hi; ++j) {
        const auto site = s.at(j);
        result.captured_probability += site.probability();
        alpha_sum += site.alpha;
        beta_sum += site.beta;
    }
    if (result.captured_probability < kEmptyCaptureLimit) {
        throw EmptyCapture("window holds no probability");
    }
    if (std::norm(alpha_sum) + std::norm(beta_sum) < kEmptyCaptureLimit) {
        throw EmptyCapture("window amplitudes cancel; no guess can be formed");
    }
    result.best_guess = Qubit::normalized(alpha_sum, beta_sum);
    result.decoded_guess = decode(result.best_guess, cfg);
    result.guess_fidelity = fidelity(result.decoded_guess, true_input);
    return result;
}

SampleStat sample_stat(std::span<const double> values) {
    SampleStat stat;
    if (values.empty()) {
        return stat;
    }
    const double n = static_cast<double>(values.size());
    for (double v : values) {
        stat.mean += v;
    }
    stat.mean /= n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - stat.mean) * (v - stat.mean);
        }
        stat.std_error = std::sqrt(ss / (n - 1.0) / n);
    }
    return stat;
}

EnsembleResult ensemble_stats(const Qubit& q, unsigned steps, std::span<const std::uint64_t> seeds,
                              Encoding encoding, bool phase_correction) {
    if (seeds.empty()) {
        throw std::invalid_argument("ensemble needs at least one seed");
    }
    EnsembleResult result;
    result.per_seed.resize(seeds.size());
    const Qubit stored = encode(q, encoding);
    parallel_for(seeds.size(), [&](std::size_t k) {
        const MemoryConfig cfg{CoinSchedule::temporal_disorder(seeds[k], steps), encoding,
                               phase_correction};
        cfg.validate();
        const WalkState walked = evolve(stored, cfg.schedule);
        SeedOutcome& out = result.per_seed[k];
        out.seed = seeds[k];
        out.theta_sum = cfg.schedule.theta_sum();
        out.report = localization_report(walked);
        out.retrieval_fidelity = fidelity(decode(collect(walked), cfg), q);
    });

    // Reduction in seed order, independent of completion order.
    std::vector<double> widths, ratios, fids;
    auto& capture = result.aggregate.mean_window_capture;
    capture.assign(steps + 1, 0.0);
    for (const auto& o : result.per_seed) {
        widths.push_back(o.report.std_dev);
        ratios.push_back(o.report.participation_ratio);
        fids.push_back(o.retrieval_fidelity);
        for (std::size_t w = 0; w < capture.size(); ++w) {
            capture[w] += o.report.window_capture[w];
        }
    }
    for (double& c : capture) {
        c /= static_cast<double>(seeds.size());
    }
    result.aggregate.std_dev = sample_stat(widths);
    result.aggregate.participation_ratio = sample_stat(ratios);
    result.aggregate.retrieval_fidelity = sample_stat(fids);
    return result;
}

}  // namespace qwmem
