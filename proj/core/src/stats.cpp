#include "partspace/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace partspace {

double sample_mean(const std::vector<double>& values) {
    double total = 0.0;
    for (double v : values) total += v;
    return values.empty() ? 0.0 : total / static_cast<double>(values.size());
}

double sample_variance(const std::vector<double>& values) {
    if (values.size() < 2) return 0.0;
    const double mean = sample_mean(values);
    double acc = 0.0;
    for (double v : values) acc += (v - mean) * (v - mean);
    return acc / static_cast<double>(values.size() - 1);
}

namespace {

double central_moment(const std::vector<double>& values, int order) {
    const double mean = sample_mean(values);
    double acc = 0.0;
    for (double v : values) acc += std::pow(v - mean, order);
    return values.empty() ? 0.0 : acc / static_cast<double>(values.size());
}

}  // namespace

double skewness(const std::vector<double>& values) {
    const double m2 = central_moment(values, 2);
    if (m2 <= 0.0) return 0.0;
    return central_moment(values, 3) / std::pow(m2, 1.5);
}

double excess_kurtosis(const std::vector<double>& values) {
    const double m2 = central_moment(values, 2);
    if (m2 <= 0.0) return 0.0;
    return central_moment(values, 4) / (m2 * m2) - 3.0;
}

double quantile_sorted(const std::vector<double>& sorted, double prob) {
    if (sorted.empty()) return 0.0;
    if (sorted.size() == 1) return sorted.front();
    const double h = prob * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

SummaryStats summarize(std::vector<double> values) {
    SummaryStats out;
    out.mean = sample_mean(values);
    out.std_dev = std::sqrt(sample_variance(values));
    std::sort(values.begin(), values.end());
    out.q05 = quantile_sorted(values, 0.05);
    out.q25 = quantile_sorted(values, 0.25);
    out.median = quantile_sorted(values, 0.50);
    out.q75 = quantile_sorted(values, 0.75);
    out.q95 = quantile_sorted(values, 0.95);
    return out;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double ks_statistic_normal(std::vector<double> values, double mu, double sigma) {
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double stat = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double cdf = normal_cdf((values[i] - mu) / sigma);
        const double upper = static_cast<double>(i + 1) / n - cdf;
        const double lower = cdf - static_cast<double>(i) / n;
        stat = std::max({stat, upper, lower});
    }
    return stat;
}

double ks_p_value(double statistic, std::size_t n) {
    // Asymptotic Kolmogorov distribution with the Stephens small-sample
    // adjustment of the effective sample size.
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * statistic;
    if (lambda < 1e-9) return 1.0;
    double total = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * lambda * lambda * j * j);
        total += sign * term;
        sign = -sign;
        if (term < 1e-12) break;
    }
    const double p = 2.0 * total;
    return std::min(1.0, std::max(0.0, p));
}

}  // namespace partspace
