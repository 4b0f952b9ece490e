#pragma once

#include <vector>

namespace partspace {

// Descriptive statistics of one experiment cell, computed on sorted values.
struct SummaryStats {
    double mean = 0.0;
    double std_dev = 0.0;  // unbiased (n-1)
    double q05 = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    double q95 = 0.0;
};

SummaryStats summarize(std::vector<double> values);

double sample_mean(const std::vector<double>& values);
double sample_variance(const std::vector<double>& values);  // unbiased (n-1)

// Moment-based shape statistics (population moment ratios g1, g2).
double skewness(const std::vector<double>& values);
double excess_kurtosis(const std::vector<double>& values);

// Interpolated quantile (type 7) of an already sorted vector.
double quantile_sorted(const std::vector<double>& sorted, double prob);

// Standard normal CDF.
double normal_cdf(double z);

// One-sample Kolmogorov-Smirnov statistic against N(mu, sigma^2) and the
// asymptotic p-value of that statistic at sample size n.
double ks_statistic_normal(std::vector<double> values, double mu, double sigma);
double ks_p_value(double statistic, std::size_t n);

}  // namespace partspace
