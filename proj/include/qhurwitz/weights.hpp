#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhurwitz/partition.hpp"
#include "qhurwitz/qseries.hpp"
#include "qhurwitz/rational.hpp"
#include "qhurwitz/symgroup.hpp"

// Quantum weights for the specialization c_i = q^i.
//
// A branch point of colength l carries energy l * E0; with q = exp(-E0 / kT)
// the weight of a configuration is a symmetrized product of Bose occupation
// factors q^S / (1 - q^S) over partial sums S of its colengths. This reading
// is interpretation only; nothing here depends on it.
//
// Branch configurations of total colength d are represented canonically: a
// tuple (mu^(1), ..., mu^(k)) is listed once per choice of profiles, with the
// colengths in weakly decreasing order. The weight only depends on the
// colength multiset, and over this set the colength map to partitions of d
// has fibres of size p(lambda) (for n >= 2d), which is what makes the
// pushforward density p(lambda) w(lambda) / Z.

namespace qhurwitz {

/// Truncation order used for degree-d computations unless overridden.
inline int default_q_order(int d) { return d + 4; }

class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_weight_profile(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("colength profile must be nonempty");
}

// (1 / |aut|) sum over orderings sigma of prod_j factor(S_j(sigma)), with
// S_j the prefix sums of the permuted colengths. All k! orderings are
// visited, repeated values included.
template <class T, class Factor>
T symmetrized_bose_sum(const std::vector<int>& colengths, const T& one, const T& zero, Factor factor)
{
    std::vector<std::size_t> order(colengths.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    T total = zero;
    do {
        T term = one;
        int prefix = 0;
        for (std::size_t idx : order) {
            prefix += colengths[idx];
            term = term * factor(prefix);
        }
        total = total + term;
    } while (std::next_permutation(order.begin(), order.end()));
    return total;
}

} // namespace detail

/// w(lambda) = (1/|aut lambda|) sum_sigma prod_j q^{S_j} / (1 - q^{S_j}),
/// as a series truncated at `order`. The empty profile has weight 1.
inline QSeries weight_w(const Partition& lambda, int order)
{
    if (lambda.empty())
        return QSeries::constant(1, order);
    auto sum = detail::symmetrized_bose_sum(lambda.parts(), QSeries::constant(1, order), QSeries(order),
                                            [order](int s) { return qs_bose_factor(s, order); });
    return sum * BigRational(BigInt(1), aut_order(lambda));
}

/// Exact value of w(lambda) at a rational q in (0,1).
inline BigRational weight_w_value(const Partition& lambda, const BigRational& q)
{
    if (lambda.empty())
        return 1;
    auto sum = detail::symmetrized_bose_sum(lambda.parts(), BigRational(1), BigRational(0),
                                            [&q](int s) { return bose_factor_value(s, q); });
    return sum / BigRational(aut_order(lambda));
}

/// W(mu^(1), ..., mu^(k)): the quantum weight of a branch configuration,
/// summed over orderings of its own colengths.
inline QSeries weight_W(const BranchConfig& config, int order)
{
    std::vector<int> colengths;
    for (const auto& mu : config.profiles())
        colengths.push_back(mu.colength());
    auto sum = detail::symmetrized_bose_sum(colengths, QSeries::constant(1, order), QSeries(order),
                                            [order](int s) { return qs_bose_factor(s, order); });
    return sum * BigRational(BigInt(1), aut_order(config.colength_profile()));
}

inline BigRational weight_W_value(const BranchConfig& config, const BigRational& q)
{
    return weight_w_value(config.colength_profile(), q);
}

/// Leading term of w(lambda) from the identity ordering alone:
/// exponent sum_j j * lambda_j, coefficient 1/|aut(lambda)|.
struct LeadingTerm {
    int exponent;
    BigRational coefficient;
};

inline LeadingTerm weight_w_leading(const Partition& lambda)
{
    detail::require_weight_profile(lambda);
    int exponent = 0;
    for (int j = 0; j < lambda.length(); ++j)
        exponent += (j + 1) * lambda.parts()[static_cast<std::size_t>(j)];
    return {exponent, BigRational(BigInt(1), aut_order(lambda))};
}

/// Colength profiles that can occur for degree n: partitions of d with all
/// parts at most n - 1.
inline std::vector<Partition> admissible_profiles(int n, int d)
{
    std::vector<Partition> out;
    for (auto& lambda : enumerate_partitions(d))
        if (lambda.empty() || lambda.parts().front() <= n - 1)
            out.push_back(std::move(lambda));
    return out;
}

/// Number of canonical configurations over lambda at degree n; equals
/// p(lambda) once n >= 2d.
inline std::int64_t fibre_size(int n, const Partition& lambda)
{
    std::int64_t total = 1;
    for (int part : lambda.parts()) {
        if (part >= n)
            return 0;
        total *= static_cast<std::int64_t>(enumerate_with_colength(n, part).size());
    }
    return total;
}

/// Calls f(tuple) for every canonical configuration of S_n with colength
/// profile lambda (one profile of colength lambda_j in slot j).
template <class F>
void for_each_config(int n, const Partition& lambda, F&& f)
{
    std::vector<std::vector<Partition>> choices;
    for (int part : lambda.parts()) {
        if (part >= n)
            return;
        choices.push_back(enumerate_with_colength(n, part));
    }
    std::vector<Partition> tuple(choices.size());
    std::function<void(std::size_t)> rec = [&](std::size_t slot) {
        if (slot == choices.size()) {
            f(static_cast<const std::vector<Partition>&>(tuple));
            return;
        }
        for (const auto& mu : choices[slot]) {
            tuple[slot] = mu;
            rec(slot + 1);
        }
    };
    rec(0);
}

/// The set M^(n)_{d,k} (k = 0 means all k), canonical representatives.
inline std::vector<BranchConfig> enumerate_branch_configs(int n, int d, int k = 0)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("enumerate_branch_configs: n and d must be positive");
    std::vector<BranchConfig> out;
    for (const auto& lambda : admissible_profiles(n, d)) {
        if (k != 0 && lambda.length() != k)
            continue;
        for_each_config(n, lambda, [&](const std::vector<Partition>& tuple) { out.emplace_back(tuple); });
    }
    return out;
}

/// Z_d = sum_{lambda |- d} p(lambda) w(lambda), the n >= 2d value.
inline QSeries partition_function_Z(int d, int order)
{
    if (d < 1)
        throw std::invalid_argument("partition_function_Z: d must be positive");
    QSeries z(order);
    for (const auto& lambda : enumerate_partitions(d))
        z += weight_w(lambda, order) * BigRational(partition_count_product(lambda));
    return z;
}

inline QSeries partition_function_Z(int d) { return partition_function_Z(d, default_q_order(d)); }

/// Z by direct summation of W over every configuration in M^(n)_d.
inline QSeries partition_function_Z_direct(int n, int d, int order)
{
    QSeries z(order);
    for (const auto& config : enumerate_branch_configs(n, d))
        z += weight_W(config, order);
    return z;
}

inline void require_unit_interval(const BigRational& q)
{
    if (q <= 0 || q >= 1)
        throw std::invalid_argument("q must lie strictly between 0 and 1, got " + to_string(q));
}

/// Exact Z at rational q for degree n (n >= 2d gives the n-independent value).
inline BigRational partition_function_value(int d, const BigRational& q, int n)
{
    require_unit_interval(q);
    BigRational z = 0;
    for (const auto& lambda : enumerate_partitions(d)) {
        auto fibre = fibre_size(n, lambda);
        if (fibre != 0)
            z += BigRational(fibre) * weight_w_value(lambda, q);
    }
    return z;
}

inline BigRational partition_function_value(int d, const BigRational& q)
{
    return partition_function_value(d, q, 2 * d);
}

struct MeasureReport {
    int d = 0;
    BigRational q;
    std::vector<std::pair<Partition, BigRational>> support;

    BigRational total() const
    {
        BigRational t = 0;
        for (const auto& [lambda, prob] : support)
            t += prob;
        return t;
    }

    BigRational probability(const Partition& lambda) const
    {
        for (const auto& [l, prob] : support)
            if (l == lambda)
                return prob;
        return 0;
    }
};

/// The pushforward measure on partitions of d: p(lambda) w(lambda) / Z at an
/// exact rational q.
inline MeasureReport pushforward_measure(int d, const BigRational& q)
{
    if (d < 1)
        throw std::invalid_argument("pushforward_measure: d must be positive");
    require_unit_interval(q);
    MeasureReport report{d, q, {}};
    BigRational z = 0;
    for (const auto& lambda : enumerate_partitions(d)) {
        BigRational mass = BigRational(partition_count_product(lambda)) * weight_w_value(lambda, q);
        report.support.emplace_back(lambda, mass);
        z += mass;
    }
    for (auto& entry : report.support)
        entry.second /= z;
    return report;
}

/// Theta(config) = W(config) / Z for config in M^(n)_d.
inline BigRational theta_measure(const BranchConfig& config, int d, int n, const BigRational& q)
{
    require_unit_interval(q);
    if (config.total_colength() != d)
        throw std::invalid_argument("theta_measure: configuration has total colength " +
                                    std::to_string(config.total_colength()) + ", expected " + std::to_string(d));
    if (config.degree() != n)
        throw std::invalid_argument("theta_measure: configuration is not in S_" + std::to_string(n));
    return weight_W_value(config, q) / partition_function_value(d, q, n);
}

/// Theta over all of M^(n)_d.
inline std::vector<std::pair<BranchConfig, BigRational>> theta_distribution(int n, int d, const BigRational& q)
{
    require_unit_interval(q);
    const BigRational z = partition_function_value(d, q, n);
    std::vector<std::pair<BranchConfig, BigRational>> out;
    for (auto& config : enumerate_branch_configs(n, d)) {
        auto prob = weight_W_value(config, q) / z;
        out.emplace_back(std::move(config), std::move(prob));
    }
    return out;
}

struct ExpansionCheck {
    int d = 0;
    std::int64_t expected_leading = 0;     // p(d)
    std::int64_t expected_subleading = 0;  // p(d-1)
    BigRational computed_leading;          // [q^d] Z
    BigRational computed_subleading;       // [q^{d+1}] Z
    QSeries series;

    bool pass() const { return computed_leading == expected_leading && computed_subleading == expected_subleading; }
};

/// Compares the q^d and q^{d+1} coefficients of Z_d with p(d) and p(d-1).
inline ExpansionCheck check_zero_temp_expansion(int d, int order)
{
    if (d < 2)
        throw std::invalid_argument("zero-temperature expansion needs d >= 2");
    if (order < d + 2)
        throw std::invalid_argument("series order must be at least d + 2");
    ExpansionCheck check;
    check.d = d;
    check.expected_leading = partition_count(d);
    check.expected_subleading = partition_count(d - 1);
    check.series = partition_function_Z(d, order);
    check.computed_leading = check.series.coeff(d);
    check.computed_subleading = check.series.coeff(d + 1);
    return check;
}

/// Returns (p(d), p(d-1)); throws VerificationError if Z disagrees.
inline std::pair<std::int64_t, std::int64_t> zero_temp_expansion(int d)
{
    auto check = check_zero_temp_expansion(d, default_q_order(d));
    if (!check.pass()) {
        std::ostringstream msg;
        msg << "partition function expansion mismatch at d=" << d << ": expected (" << check.expected_leading << ", "
            << check.expected_subleading << "), computed (" << to_string(check.computed_leading) << ", "
            << to_string(check.computed_subleading) << ")";
        throw VerificationError(msg.str());
    }
    return {check.expected_leading, check.expected_subleading};
}

} // namespace qhurwitz
