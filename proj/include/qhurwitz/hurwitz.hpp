#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhurwitz/partition.hpp"
#include "qhurwitz/qseries.hpp"
#include "qhurwitz/rational.hpp"
#include "qhurwitz/symgroup.hpp"
#include "qhurwitz/weights.hpp"

namespace qhurwitz {

namespace detail {

// All vectors of `slots` nonnegative counts summing to `total`.
inline void count_vectors(std::size_t slots, int total, std::vector<int>& current,
                          std::vector<std::vector<int>>& out)
{
    if (current.size() + 1 == slots) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int c = total; c >= 0; --c) {
        current.push_back(c);
        count_vectors(slots, total - c, current, out);
        current.pop_back();
    }
}

} // namespace detail

/// Sum of H(mu^(1), ..., mu^(k), mu, nu) over the canonical configurations
/// with colength profile lambda.
///
/// Slots of equal colength form blocks; each block is enumerated as a
/// multiset and counted with its number of distinct orderings, so every
/// Frobenius evaluation is done once per unordered choice.
inline BigRational profile_hurwitz_sum(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    const int n = mu.weight();
    if (nu.weight() != n)
        throw std::invalid_argument("profile_hurwitz_sum: mu and nu must have the same weight");
    if (lambda.empty())
        return frobenius_hurwitz(n, {mu, nu});
    if (lambda.parts().front() >= n)
        return 0;

    // One block per distinct colength; a block of size s over m candidate
    // profiles is a count vector, standing for s!/prod(counts!) orderings.
    struct Block {
        std::vector<Partition> candidates;
        std::vector<std::vector<int>> multisets;
        int size;
    };
    std::vector<Block> blocks;
    for (auto [part, mult] : lambda.multiplicities()) {
        Block b{enumerate_with_colength(n, part), {}, mult};
        std::vector<int> current;
        detail::count_vectors(b.candidates.size(), mult, current, b.multisets);
        blocks.push_back(std::move(b));
    }

    BigRational total = 0;
    std::vector<Partition> profiles;
    std::function<void(std::size_t, const BigInt&)> rec = [&](std::size_t block, const BigInt& orderings) {
        if (block == blocks.size()) {
            profiles.push_back(mu);
            profiles.push_back(nu);
            total += BigRational(orderings) * frobenius_hurwitz(n, profiles);
            profiles.resize(profiles.size() - 2);
            return;
        }
        const auto& b = blocks[block];
        for (const auto& counts : b.multisets) {
            BigInt mult = factorial(static_cast<unsigned>(b.size));
            const auto mark = profiles.size();
            for (std::size_t i = 0; i < counts.size(); ++i) {
                mult /= factorial(static_cast<unsigned>(counts[i]));
                profiles.insert(profiles.end(), static_cast<std::size_t>(counts[i]), b.candidates[i]);
            }
            rec(block + 1, orderings * mult);
            profiles.resize(mark);
        }
    };
    rec(0, BigInt(1));
    return total;
}

struct ProfileContribution {
    Partition lambda;
    BigRational hurwitz_sum;  // sum of pure Hurwitz numbers over configurations
    QSeries weight;           // w(lambda)
    QSeries contribution;     // weight * hurwitz_sum
};

struct QuantumHurwitzResult {
    int d = 0;
    Partition mu;
    Partition nu;
    QSeries series;
    std::vector<ProfileContribution> breakdown;
    /// n < 2d: the definition still applies but Z-normalized quantities
    /// depend on n.
    bool n_small_regime = false;
};

/// H^d_{E'(q)}(mu, nu) = sum over configurations of total colength d of
/// W(config) H(config, mu, nu), broken down by colength profile. d = 0 gives
/// the bare two-point number H(mu, nu).
inline QuantumHurwitzResult quantum_hurwitz(int d, const Partition& mu, const Partition& nu, int order)
{
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("quantum_hurwitz: |mu| and |nu| differ");
    if (d < 0)
        throw std::invalid_argument("quantum_hurwitz: d must be nonnegative");
    const int n = mu.weight();
    QuantumHurwitzResult result;
    result.d = d;
    result.mu = mu;
    result.nu = nu;
    result.series = QSeries(order);
    result.n_small_regime = n < 2 * d;
    for (const auto& lambda : admissible_profiles(n, d)) {
        ProfileContribution part;
        part.lambda = lambda;
        part.hurwitz_sum = profile_hurwitz_sum(lambda, mu, nu);
        part.weight = weight_w(lambda, order);
        part.contribution = part.weight * part.hurwitz_sum;
        result.series += part.contribution;
        result.breakdown.push_back(std::move(part));
    }
    return result;
}

inline QuantumHurwitzResult quantum_hurwitz(int d, const Partition& mu, const Partition& nu)
{
    return quantum_hurwitz(d, mu, nu, default_q_order(d));
}

/// H^d_G(mu, nu) for G(z) = prod_i (1 + c_i z) over a finite list of
/// parameters: each configuration is weighted by m_lambda(c). T is
/// BigRational for numeric parameters or QSeries for symbolic ones.
template <class T>
T weighted_hurwitz_general(std::span<const T> c, int d, const Partition& mu, const Partition& nu)
{
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("weighted_hurwitz_general: |mu| and |nu| differ");
    if (c.empty())
        throw std::invalid_argument("weighted_hurwitz_general: empty parameter list");
    const int n = mu.weight();
    T total = zero_like(c.front());
    for (const auto& lambda : admissible_profiles(n, d)) {
        auto h = profile_hurwitz_sum(lambda, mu, nu);
        if (h == 0)
            continue;
        total = total + monomial_sym(lambda, c) * h;
    }
    return total;
}

template <class T>
T weighted_hurwitz_general(const std::vector<T>& c, int d, const Partition& mu, const Partition& nu)
{
    return weighted_hurwitz_general(std::span<const T>(c), d, mu, nu);
}

struct LeadingTermsCheck {
    int d = 0;
    Partition mu;
    Partition nu;
    BigRational belyi_sum;  // A: single profiles of colength d
    BigRational pair_sum;   // B: ordered pairs of colengths (d-1, 1)
    BigRational series_leading;
    BigRational series_subleading;
    bool n_small_regime = false;

    bool pass() const { return belyi_sum == series_leading && pair_sum == series_subleading; }
};

/// Computes A and B directly from one- and two-profile enumerations and
/// compares them with the q^d, q^{d+1} coefficients of quantum_hurwitz.
inline LeadingTermsCheck expansion_leading_terms(int d, const Partition& mu, const Partition& nu)
{
    if (d < 2)
        throw std::invalid_argument("expansion_leading_terms needs d >= 2");
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("expansion_leading_terms: |mu| and |nu| differ");
    const int n = mu.weight();
    LeadingTermsCheck check;
    check.d = d;
    check.mu = mu;
    check.nu = nu;
    check.n_small_regime = n < 2 * d;

    if (d < n)
        for (const auto& first : enumerate_with_colength(n, d))
            check.belyi_sum += frobenius_hurwitz(n, {first, mu, nu});
    if (d - 1 < n)
        for (const auto& first : enumerate_with_colength(n, d - 1))
            for (const auto& second : enumerate_with_colength(n, 1))
                check.pair_sum += frobenius_hurwitz(n, {first, second, mu, nu});

    auto series = quantum_hurwitz(d, mu, nu, default_q_order(d)).series;
    check.series_leading = series.coeff(d);
    check.series_subleading = series.coeff(d + 1);
    return check;
}

/// Exact H^d_{E'(q)}(mu, nu) at a rational q, without truncation.
inline BigRational quantum_hurwitz_value(int d, const Partition& mu, const Partition& nu, const BigRational& q)
{
    require_unit_interval(q);
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("quantum_hurwitz_value: |mu| and |nu| differ");
    BigRational total = 0;
    for (const auto& lambda : admissible_profiles(mu.weight(), d)) {
        auto h = profile_hurwitz_sum(lambda, mu, nu);
        if (h != 0)
            total += h * weight_w_value(lambda, q);
    }
    return total;
}

/// <H(., ..., ., mu, nu)> under Theta: H^d(mu, nu)(q) / Z(q), exactly.
inline BigRational weighted_expectation(int d, const Partition& mu, const Partition& nu, const BigRational& q)
{
    if (d < 1)
        throw std::invalid_argument("weighted_expectation: d must be positive");
    require_unit_interval(q);
    const int n = mu.weight();
    BigRational z = partition_function_value(d, q, n);
    if (z == 0)
        throw std::invalid_argument("weighted_expectation: M^(n)_d is empty for n = " + std::to_string(n));
    return quantum_hurwitz_value(d, mu, nu, q) / z;
}

/// q -> 0+ limit of weighted_expectation: the uniform average of
/// H(mu^(1), mu, nu) over single profiles of colength d, i.e. A / p(d) when
/// n >= 2d.
inline BigRational expectation_zero_temp_limit(int d, const Partition& mu, const Partition& nu)
{
    const int n = mu.weight();
    if (d < 1 || d >= n)
        throw std::invalid_argument("expectation_zero_temp_limit: need 1 <= d < n");
    BigRational a = 0;
    const auto singles = enumerate_with_colength(n, d);
    for (const auto& first : singles)
        a += frobenius_hurwitz(n, {first, mu, nu});
    return a / BigRational(static_cast<std::int64_t>(singles.size()));
}

/// Riemann-Hurwitz: chi = 2n - d for the covering surface.
inline int euler_characteristic(int n, int d) { return 2 * n - d; }

/// Genus (2 - chi)/2; throws when chi is odd.
inline int genus(int n, int d)
{
    int chi = euler_characteristic(n, d);
    if (chi % 2 != 0)
        throw std::invalid_argument("odd Euler characteristic has no genus");
    return (2 - chi) / 2;
}

} // namespace qhurwitz
