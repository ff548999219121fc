#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhurwitz/beta_poly.hpp"
#include "qhurwitz/hurwitz.hpp"
#include "qhurwitz/partition.hpp"
#include "qhurwitz/qseries.hpp"
#include "qhurwitz/rational.hpp"
#include "qhurwitz/symgroup.hpp"

// Coefficients of the hypergeometric tau function
//   tau(t, s) = sum_lambda r_lambda s_lambda(t) s_lambda(s),
//   r_lambda  = prod over cells of G(beta * content),
// in the power-sum basis p_mu(t) p_nu(s). Only coefficients are computed;
// tau itself is never evaluated.

namespace qhurwitz {

/// G(beta c) for G = E'(q) = prod_{i >= 1} (1 + q^i z); factors with
/// i >= q_order are 1 modulo the truncation.
inline BetaQPoly g_of_betac(int content, int beta_order, int q_order)
{
    BetaQPoly g = bq_one(beta_order, q_order);
    if (content == 0)
        return g;
    for (int i = 1; i < q_order; ++i) {
        BetaQPoly factor = bq_one(beta_order, q_order);
        if (beta_order >= 1)
            factor.set_coeff(1, QSeries::monomial(i, BigRational(content), q_order));
        g = g * factor;
    }
    return g;
}

/// G(beta c) for G(z) = prod_i (1 + c_i z) over finitely many parameters.
inline BetaRationalPoly g_of_betac_general(std::span<const BigRational> params, int content, int beta_order)
{
    auto g = BetaRationalPoly::one(beta_order, BigRational(1), BigRational(0));
    if (content == 0)
        return g;
    for (const auto& c : params) {
        auto factor = BetaRationalPoly::one(beta_order, BigRational(1), BigRational(0));
        if (beta_order >= 1)
            factor.set_coeff(1, c * content);
        g = g * factor;
    }
    return g;
}

struct ContentProduct {
    Partition lambda;
    BetaQPoly value;
};

/// r_lambda = prod over cells (i, j) of G(beta (j - i)), G = E'(q).
inline ContentProduct content_product(const Partition& lambda, int beta_order, int q_order)
{
    std::map<int, BetaQPoly> per_content;
    BetaQPoly r = bq_one(beta_order, q_order);
    for (const auto& cell : cells(lambda)) {
        if (cell.content == 0)
            continue;
        auto it = per_content.find(cell.content);
        if (it == per_content.end())
            it = per_content.emplace(cell.content, g_of_betac(cell.content, beta_order, q_order)).first;
        r = r * it->second;
    }
    return {lambda, r};
}

inline BetaRationalPoly content_product_general(std::span<const BigRational> params, const Partition& lambda,
                                                int beta_order)
{
    auto r = BetaRationalPoly::one(beta_order, BigRational(1), BigRational(0));
    for (const auto& cell : cells(lambda))
        if (cell.content != 0)
            r = r * g_of_betac_general(params, cell.content, beta_order);
    return r;
}

/// beta^d coefficient of [p_mu(t) p_nu(s)] tau, using
/// s_lambda = sum_mu chi_lambda(mu) p_mu / z_mu.
inline QSeries tau_coefficient(const Partition& mu, const Partition& nu, int d, int q_order)
{
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("tau_coefficient: |mu| and |nu| differ");
    if (d < 0)
        throw std::invalid_argument("tau_coefficient: negative beta degree");
    const int n = mu.weight();
    const BigRational norm(BigInt(1), z_order(mu) * z_order(nu));
    QSeries total(q_order);
    for (const auto& lambda : enumerate_partitions(n)) {
        const std::int64_t chi = character(lambda, mu) * character(lambda, nu);
        if (chi == 0)
            continue;
        auto r = content_product(lambda, d, q_order);
        total += r.value.coeff(d) * (BigRational(chi) * norm);
    }
    return total;
}

inline QSeries tau_coefficient(const Partition& mu, const Partition& nu, int d)
{
    return tau_coefficient(mu, nu, d, default_q_order(d));
}

/// Same extraction for G(z) = prod_i (1 + c_i z) with numeric parameters.
inline BigRational tau_coefficient_general(std::span<const BigRational> params, const Partition& mu,
                                           const Partition& nu, int d)
{
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("tau_coefficient_general: |mu| and |nu| differ");
    const BigRational norm(BigInt(1), z_order(mu) * z_order(nu));
    BigRational total = 0;
    for (const auto& lambda : enumerate_partitions(mu.weight())) {
        const std::int64_t chi = character(lambda, mu) * character(lambda, nu);
        if (chi != 0)
            total += content_product_general(params, lambda, d).coeff(d) * BigRational(chi) * norm;
    }
    return total;
}

inline constexpr int kTauCheckMaxDegree = 6;
inline constexpr int kTauCheckMaxBeta = 5;

struct TauCheckEntry {
    int n = 0;
    int d = 0;
    Partition mu;
    Partition nu;
    QSeries tau;
    QSeries hurwitz;

    bool match() const { return tau == hurwitz; }
    bool zero() const { return tau.is_zero() && hurwitz.is_zero(); }
};

struct TauCheckReport {
    int n_max = 0;
    int d_max = 0;
    std::vector<TauCheckEntry> entries;

    std::size_t pairs_checked() const { return entries.size(); }

    std::size_t pairs_zero() const
    {
        std::size_t count = 0;
        for (const auto& e : entries)
            count += e.zero() ? 1 : 0;
        return count;
    }

    std::size_t mismatches() const
    {
        std::size_t count = 0;
        for (const auto& e : entries)
            count += e.match() ? 0 : 1;
        return count;
    }

    bool all_pass() const { return mismatches() == 0; }
};

/// Compares tau_coefficient(mu, nu, d) with quantum_hurwitz(d, mu, nu) for
/// every 1 <= n <= n_max, 0 <= d <= d_max and mu, nu |- n, at q-order d + 4.
/// Mismatches are recorded in the report, not thrown.
inline TauCheckReport verify_generating_function(int n_max, int d_max)
{
    if (n_max < 1 || n_max > kTauCheckMaxDegree)
        throw std::invalid_argument("verify_generating_function: n_max must be in 1.." +
                                    std::to_string(kTauCheckMaxDegree));
    if (d_max < 0 || d_max > kTauCheckMaxBeta)
        throw std::invalid_argument("verify_generating_function: d_max must be in 0.." +
                                    std::to_string(kTauCheckMaxBeta));
    TauCheckReport report{n_max, d_max, {}};
    for (int n = 1; n <= n_max; ++n) {
        const auto parts = enumerate_partitions(n);
        for (int d = 0; d <= d_max; ++d) {
            const int order = default_q_order(d);
            for (const auto& mu : parts) {
                for (const auto& nu : parts) {
                    TauCheckEntry e;
                    e.n = n;
                    e.d = d;
                    e.mu = mu;
                    e.nu = nu;
                    e.tau = tau_coefficient(mu, nu, d, order);
                    e.hurwitz = quantum_hurwitz(d, mu, nu, order).series;
                    report.entries.push_back(std::move(e));
                }
            }
        }
    }
    return report;
}

} // namespace qhurwitz
