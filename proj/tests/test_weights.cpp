#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qhurwitz/weights.hpp"

using namespace qhurwitz;

namespace {

QSeries series(std::initializer_list<int> coeffs, int order)
{
    std::vector<BigRational> c;
    for (int v : coeffs)
        c.emplace_back(v);
    return QSeries(order, c);
}

// m_lambda(q, q^2, ..., q^M) through the generic monomial evaluator; with
// M >= order this is exact modulo q^order.
QSeries monomial_at_powers(const Partition& lambda, int order)
{
    std::vector<QSeries> values;
    for (int i = 1; i <= order; ++i)
        values.push_back(QSeries::monomial(i, 1, order));
    return monomial_sym(lambda, values);
}

} // namespace

TEST(Weights, SingleProfileIsBoseFactor)
{
    for (int d = 1; d <= 8; ++d) {
        const int order = 2 * d + 4;
        EXPECT_EQ(weight_w(Partition{d}, order), oracle::geometric_tail(d, order));
        BranchConfig single({enumerate_with_colength(d + 2, d).front()});
        EXPECT_EQ(weight_W(single, order), oracle::geometric_tail(d, order));
    }
    EXPECT_EQ(weight_w(Partition{1}, 5), series({0, 1, 1, 1, 1}, 5));
}

TEST(Weights, PairOfUnitColengths)
{
    // (1/2) * 2 * [q/(1-q)] [q^2/(1-q^2)] = q^3 + q^4 + 2 q^5 + ...
    EXPECT_EQ(weight_w(Partition{1, 1}, 6), series({0, 0, 0, 1, 1, 2}, 6));
    BranchConfig config({Partition{2, 1, 1}, Partition{2, 1, 1}});
    EXPECT_EQ(weight_W(config, 6), series({0, 0, 0, 1, 1, 2}, 6));
}

TEST(Weights, NearSingleRowProfile)
{
    // w((d-1,1)) = q^{d+1} + q^{d+2} + O(q^{d+3}) for d >= 4.
    for (int d = 4; d <= 7; ++d) {
        auto w = weight_w(Partition{d - 1, 1}, d + 3);
        EXPECT_EQ(w.valuation(), d + 1);
        EXPECT_EQ(w.coeff(d + 1), 1);
        EXPECT_EQ(w.coeff(d + 2), 1);
    }
    auto w4 = weight_w(Partition{3, 1}, 7);
    EXPECT_EQ(w4.coeff(5), 1);
    EXPECT_EQ(w4.coeff(6), 1);
    // d = 3: the swapped ordering also reaches q^{d+2}.
    auto w3 = weight_w(Partition{2, 1}, 6);
    EXPECT_EQ(w3.coeff(4), 1);
    EXPECT_EQ(w3.coeff(5), 2);
}

TEST(Weights, EqualsMonomialAtQuantumSpecialization)
{
    for (int d = 1; d <= 6; ++d) {
        const int order = d + 4;
        for (const auto& lambda : enumerate_partitions(d))
            EXPECT_EQ(weight_w(lambda, order), monomial_at_powers(lambda, order)) << lambda;
    }
}

TEST(Weights, LeadingTerm)
{
    auto l = weight_w_leading(Partition{5});
    EXPECT_EQ(l.exponent, 5);
    EXPECT_EQ(l.coefficient, 1);
    l = weight_w_leading(Partition{1, 1});
    EXPECT_EQ(l.exponent, 3);
    EXPECT_EQ(l.coefficient, make_rational(1, 2));
    l = weight_w_leading(Partition{2, 1});
    EXPECT_EQ(l.exponent, 4);
    EXPECT_EQ(l.coefficient, 1);
    EXPECT_THROW(weight_w_leading(Partition{}), std::invalid_argument);
}

TEST(Weights, LeadingTermBoundsFullSeries)
{
    for (int d = 1; d <= 7; ++d) {
        for (const auto& lambda : enumerate_partitions(d)) {
            auto lead = weight_w_leading(lambda);
            auto w = weight_w(lambda, lead.exponent + 2);
            EXPECT_EQ(w.valuation(), lead.exponent) << lambda;
            EXPECT_GE(w.coeff(lead.exponent), lead.coefficient);
            if (aut_order(lambda) == 1) {
                EXPECT_EQ(w.coeff(lead.exponent), 1);
            }
        }
    }
}

TEST(Weights, WFactorsThroughColengthProfileAndIsExchangeable)
{
    std::mt19937 rng(3);
    for (int n = 4; n <= 8; n += 2) {
        const int d = n / 2;
        for (const auto& config : enumerate_branch_configs(n, d)) {
            const int order = d + 4;
            auto w = weight_W(config, order);
            EXPECT_EQ(w, weight_w(config.colength_profile(), order));
            auto profiles = config.profiles();
            std::shuffle(profiles.begin(), profiles.end(), rng);
            EXPECT_EQ(weight_W(BranchConfig(profiles), order), w);
        }
    }
}

TEST(Weights, ExactValueMatchesSeriesShadow)
{
    const BigRational q = make_rational(1, 50);
    for (int d = 1; d <= 5; ++d) {
        for (const auto& lambda : enumerate_partitions(d)) {
            const int order = 30;
            BigRational diff = weight_w_value(lambda, q) - weight_w(lambda, order).evaluate(q);
            if (diff < 0)
                diff = -diff;
            // Truncation tail: coefficients grow polynomially, so q^(order-2) bounds it.
            EXPECT_LT(diff, pow(q, order - 2)) << lambda;
        }
    }
}

TEST(PartitionFunction, Examples)
{
    auto z2 = partition_function_Z(2);
    EXPECT_EQ(z2.coeff(2), 2);
    EXPECT_EQ(z2.coeff(3), 1);
    auto z3 = partition_function_Z(3);
    EXPECT_EQ(z3.coeff(3), 3);
    EXPECT_EQ(z3.coeff(4), 2);
    EXPECT_EQ(partition_function_Z(1, 6), series({0, 1, 1, 1, 1, 1}, 6));
    EXPECT_THROW(partition_function_Z(0, 4), std::invalid_argument);
}

TEST(PartitionFunction, LambdaSumEqualsDirectSummation)
{
    for (int d = 1; d <= 5; ++d) {
        const int order = d + 4;
        EXPECT_EQ(partition_function_Z(d, order), partition_function_Z_direct(2 * d, d, order)) << d;
    }
}

TEST(PartitionFunction, ExactValueUsesFibreSizes)
{
    const BigRational q = make_rational(1, 10);
    // n = 4, d = 2: two single profiles (3,1), (2,2) plus the pair of (2,1,1).
    EXPECT_EQ(partition_function_value(2, q, 4), make_rational(19, 891));
    EXPECT_EQ(partition_function_value(2, q), make_rational(19, 891));
    // n = 3, d = 2: only (3) and ((2,1),(2,1)).
    EXPECT_EQ(partition_function_value(2, q, 3), make_rational(1, 99) + make_rational(1, 891));
}

TEST(ZeroTempExpansion, LeadingPartitionCounts)
{
    EXPECT_EQ(zero_temp_expansion(2), (std::pair<std::int64_t, std::int64_t>{2, 1}));
    EXPECT_EQ(zero_temp_expansion(4), (std::pair<std::int64_t, std::int64_t>{5, 3}));
    EXPECT_EQ(zero_temp_expansion(5), (std::pair<std::int64_t, std::int64_t>{7, 5}));
    EXPECT_THROW(zero_temp_expansion(1), std::invalid_argument);
    auto check = check_zero_temp_expansion(6, 10);
    EXPECT_TRUE(check.pass());
    EXPECT_EQ(check.computed_leading, 11);
    EXPECT_EQ(check.computed_subleading, 7);
}

TEST(Measures, PushforwardExample)
{
    auto report = pushforward_measure(2, make_rational(1, 10));
    EXPECT_EQ(report.probability(Partition{2}), make_rational(18, 19));
    EXPECT_EQ(report.probability(Partition{1, 1}), make_rational(1, 19));
    EXPECT_EQ(report.total(), 1);
    EXPECT_THROW(pushforward_measure(2, make_rational(3, 2)), std::invalid_argument);
    EXPECT_THROW(pushforward_measure(2, BigRational(0)), std::invalid_argument);
}

TEST(Measures, PushforwardConcentratesAtSingleRow)
{
    auto report = pushforward_measure(4, make_rational(1, 100));
    EXPECT_GT(report.probability(Partition{4}), make_rational(98, 100));
    // Dirac convergence in finite form: bisect for a threshold below which
    // the mass at (d) exceeds 0.99, then probe points below it.
    for (int d = 2; d <= 6; ++d) {
        BigRational lo = make_rational(1, 1000000), hi = make_rational(1, 2);
        auto mass = [&](const BigRational& q) { return pushforward_measure(d, q).probability(Partition{d}); };
        ASSERT_GT(mass(lo), make_rational(99, 100));
        for (int iter = 0; iter < 20; ++iter) {
            BigRational mid = (lo + hi) / 2;
            if (mass(mid) > make_rational(99, 100))
                lo = mid;
            else
                hi = mid;
        }
        for (int k = 1; k <= 4; ++k)
            EXPECT_GT(mass(lo / (k * k)), make_rational(99, 100)) << d;
    }
}

TEST(Measures, ThetaExample)
{
    const BigRational q = make_rational(1, 10);
    BranchConfig config({Partition{2, 2}});
    EXPECT_EQ(theta_measure(config, 2, 4, q), make_rational(9, 19));
    EXPECT_THROW(theta_measure(config, 3, 4, q), std::invalid_argument);
    EXPECT_THROW(theta_measure(config, 2, 5, q), std::invalid_argument);
    BigRational total = 0;
    for (const auto& [c, p] : theta_distribution(4, 2, q))
        total += p;
    EXPECT_EQ(total, 1);
}

TEST(Measures, ThetaConcentratesOnSingleProfiles)
{
    const BigRational q = make_rational(1, 100);
    BigRational single_mass = 0;
    for (const auto& [c, p] : theta_distribution(8, 3, q))
        if (c.size() == 1)
            single_mass += p;
    EXPECT_GE(single_mass, make_rational(98, 100));
}

TEST(Measures, RandomInstancesAreProbabilityVectors)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 6);
        const auto den = 2 + static_cast<std::int64_t>(rng() % 50);
        const auto num = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den - 1));
        auto q = make_rational(num, den);
        auto report = pushforward_measure(d, q);
        EXPECT_EQ(report.total(), 1);
        for (const auto& [lambda, p] : report.support)
            EXPECT_GE(p, 0);
        if (d <= 3) {
            BigRational total = 0;
            for (const auto& [c, p] : theta_distribution(2 * d + static_cast<int>(rng() % 2), d, q)) {
                EXPECT_GE(p, 0);
                total += p;
            }
            EXPECT_EQ(total, 1);
        }
    }
}

TEST(BranchConfigs, EnumerationCounts)
{
    // |M^(n)_{d,1}| = p(d) and the whole set has sum_lambda p(lambda) elements.
    for (int d = 1; d <= 4; ++d) {
        const int n = 2 * d;
        EXPECT_EQ(static_cast<std::int64_t>(enumerate_branch_configs(n, d, 1).size()), partition_count(d));
        std::int64_t expected = 0;
        for (const auto& lambda : enumerate_partitions(d))
            expected += partition_count_product(lambda);
        auto all = enumerate_branch_configs(n, d);
        EXPECT_EQ(static_cast<std::int64_t>(all.size()), expected);
        for (const auto& c : all) {
            EXPECT_EQ(c.total_colength(), d);
            EXPECT_EQ(c.degree(), n);
        }
    }
}
