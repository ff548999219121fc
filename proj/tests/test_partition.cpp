#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qhurwitz/partition.hpp"
#include "qhurwitz/symgroup.hpp"

using namespace qhurwitz;

TEST(Partition, RejectsInvalidParts)
{
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_NO_THROW(Partition({2, 2, 1}));
    EXPECT_EQ(Partition::from_unsorted({1, 3, 2}), Partition({3, 2, 1}));
}

TEST(Partition, Colength)
{
    EXPECT_EQ(colength(Partition{1, 1, 1}), 0);
    EXPECT_EQ(colength(Partition{2, 1}), 1);
    EXPECT_EQ(colength(Partition{5}), 4);
    EXPECT_EQ(colength(Partition{}), 0);
}

TEST(Partition, AutOrder)
{
    EXPECT_EQ(aut_order(Partition{3, 1}), 1);
    EXPECT_EQ(aut_order(Partition{2, 2, 1}), 2);
    EXPECT_EQ(aut_order(Partition{1, 1, 1, 1}), 24);
}

TEST(Partition, ZOrder)
{
    EXPECT_EQ(z_order(Partition{1, 1, 1}), 6);
    EXPECT_EQ(z_order(Partition{3}), 3);
    EXPECT_EQ(z_order(Partition{2, 1}), 2);
}

TEST(Partition, EnumerationSmallCases)
{
    EXPECT_EQ(enumerate_partitions(2), (std::vector<Partition>{{2}, {1, 1}}));
    EXPECT_EQ(enumerate_partitions(4).size(), 5U);
    auto zero = enumerate_partitions(0);
    ASSERT_EQ(zero.size(), 1U);
    EXPECT_TRUE(zero.front().empty());
    EXPECT_EQ(enumerate_partitions(4),
              (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
}

TEST(Partition, EnumerationMatchesCountsAndOracle)
{
    const std::vector<std::int64_t> table{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int d = 0; d <= 8; ++d) {
        auto parts = enumerate_partitions(d);
        EXPECT_EQ(static_cast<std::int64_t>(parts.size()), table[static_cast<std::size_t>(d)]) << d;
        EXPECT_EQ(partition_count(d), table[static_cast<std::size_t>(d)]);
        std::set<Partition> unique(parts.begin(), parts.end());
        EXPECT_EQ(unique.size(), parts.size());
        for (const auto& p : parts)
            EXPECT_EQ(p.weight(), d);
        // Reverse lexicographic: strictly decreasing in the lexicographic order.
        EXPECT_TRUE(std::is_sorted(parts.begin(), parts.end(), std::greater<>()));
        auto brute = oracle::partitions_by_compositions(d);
        EXPECT_EQ(std::set<Partition>(brute.begin(), brute.end()), unique);
    }
    EXPECT_EQ(partition_count(20), 627);
}

TEST(Partition, WithColength)
{
    EXPECT_EQ(enumerate_with_colength(6, 2), (std::vector<Partition>{{3, 1, 1, 1}, {2, 2, 1, 1}}));
    EXPECT_EQ(enumerate_with_colength(4, 0), (std::vector<Partition>{{1, 1, 1, 1}}));
    EXPECT_EQ(enumerate_with_colength(8, 3).size(), 3U);
    EXPECT_THROW(enumerate_with_colength(4, 4), std::invalid_argument);
    EXPECT_THROW(enumerate_with_colength(4, -1), std::invalid_argument);
}

TEST(Partition, WithColengthAgainstFilterOracle)
{
    for (int n = 1; n <= 10; ++n) {
        for (int c = 0; c < n; ++c) {
            std::set<Partition> filtered;
            for (const auto& p : oracle::partitions_by_compositions(n))
                if (p.colength() == c)
                    filtered.insert(p);
            auto got = enumerate_with_colength(n, c);
            EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), filtered) << n << " " << c;
            if (n >= 2 * c)
                EXPECT_EQ(static_cast<std::int64_t>(got.size()), partition_count(c));
            else
                EXPECT_LE(static_cast<std::int64_t>(got.size()), partition_count(c));
            if (c < n - 1) {
                // Monotone in n.
                EXPECT_LE(got.size(), enumerate_with_colength(n + 1, c).size());
            }
        }
    }
}

TEST(Partition, Cells)
{
    auto contents = [](const Partition& p) {
        std::multiset<int> out;
        for (const auto& cell : cells(p))
            out.insert(cell.content);
        return out;
    };
    EXPECT_EQ(contents(Partition{2, 1}), (std::multiset<int>{0, 1, -1}));
    EXPECT_EQ(contents(Partition{1}), (std::multiset<int>{0}));
    EXPECT_EQ(contents(Partition{3}), (std::multiset<int>{0, 1, 2}));
    auto c = cells(Partition{2, 1});
    ASSERT_EQ(c.size(), 3U);
    EXPECT_EQ(c[0], (Cell{1, 1, 0}));
    EXPECT_EQ(c[1], (Cell{1, 2, 1}));
    EXPECT_EQ(c[2], (Cell{2, 1, -1}));
}

TEST(Partition, MonomialSymExamples)
{
    const BigRational a = make_rational(2, 7);
    const BigRational b = make_rational(-5, 3);
    std::vector<BigRational> ab{a, b};
    EXPECT_EQ(monomial_sym(Partition{1}, ab), a + b);
    EXPECT_EQ(monomial_sym(Partition{1, 1}, ab), a * b);
    std::vector<BigRational> c{2, 3};
    EXPECT_EQ(monomial_sym(Partition{2, 1}, c), BigRational(30));
    EXPECT_EQ(monomial_sym(Partition{}, c), BigRational(1));
    // Fewer variables than parts: zero, or an error when exactness is requested.
    EXPECT_EQ(monomial_sym(Partition{1, 1, 1}, c), BigRational(0));
    EXPECT_THROW(monomial_sym(Partition{1, 1, 1}, c, true), std::invalid_argument);
}

TEST(Partition, MonomialSymMatchesInjectionSumAndIsSymmetric)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<BigRational> c;
        for (int i = 0; i < 5; ++i)
            c.push_back(make_rational(num(rng), den(rng)));
        for (const auto& lambda : enumerate_partitions(4)) {
            const auto value = monomial_sym(lambda, c);
            EXPECT_EQ(value, oracle::monomial_by_injections(lambda, c));
            auto shuffled = c;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            EXPECT_EQ(monomial_sym(lambda, shuffled), value);
        }
    }
}

TEST(Partition, ClassSizesSumToGroupOrder)
{
    for (int d = 1; d <= 8; ++d) {
        BigInt total = 0;
        for (const auto& lambda : enumerate_partitions(d))
            total += factorial(static_cast<unsigned>(d)) / z_order(lambda);
        EXPECT_EQ(total, factorial(static_cast<unsigned>(d)));
    }
}

TEST(Partition, AutTimesDistinctOrderingsIsLengthFactorial)
{
    for (int d = 1; d <= 7; ++d) {
        for (const auto& lambda : enumerate_partitions(d)) {
            auto parts = lambda.parts();
            std::sort(parts.begin(), parts.end());
            BigInt orderings = 0;
            do {
                ++orderings;
            } while (std::next_permutation(parts.begin(), parts.end()));
            EXPECT_EQ(aut_order(lambda) * orderings, factorial(static_cast<unsigned>(lambda.length())));
        }
    }
}

TEST(Partition, TextForm)
{
    EXPECT_EQ(to_string(Partition{3, 1, 1}), "3,1,1");
    EXPECT_EQ(to_string(Partition{}), "-");
    EXPECT_EQ(parse_partition("3,1,1"), (Partition{3, 1, 1}));
    EXPECT_EQ(parse_partition("-"), Partition{});
    EXPECT_THROW(parse_partition("1,3"), std::invalid_argument);
    EXPECT_THROW(parse_partition("3,,1"), std::invalid_argument);
    EXPECT_THROW(parse_partition("a"), std::invalid_argument);
    EXPECT_THROW(parse_partition(""), std::invalid_argument);
    for (int d = 0; d <= 6; ++d)
        for (const auto& p : enumerate_partitions(d))
            EXPECT_EQ(parse_partition(to_string(p)), p);
}

TEST(Partition, Conjugate)
{
    EXPECT_EQ(Partition({3, 1}).conjugate(), (Partition{2, 1, 1}));
    for (const auto& p : enumerate_partitions(7))
        EXPECT_EQ(p.conjugate().conjugate(), p);
}
