#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "qhurwitz/rational.hpp"

namespace qhurwitz {

/// An integer partition: a weakly decreasing list of positive parts.
///
/// Partitions are immutable values ordered lexicographically on their parts,
/// so they can be used directly as keys in ordered containers. The empty
/// partition is a valid value of weight 0.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless the parts are positive and
    /// weakly decreasing.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into a partition.
    static Partition from_unsorted(std::vector<int> parts)
    {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// The partition (1^n).
    static Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_.at(i); }
    bool empty() const noexcept { return parts_.empty(); }

    int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int colength() const noexcept { return weight() - length(); }

    /// Multiplicity m_i of each distinct part value.
    std::map<int, int> multiplicities() const
    {
        std::map<int, int> m;
        for (int p : parts_)
            ++m[p];
        return m;
    }

    Partition conjugate() const
    {
        std::vector<int> conj;
        if (!parts_.empty()) {
            conj.assign(static_cast<std::size_t>(parts_.front()), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j)
                    ++conj[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(conj));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// A box of a Young diagram, 1-based; content is col - row.
struct Cell {
    int row;
    int col;
    int content;

    friend bool operator==(const Cell&, const Cell&) = default;
};

inline int colength(const Partition& p) { return p.colength(); }

/// |aut(lambda)| = product of m_i(lambda)!.
inline BigInt aut_order(const Partition& p)
{
    BigInt result = 1;
    for (auto [part, mult] : p.multiplicities())
        result *= factorial(static_cast<unsigned>(mult));
    return result;
}

/// Centralizer order z_mu = product of i^{m_i} m_i!.
inline BigInt z_order(const Partition& p)
{
    BigInt result = 1;
    for (auto [part, mult] : p.multiplicities()) {
        for (int j = 0; j < mult; ++j)
            result *= part;
        result *= factorial(static_cast<unsigned>(mult));
    }
    return result;
}

namespace detail {

inline void enumerate_bounded(int remaining, int max_part, std::vector<int>& prefix,
                              std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_bounded(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All partitions of d in reverse lexicographic order, e.g. 4, 31, 22, 211, 1111.
inline std::vector<Partition> enumerate_partitions(int d)
{
    if (d < 0)
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::enumerate_bounded(d, d, prefix, out);
    return out;
}

/// Partitions of n with colength c, i.e. with exactly n - c parts.
///
/// Built by adding a column of n - c ones to every partition of c with at
/// most n - c parts, so the output inherits reverse lexicographic order.
inline std::vector<Partition> enumerate_with_colength(int n, int c)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_with_colength: n must be positive");
    if (c < 0 || c >= n)
        throw std::invalid_argument("enumerate_with_colength: colength must satisfy 0 <= c < n");
    const int length = n - c;
    std::vector<Partition> out;
    for (const auto& rho : enumerate_partitions(c)) {
        if (rho.length() > length)
            continue;
        std::vector<int> parts(static_cast<std::size_t>(length), 1);
        for (std::size_t i = 0; i < rho.parts().size(); ++i)
            parts[i] += rho.parts()[i];
        out.emplace_back(std::move(parts));
    }
    return out;
}

/// Number of partitions p(d), from Euler's pentagonal number recurrence.
inline std::int64_t partition_count(int d)
{
    if (d < 0)
        return 0;
    std::vector<std::int64_t> p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= d; ++m) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(d)];
}

/// p(lambda) = product of p(lambda_j).
inline std::int64_t partition_count_product(const Partition& lambda)
{
    std::int64_t result = 1;
    for (int part : lambda.parts())
        result *= partition_count(part);
    return result;
}

inline std::vector<Cell> cells(const Partition& p)
{
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(p.weight()));
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.parts()[static_cast<std::size_t>(i - 1)]; ++j)
            out.push_back({i, j, j - i});
    return out;
}

inline BigRational one_like(const BigRational&) { return BigRational(1); }
inline BigRational zero_like(const BigRational&) { return BigRational(0); }

/// Monomial symmetric function m_lambda evaluated at finitely many values
/// (all further variables set to zero).
///
/// Sums each distinct monomial once by walking the distinct rearrangements of
/// the exponent vector (lambda padded with zeros). `T` is any commutative ring
/// type with `one_like` / `zero_like` overloads, e.g. BigRational or QSeries.
/// With `require_enough_variables`, throws if there are fewer values than
/// parts; otherwise such a specialization simply evaluates to zero.
template <class T>
T monomial_sym(const Partition& lambda, std::span<const T> values,
               bool require_enough_variables = false)
{
    const auto m = values.size();
    if (m < static_cast<std::size_t>(lambda.length())) {
        if (require_enough_variables)
            throw std::invalid_argument("monomial_sym: fewer values than parts");
        if (m == 0) {
            if constexpr (std::is_constructible_v<T, int>)
                return T(0);
            else
                throw std::invalid_argument("monomial_sym: empty value list");
        }
        return zero_like(values.front());
    }
    if (m == 0) {
        if constexpr (std::is_constructible_v<T, int>)
            return T(1);
        else
            throw std::invalid_argument("monomial_sym: empty value list");
    }

    std::vector<int> exponents(m, 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), exponents.begin());
    std::sort(exponents.begin(), exponents.end());

    // Powers cached per variable.
    const int max_exp = lambda.empty() ? 0 : lambda.parts().front();
    std::vector<std::vector<T>> powers(m);
    for (std::size_t i = 0; i < m; ++i) {
        powers[i].push_back(one_like(values[i]));
        for (int e = 1; e <= max_exp; ++e)
            powers[i].push_back(powers[i].back() * values[i]);
    }

    T total = zero_like(values.front());
    do {
        T term = one_like(values.front());
        for (std::size_t i = 0; i < m; ++i)
            if (exponents[i] != 0)
                term = term * powers[i][static_cast<std::size_t>(exponents[i])];
        total = total + term;
    } while (std::next_permutation(exponents.begin(), exponents.end()));
    return total;
}

template <class T>
T monomial_sym(const Partition& lambda, const std::vector<T>& values,
               bool require_enough_variables = false)
{
    return monomial_sym(lambda, std::span<const T>(values), require_enough_variables);
}

/// "3,1,1"; the empty partition renders as "-".
inline std::string to_string(const Partition& p)
{
    if (p.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << '(' << to_string(p) << ')';
}

/// Inverse of to_string. Parts must already be in weakly decreasing order.
inline Partition parse_partition(std::string_view text)
{
    if (text == "-")
        return Partition{};
    if (text.empty())
        throw std::invalid_argument("empty partition text (use \"-\" for the empty partition)");
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (token.empty() || token.size() > 6 ||
            !std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw std::invalid_argument("malformed partition: " + std::string(text));
        parts.push_back(std::stoi(std::string(token)));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

} // namespace qhurwitz
