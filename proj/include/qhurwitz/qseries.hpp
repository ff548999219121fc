#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhurwitz/rational.hpp"

namespace qhurwitz {

/// Truncated power series in q with exact rational coefficients, known
/// modulo O(q^order). Binary operations on series of different orders
/// truncate to the smaller order.
class QSeries {
public:
    QSeries() : QSeries(1) {}

    explicit QSeries(int order) : coeffs_(checked_order(order)) {}

    QSeries(int order, std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(checked_order(order));
    }

    static QSeries constant(const BigRational& c, int order)
    {
        QSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c * q^power, or zero if power >= order.
    static QSeries monomial(int power, const BigRational& c, int order)
    {
        if (power < 0)
            throw std::invalid_argument("QSeries::monomial: negative power");
        QSeries s(order);
        if (power < order)
            s.coeffs_[static_cast<std::size_t>(power)] = c;
        return s;
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()); }
    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^power; zero when power is at or beyond the truncation.
    BigRational coeff(int power) const
    {
        if (power < 0 || power >= order())
            return BigRational(0);
        return coeffs_[static_cast<std::size_t>(power)];
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c == 0; });
    }

    /// Smallest power with a nonzero coefficient, or order() for the zero series.
    int valuation() const
    {
        for (int i = 0; i < order(); ++i)
            if (coeffs_[static_cast<std::size_t>(i)] != 0)
                return i;
        return order();
    }

    QSeries truncated(int order) const
    {
        QSeries s(order);
        for (int i = 0; i < std::min(order, this->order()); ++i)
            s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
        return s;
    }

    QSeries& operator+=(const QSeries& other)
    {
        shrink_to(other.order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
        return *this;
    }

    QSeries& operator-=(const QSeries& other)
    {
        shrink_to(other.order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= other.coeffs_[i];
        return *this;
    }

    QSeries& operator*=(const BigRational& scalar)
    {
        for (auto& c : coeffs_)
            c *= scalar;
        return *this;
    }

    QSeries& operator*=(const QSeries& other) { return *this = *this * other; }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const BigRational& s) { return a *= s; }
    friend QSeries operator*(const BigRational& s, QSeries a) { return a *= s; }

    friend QSeries operator-(QSeries a)
    {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }

    /// Cauchy product, truncated.
    friend QSeries operator*(const QSeries& a, const QSeries& b)
    {
        const int n = std::min(a.order(), b.order());
        QSeries out(n);
        for (int i = 0; i < n; ++i) {
            const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (ai == 0)
                continue;
            for (int j = 0; i + j < n; ++j) {
                const auto& bj = b.coeffs_[static_cast<std::size_t>(j)];
                if (bj != 0)
                    out.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
            }
        }
        return out;
    }

    friend bool operator==(const QSeries&, const QSeries&) = default;

    /// Multiplicative inverse modulo q^order. Throws std::domain_error if the
    /// constant term is zero.
    QSeries inverse() const
    {
        const auto& a0 = coeffs_.front();
        if (a0 == 0)
            throw std::domain_error("QSeries::inverse: constant term is zero");
        QSeries b(order());
        b.coeffs_[0] = 1 / a0;
        for (int m = 1; m < order(); ++m) {
            BigRational acc = 0;
            for (int j = 1; j <= m; ++j)
                acc += coeffs_[static_cast<std::size_t>(j)] * b.coeffs_[static_cast<std::size_t>(m - j)];
            b.coeffs_[static_cast<std::size_t>(m)] = -acc / a0;
        }
        return b;
    }

    /// Value of the truncated polynomial at a rational point.
    BigRational evaluate(const BigRational& q) const
    {
        BigRational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * q + *it;
        return acc;
    }

private:
    static std::size_t checked_order(int order)
    {
        if (order < 1)
            throw std::invalid_argument("QSeries order must be positive");
        return static_cast<std::size_t>(order);
    }

    void shrink_to(int order)
    {
        if (order < this->order())
            coeffs_.resize(static_cast<std::size_t>(order));
    }

    std::vector<BigRational> coeffs_;
};

inline QSeries one_like(const QSeries& s) { return QSeries::constant(1, s.order()); }
inline QSeries zero_like(const QSeries& s) { return QSeries(s.order()); }

inline QSeries qs_add(const QSeries& a, const QSeries& b) { return a + b; }
inline QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries qs_neg(const QSeries& a) { return -a; }
inline QSeries qs_inverse(const QSeries& a) { return a.inverse(); }

/// q^a / (1 - q^a) = sum_{m >= 1} q^{a m}, the Bose occupation factor at
/// energy a (in units of the ground level) when q = exp(-E0 / kT).
inline QSeries qs_bose_factor(int a, int order)
{
    if (a < 1)
        throw std::invalid_argument("qs_bose_factor: exponent must be positive");
    QSeries s(order);
    for (int power = a; power < order; power += a)
        s = s + QSeries::monomial(power, 1, order);
    return s;
}

/// Exact value of q^a / (1 - q^a) at a rational q in (0, 1).
inline BigRational bose_factor_value(int a, const BigRational& q)
{
    if (a < 1)
        throw std::invalid_argument("bose_factor_value: exponent must be positive");
    BigRational qa = pow(q, static_cast<unsigned>(a));
    return qa / (1 - qa);
}

/// Human-readable rendering, e.g. "2q^2 + q^3 + O(q^4)".
inline std::string to_string(const QSeries& s)
{
    std::string out;
    for (int i = 0; i < s.order(); ++i) {
        const auto& c = s.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        bool negative = c < 0;
        BigRational mag = negative ? BigRational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string power = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
        if (mag != 1 || i == 0) {
            std::string ms = to_string(mag);
            if (ms.find('/') != std::string::npos && i != 0)
                ms = "(" + ms + ")";
            out += ms;
        }
        out += power;
    }
    if (out.empty())
        out = "0";
    return out + " + O(q^" + std::to_string(s.order()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << to_string(s); }

} // namespace qhurwitz
