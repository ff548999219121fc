#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qhurwitz/qseries.hpp"

namespace qhurwitz {

/// Polynomial in the bookkeeping variable beta, truncated above degree
/// `beta_order`, with coefficients in a commutative ring `Coeff`
/// (QSeries for the quantum weighting, BigRational for finite
/// specializations).
template <class Coeff>
class BetaPoly {
public:
    /// The zero polynomial; `zero` fixes the coefficient shape (e.g. series order).
    BetaPoly(int beta_order, const Coeff& zero)
        : coeffs_(checked_size(beta_order), zero)
    {
    }

    static BetaPoly one(int beta_order, const Coeff& one, const Coeff& zero)
    {
        BetaPoly p(beta_order, zero);
        p.coeffs_[0] = one;
        return p;
    }

    int beta_order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    const Coeff& coeff(int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    void set_coeff(int degree, Coeff value) { coeffs_.at(static_cast<std::size_t>(degree)) = std::move(value); }

    /// p(beta) -> p(-beta).
    BetaPoly negated_beta() const
    {
        BetaPoly out = *this;
        for (std::size_t d = 1; d < out.coeffs_.size(); d += 2)
            out.coeffs_[d] = -out.coeffs_[d];
        return out;
    }

    friend BetaPoly operator+(const BetaPoly& a, const BetaPoly& b)
    {
        const auto n = std::min(a.coeffs_.size(), b.coeffs_.size());
        BetaPoly out = a;
        out.coeffs_.resize(n, a.coeffs_.front());
        for (std::size_t d = 0; d < n; ++d)
            out.coeffs_[d] = a.coeffs_[d] + b.coeffs_[d];
        return out;
    }

    /// Product truncated at the smaller beta order.
    friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b)
    {
        const auto n = std::min(a.coeffs_.size(), b.coeffs_.size());
        Coeff zero = a.coeffs_.front() - a.coeffs_.front();
        BetaPoly out(static_cast<int>(n) - 1, zero);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; i + j < n; ++j)
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return out;
    }

    friend bool operator==(const BetaPoly&, const BetaPoly&) = default;

private:
    static std::size_t checked_size(int beta_order)
    {
        if (beta_order < 0)
            throw std::invalid_argument("BetaPoly: negative beta order");
        return static_cast<std::size_t>(beta_order) + 1;
    }

    std::vector<Coeff> coeffs_;
};

using BetaQPoly = BetaPoly<QSeries>;
using BetaRationalPoly = BetaPoly<BigRational>;

inline BetaQPoly bq_mul(const BetaQPoly& a, const BetaQPoly& b) { return a * b; }

inline BetaQPoly bq_one(int beta_order, int q_order)
{
    return BetaQPoly::one(beta_order, QSeries::constant(1, q_order), QSeries(q_order));
}

} // namespace qhurwitz
