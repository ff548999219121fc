#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qhurwitz {

// Exact rationals, always stored reduced with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    return BigRational(BigInt(num), BigInt(den));
}

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const BigRational& r)
{
    const auto& num = boost::multiprecision::numerator(r);
    const auto& den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p/q" or "p" (optional leading minus). Throws std::invalid_argument.
inline BigRational parse_rational(std::string_view text)
{
    auto parse_int = [](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("empty integer in rational");
        std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("malformed integer in rational");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational: " + std::string(s));
        return BigInt(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return BigRational(parse_int(text));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    return BigRational(parse_int(text.substr(0, slash)), den);
}

inline double to_double(const BigRational& r)
{
    return r.convert_to<double>();
}

inline BigInt factorial(unsigned n)
{
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline BigRational pow(const BigRational& base, unsigned exponent)
{
    BigRational result = 1;
    BigRational b = base;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= b;
        exponent >>= 1U;
        if (exponent != 0)
            b *= b;
    }
    return result;
}

} // namespace qhurwitz
