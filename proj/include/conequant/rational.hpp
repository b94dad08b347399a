#ifndef CONEQUANT_RATIONAL_HPP
#define CONEQUANT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conequant {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(Int num, Int den)
{
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    return Rat(std::move(num), std::move(den));
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Generalized binomial coefficient C(i, m) = i(i-1)...(i-m+1)/m!,
/// defined for any integer i and m >= 0.
inline Rat gen_binomial(const Int& i, long m)
{
    if (m < 0)
        throw std::invalid_argument("gen_binomial: negative m");
    Int num = 1, den = 1;
    for (long k = 0; k < m; ++k) {
        num *= i - k;
        den *= k + 1;
    }
    return make_rat(std::move(num), std::move(den));
}

inline Rat gen_binomial(long i, long m) { return gen_binomial(Int(i), m); }

inline std::string rat_str(const Rat& q)
{
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

/// Parses "a" or "a/b" with optional leading sign. Returns nullopt on garbage.
inline std::optional<Rat> rat_parse(std::string_view s)
{
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(s))
                return std::nullopt;
            return Rat(Int(std::string(s)));
        }
        auto a = s.substr(0, slash), b = s.substr(slash + 1);
        if (!is_int(a) || !is_int(b))
            return std::nullopt;
        Int den{std::string(b)};
        if (den == 0)
            return std::nullopt;
        return Rat(Int(std::string(a)), den);
    } catch (...) {
        return std::nullopt;
    }
}

} // namespace conequant

#endif
