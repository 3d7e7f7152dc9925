#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace nachbin {

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, unsigned long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Canonical text form: "n" or "n/d" with d > 1 and gcd(n, d) = 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

namespace detail {

inline bool is_decimal_natural(std::string_view s) {
    if (s.empty()) return false;
    if (s.size() > 1 && s.front() == '0') return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace detail

/// Parses a canonical rational string; anything non-canonical ("2/4", "+1", "-0", "1/1") is rejected.
inline Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!detail::is_decimal_natural(num) || (slash != std::string_view::npos && !detail::is_decimal_natural(den)))
        throw parse_error("malformed rational '" + std::string(text) + "'");
    Rational q;
    if (q.set_str(std::string(body), 10) != 0 || (slash != std::string_view::npos && den == "0"))
        throw parse_error("malformed rational '" + std::string(text) + "'");
    q.canonicalize();
    if (negative) q = -q;
    if (to_string(q) != text)
        throw parse_error("rational '" + std::string(text) + "' is not in canonical form (expected '" +
                          to_string(q) + "')");
    return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace nachbin
