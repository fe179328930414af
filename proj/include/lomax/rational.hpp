#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lomax/errors.hpp"

namespace lomax {

// Exact arbitrary-precision rational. GMP keeps values in lowest terms
// with positive denominator, so every arithmetic result is canonical.
using Rational = mpq_class;

using Point = std::vector<Rational>;

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace detail

// Accepts "p", "-p", "p/q" and exact decimals such as "0.5" (= 1/2).
inline Rational rational_from_string(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw Error("empty rational literal '" + std::string(text) + "'");

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den))
            throw Error("malformed rational literal '" + std::string(text) + "'");
        mpz_class p(std::string(num), 10), q(std::string(den), 10);
        if (q == 0) throw Error("division by zero in literal '" + std::string(text) + "'");
        result = Rational(p, q);
        result.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !detail::all_digits(ip)) ||
            (!fp.empty() && !detail::all_digits(fp)))
            throw Error("malformed decimal literal '" + std::string(text) + "'");
        mpz_class digits(std::string(ip) + std::string(fp), 10);
        mpz_class den(1);
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        result = Rational(digits, den);
        result.canonicalize();
    } else {
        if (!detail::all_digits(s))
            throw Error("malformed rational literal '" + std::string(text) + "'");
        result = Rational(mpz_class(std::string(s), 10));
    }
    return negative ? Rational(-result) : result;
}

}  // namespace lomax
