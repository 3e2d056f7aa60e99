#pragma once

// Exact rational arithmetic shared by every module. Values are GMP rationals;
// parsing and printing never go through floating point.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace urodlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an input lies outside the mathematical domain of an operation
/// (critical level, pole, non-admissible level, unsupported root system...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised for arguments that are malformed rather than merely out of domain.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// n/d in lowest terms. Prefer this over the two-argument mpq_class
/// constructor, which does not canonicalize.
inline Rational frac(long num, long den) { return make_rational(num, den); }

/// Parses "p", "-p", "p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw UsageError("empty rational literal");
    std::string s(text);
    auto slash = s.find('/');
    auto check_digits = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) throw UsageError("malformed rational '" + s + "'");
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) throw UsageError("malformed rational '" + s + "'");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw UsageError("malformed rational '" + s + "'");
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw DomainError("zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Canonical "p/q" form (plain "p" for integers).
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer ceil_of(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw DomainError("integer overflow converting " + z.get_str());
    return z.get_si();
}

/// Largest integer m with m*m <= r (r >= 0).
inline Integer isqrt_floor(const Rational& r) {
    if (r < 0) throw DomainError("isqrt of negative value");
    Integer f = floor_of(r);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
    return s;
}

inline Rational pow(const Rational& base, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace urodlab
