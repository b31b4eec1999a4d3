#pragma once

// Scalar types shared by all modules: a runtime-precision binary float for
// geometry and exact rationals for train-track weights.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include "lamkit/errors.hpp"

namespace lamkit {

namespace mp = boost::multiprecision;

using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Integer = mp::number<mp::gmp_int, mp::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMinPrecisionBits = 64;

/// Relative tolerance used by geometric predicates.
inline constexpr double kGeometryTolerance = 1e-12;

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

/// Precision (in bits) requested through LAMKIT_PRECISION, or the default.
inline unsigned precision_from_environment() {
    if (const char* env = std::getenv("LAMKIT_PRECISION")) {
        char* end = nullptr;
        const long bits = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && bits >= static_cast<long>(kMinPrecisionBits)) {
            return static_cast<unsigned>(bits);
        }
        throw InvalidParameter("LAMKIT_PRECISION must be an integer >= 64");
    }
    return kDefaultPrecisionBits;
}

/// Sets the working precision of newly created Real values for the lifetime
/// of the guard. The mpfr default precision is process-global, so guards
/// must not be used concurrently from several threads.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits = kDefaultPrecisionBits) : saved_(Real::default_precision()) {
        if (bits < kMinPrecisionBits) {
            throw InvalidParameter("working precision must be at least 64 bits");
        }
        Real::default_precision(bits_to_digits10(bits));
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

inline Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(const Rational& q) { return Real(mp::numerator(q)) / Real(mp::denominator(q)); }

inline double to_double(const Real& r) { return r.convert_to<double>(); }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Full-precision decimal representation.
inline std::string to_decimal(const Real& r) { return r.str(0, std::ios_base::scientific); }

inline Real parse_real(const std::string& text) {
    try {
        return Real(text);
    } catch (const std::exception&) {
        throw ParseError("not a real number: '" + text + "'");
    }
}

namespace detail {

/// Base-10 integer; GMP would read a leading 0 as octal.
inline Integer parse_decimal_integer(const std::string& text) {
    std::size_t i = 0;
    std::string sign;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        sign = text[i] == '-' ? "-" : "";
        ++i;
    }
    const std::string digits = text.substr(i);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("not a decimal integer: '" + text + "'");
    }
    const auto nonzero = digits.find_first_not_of('0');
    return nonzero == std::string::npos ? Integer(0) : Integer(sign + digits.substr(nonzero));
}

}  // namespace detail

/// Accepts "p/q", "p" or a finite decimal such as "0.25".
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw ParseError("empty rational");
    }
    try {
        const auto dot = text.find_first_of(".eE");
        if (dot == std::string::npos) {
            const auto slash = text.find('/');
            if (slash == std::string::npos) {
                return Rational(detail::parse_decimal_integer(text));
            }
            const Integer den = detail::parse_decimal_integer(text.substr(slash + 1));
            if (den == 0) {
                throw ParseError("zero denominator in '" + text + "'");
            }
            return Rational(detail::parse_decimal_integer(text.substr(0, slash)), den);
        }
        // Decimal notation: exact conversion through mantissa / 10^k.
        std::string mantissa;
        long exponent10 = 0;
        const auto epos = text.find_first_of("eE");
        const std::string body = text.substr(0, epos);
        if (epos != std::string::npos) {
            exponent10 = std::stol(text.substr(epos + 1));
        }
        const auto point = body.find('.');
        if (point == std::string::npos) {
            mantissa = body;
        } else {
            mantissa = body.substr(0, point) + body.substr(point + 1);
            exponent10 -= static_cast<long>(body.size() - point - 1);
        }
        Rational value{detail::parse_decimal_integer(mantissa)};
        const Integer ten_power = mp::pow(Integer(10), static_cast<unsigned>(std::labs(exponent10)));
        return exponent10 >= 0 ? value * Rational(ten_power) : value / Rational(ten_power);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("not a rational number: '" + text + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// Best rational approximation of x with denominator at most max_denominator
/// (continued-fraction convergents and the best semiconvergent).
inline Rational rationalize(const Real& x, const Integer& max_denominator = Integer(1000000000000LL)) {
    if (max_denominator < 1) {
        throw InvalidParameter("denominator bound must be positive");
    }
    const bool negative = x < 0;
    Real rest = negative ? Real(-x) : x;
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 256; ++iter) {
        const Real floor_part = mp::floor(rest);
        const Integer a = floor_part.convert_to<Integer>();
        const Integer q2 = q0 + a * q1;
        if (q2 > max_denominator) {
            // best semiconvergent with admissible denominator
            const Integer k = (max_denominator - q0) / q1;
            const Rational semi(p0 + k * p1, q0 + k * q1);
            const Rational conv(p1, q1);
            const Real target = negative ? Real(-x) : x;
            const Rational best =
                mp::abs(to_real(semi) - target) < mp::abs(to_real(conv) - target) ? semi : conv;
            return negative ? Rational(-best) : best;
        }
        const Integer p2 = p0 + a * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const Real frac = rest - floor_part;
        if (frac == 0) {
            break;
        }
        rest = 1 / frac;
    }
    const Rational result(p1, q1);
    return negative ? Rational(-result) : result;
}

/// |a - b| <= tol * max(1, |a|, |b|).
inline bool approx_equal(const Real& a, const Real& b, double tol = kGeometryTolerance) {
    const Real scale = std::max({Real(1), Real(mp::abs(a)), Real(mp::abs(b))});
    return mp::abs(a - b) <= tol * scale;
}

inline bool relative_close(const Real& a, const Real& b, double tol) {
    const Real scale = std::max(Real(mp::abs(a)), Real(mp::abs(b)));
    return mp::abs(a - b) <= tol * scale;
}

}  // namespace lamkit
