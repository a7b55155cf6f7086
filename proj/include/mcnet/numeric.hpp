#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

#include "mcnet/errors.hpp"

namespace mcnet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 50 significant decimal digits; enough to print logs of astronomically
// large subpacketizations to a handful of decimals.
using Dec50 = boost::multiprecision::cpp_dec_float_50;

// Binomial coefficient over arbitrary-precision integers.
// Out-of-range arguments (k < 0, k > n, n < 0) yield 0 so that closed-form
// sums can be written exactly as displayed, without explicit range guards.
inline BigInt binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// Binomial coefficient as int64, for array-scale quantities.
inline std::int64_t binom_i64(long long n, long long k) {
    BigInt b = binom(n, k);
    if (b > std::numeric_limits<std::int64_t>::max())
        throw ParameterError("binomial coefficient does not fit in 64 bits");
    return static_cast<std::int64_t>(b);
}

inline Rational rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ParameterError("zero denominator");
    return Rational(num, den);
}

// "p/q" in lowest terms; integers render without the slash.
inline std::string rational_string(const Rational& r) {
    std::ostringstream os;
    if (denominator(r) == 1) {
        os << numerator(r);
    } else {
        os << numerator(r) << "/" << denominator(r);
    }
    return os.str();
}

inline Dec50 to_dec(const Rational& r) {
    return Dec50(numerator(r)) / Dec50(denominator(r));
}

inline Dec50 ln_bigint(const BigInt& n) {
    if (n <= 0) throw ParameterError("log of non-positive integer");
    return log(Dec50(n));
}

inline double to_double(const Rational& r) {
    return static_cast<double>(to_dec(r));
}

} // namespace mcnet
