#ifndef NULLCONE_RATIONAL_HPP
#define NULLCONE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nullcone {

/// Arbitrary-precision integers and rationals. cpp_rational keeps values in
/// lowest terms with a positive denominator, which is exactly the canonical
/// form the serialization layer relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational_big(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational_big(BigInt(num), BigInt(den));
}

/// Canonical wire form is always "num/den", including integral values ("3/1").
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return make_rational_big(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("rational: cannot parse \"" + s + "\"");
    }
}

inline BigInt pow2(unsigned e) {
    BigInt r = 1;
    return r << e;
}

} // namespace nullcone

#endif
