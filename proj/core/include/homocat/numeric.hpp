// Exact-arithmetic scalar types shared across the library.
//
// Weight coordinates are small rationals (denominators 1 or 2 in practice,
// since spin weights are the only half-integral inputs), so a rational over
// 64-bit integers suffices there.  Dimension formulas multiply dozens of
// factors and need arbitrary precision, hence the multiprecision BigRat.
// (boost::rational<cpp_int> is deliberately avoided: its normalization is
// not compatible with expression-template integer types.)

#ifndef HOMOCAT_NUMERIC_HPP
#define HOMOCAT_NUMERIC_HPP

#include <boost/rational.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace homocat {

using Rat = boost::rational<long long>;
using Int = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

} // namespace homocat

#endif
