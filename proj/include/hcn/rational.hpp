#ifndef HCN_RATIONAL_HPP
#define HCN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hcn {

// Exact arithmetic backbone. cpp_rational keeps gcd(|num|, den) = 1 and den > 0
// after every operation, which is exactly the normalization the library relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// "3", "-1/12", ... (denominator printed only when != 1).
std::string to_fraction_string(const Rational& q);

} // namespace hcn

#endif
