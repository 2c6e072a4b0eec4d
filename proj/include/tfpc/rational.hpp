#ifndef TFPC_RATIONAL_HPP
#define TFPC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tfpc {

// Exact arithmetic everywhere: request weights and satisfaction fractions are
// compared for equality, so floating point is out of the question.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long long rat_num(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<long long>();
}
inline long long rat_den(const Rational& r) {
  return boost::multiprecision::denominator(r).convert_to<long long>();
}

inline std::string rat_str(const Rational& r) {
  return r.str();
}

inline BigInt pow2(unsigned e) {
  BigInt x = 1;
  return x << e;
}

}  // namespace tfpc

#endif
