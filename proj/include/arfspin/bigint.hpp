#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace arfspin {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(long long base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace arfspin
