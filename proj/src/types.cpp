#include "qdistill/types.hpp"

#include <cmath>
#include <numbers>

namespace qdistill {

Index checked_pow(int base, int exponent, long long guard) {
  if (base < 2) throw DimensionError("checked_pow: base must be >= 2");
  if (exponent < 0) throw DimensionError("checked_pow: negative exponent");
  long long value = 1;
  for (int i = 0; i < exponent; ++i) {
    value *= base;
    if (value > guard)
      throw GuardError("size " + std::to_string(base) + "^" + std::to_string(exponent) +
                       " exceeds the guard limit " + std::to_string(guard));
  }
  return static_cast<Index>(value);
}

Complex root_of_unity(int d, long long exponent) {
  long long e = exponent % d;
  if (e < 0) e += d;
  if (e == 0) return Complex(1.0, 0.0);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<Real>(e) / static_cast<Real>(d));
}

}  // namespace qdistill
