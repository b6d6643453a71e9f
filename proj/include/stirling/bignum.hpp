#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stirling {

// Exact arithmetic. Rationals are always in lowest terms with a positive
// denominator; equality is canonical equality.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

// "7/3", or just "7" when the denominator is 1.
inline std::string rat_str(const BigRational& r) { return r.str(); }

}  // namespace stirling
