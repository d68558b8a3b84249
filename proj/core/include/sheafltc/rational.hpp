#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sheafltc {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

BigInt binom(int n, int k);
Rat rat_pow(const Rat& b, unsigned e);
double to_double(const Rat& r);
std::string rat_string(const Rat& r);  // "num/den" (or just "num")

}  // namespace sheafltc
