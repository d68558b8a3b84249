#include "sheafltc/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace sheafltc {

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

Rat rat_pow(const Rat& b, unsigned e) {
  Rat r = 1, base = b;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

std::string rat_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace sheafltc
