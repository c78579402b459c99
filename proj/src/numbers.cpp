#include "fusion/numbers.hpp"

#include <limits>

namespace fusion {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t r = 1;
  if (n == 0 || p < 2) return r;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_power(std::size_t n, std::size_t p) { return n != 0 && p_part(n, p) == n; }

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::size_t general_linear_order(std::size_t r, std::size_t p) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t pr = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (pr > kMax / p) return kMax;
    pr *= p;
  }
  std::size_t result = 1;
  std::size_t pi = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t factor = pr - pi;
    if (factor != 0 && result > kMax / factor) return kMax;
    result *= factor;
    pi *= p;
  }
  return result;
}

}  // namespace fusion
