#pragma once

#include <cstddef>
#include <vector>

namespace fusion {

bool is_prime(std::size_t n);

/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, std::size_t p);

/// True iff n is a power of p (including p^0 = 1).
bool is_p_power(std::size_t n, std::size_t p);

/// Distinct prime divisors in increasing order.
std::vector<std::size_t> prime_divisors(std::size_t n);

/// |GL(r, p)|, saturating at SIZE_MAX.
std::size_t general_linear_order(std::size_t r, std::size_t p);

}  // namespace fusion
