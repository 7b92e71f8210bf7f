#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace centra {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t smallest_prime_divisor(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned k;
};

/// n = p^k with k >= 1; nullopt for n = 1 and for numbers with two prime divisors.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Exact power; throws OutOfRange on 64-bit overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// The largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace centra
