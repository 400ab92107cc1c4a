#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powerspec {

/// Canonical prime factorization; primes strictly increasing, exponents >= 1.
struct Factorization {
  std::vector<std::pair<std::uint64_t, unsigned>> prime_powers;

  std::uint64_t value() const {
    std::uint64_t v = 1;
    for (auto [p, a] : prime_powers)
      for (unsigned i = 0; i < a; ++i) v *= p;
    return v;
  }

  std::size_t distinct_primes() const { return prime_powers.size(); }

  unsigned total_exponent() const {
    unsigned s = 0;
    for (auto [p, a] : prime_powers) s += a;
    return s;
  }

  bool is_prime() const {
    return prime_powers.size() == 1 && prime_powers[0].second == 1;
  }
  bool is_prime_power() const { return prime_powers.size() == 1; }
  /// n = p*q with p != q.
  bool is_product_of_two_distinct_primes() const {
    return prime_powers.size() == 2 && prime_powers[0].second == 1 &&
           prime_powers[1].second == 1;
  }
  /// n = p*q, p == q allowed.
  bool is_product_of_two_primes() const { return total_exponent() == 2; }
};

inline Factorization factorize(std::uint64_t n) {
  if (n <= 1)
    throw std::domain_error("factorize: n must be >= 2, got " +
                            std::to_string(n));
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    f.prime_powers.emplace_back(p, a);
  }
  if (n > 1) f.prime_powers.emplace_back(n, 1u);
  return f;
}

inline bool is_prime(std::uint64_t n) { return n >= 2 && factorize(n).is_prime(); }

inline bool is_prime_power(std::uint64_t n) {
  return n >= 2 && factorize(n).is_prime_power();
}

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::domain_error("euler_phi: n must be >= 1");
  if (n == 1) return 1;
  std::uint64_t phi = n;
  for (auto [p, a] : factorize(n).prime_powers) phi = phi / p * (p - 1);
  return phi;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

/// All partitions of k into positive parts, each listed in non-increasing order.
inline std::vector<std::vector<unsigned>> integer_partitions(unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

}  // namespace powerspec
