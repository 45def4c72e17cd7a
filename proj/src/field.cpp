#include "pya/field.hpp"

#include "pya/errors.hpp"

namespace pya {

namespace {

thread_local std::uint64_t current_modulus = kDefaultPrime;

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // These bases are a proof of primality for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

Zp::Zp(long long v) {
  const auto p = static_cast<long long>(current_modulus);
  long long r = v % p;
  if (r < 0) r += p;
  v_ = static_cast<std::uint64_t>(r);
}

std::uint64_t Zp::modulus() { return current_modulus; }

Zp Zp::random(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, current_modulus - 1);
  return raw(dist(rng));
}

Zp Zp::inverse() const {
  if (v_ == 0) throw DomainError("inverse of zero in the prime field");
  return raw(pow_mod(v_, current_modulus - 2, current_modulus));
}

Zp operator+(Zp a, Zp b) {
  // Both operands are below 2^63, so the sum cannot wrap.
  std::uint64_t s = a.v_ + b.v_;
  if (s >= current_modulus) s -= current_modulus;
  return Zp::raw(s);
}

Zp operator*(Zp a, Zp b) { return Zp::raw(mul_mod(a.v_, b.v_, current_modulus)); }

PrimeScope::PrimeScope(std::uint64_t p) : previous_(current_modulus) {
  if (p >= (1ULL << 63U) || !is_prime(p)) {
    throw DomainError(std::to_string(p) + " is not a prime below 2^63");
  }
  current_modulus = p;
}

PrimeScope::~PrimeScope() { current_modulus = previous_; }

}  // namespace pya
