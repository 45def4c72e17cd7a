#pragma once

// Prime-field scalar for exact linear algebra with Eigen containers. The
// modulus is a per-thread setting installed by PrimeScope, so matrices of Zp
// must be built and consumed under the same scope.

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <string>

namespace pya {

inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

class Zp {
 public:
  Zp() = default;
  Zp(long long v);  // NOLINT: implicit so Eigen can build Scalar(0), Scalar(1)
  Zp(int v) : Zp(static_cast<long long>(v)) {}  // NOLINT
  Zp(long v) : Zp(static_cast<long long>(v)) {}  // NOLINT

  static std::uint64_t modulus();
  static Zp random(std::mt19937_64& rng);

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  /// DomainError on zero.
  Zp inverse() const;

  Zp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
  friend Zp operator+(Zp a, Zp b);
  friend Zp operator-(Zp a, Zp b) { return a + (-b); }
  friend Zp operator*(Zp a, Zp b);
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }
  Zp& operator/=(Zp o) { return *this = *this / o; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

 private:
  static Zp raw(std::uint64_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }
  std::uint64_t v_ = 0;
};

/// Installs a modulus for the current thread and restores the previous one
/// on destruction. Throws DomainError unless p is a prime below 2^63.
class PrimeScope {
 public:
  explicit PrimeScope(std::uint64_t p);
  ~PrimeScope();
  PrimeScope(const PrimeScope&) = delete;
  PrimeScope& operator=(const PrimeScope&) = delete;

 private:
  std::uint64_t previous_;
};

}  // namespace pya

template <>
struct Eigen::NumTraits<pya::Zp> : Eigen::GenericNumTraits<pya::Zp> {
  using Real = pya::Zp;
  using NonInteger = pya::Zp;
  using Literal = pya::Zp;
  using Nested = pya::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 8
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};
