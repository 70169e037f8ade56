#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wps {

/// Deterministic trial-division primality test; moduli here are desk-sized.
bool is_prime(std::uint64_t n);

/// Element of F_p for a prime p < 2^32. The residue is always reduced.
class PrimeFieldElem {
 public:
  /// Throws Errc::NotPrime if `modulus` is not prime.
  PrimeFieldElem(long long value, std::uint64_t modulus);

  std::uint64_t residue() const noexcept { return residue_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_ == 0; }

  PrimeFieldElem pow(std::uint64_t exponent) const;
  /// Fermat inverse; throws DivisionByZero on zero.
  PrimeFieldElem inverse() const;

  PrimeFieldElem& operator+=(const PrimeFieldElem& rhs);
  PrimeFieldElem& operator-=(const PrimeFieldElem& rhs);
  PrimeFieldElem& operator*=(const PrimeFieldElem& rhs);
  PrimeFieldElem& operator/=(const PrimeFieldElem& rhs);
  friend PrimeFieldElem operator+(PrimeFieldElem a, const PrimeFieldElem& b) { return a += b; }
  friend PrimeFieldElem operator-(PrimeFieldElem a, const PrimeFieldElem& b) { return a -= b; }
  friend PrimeFieldElem operator*(PrimeFieldElem a, const PrimeFieldElem& b) { return a *= b; }
  friend PrimeFieldElem operator/(PrimeFieldElem a, const PrimeFieldElem& b) { return a /= b; }
  PrimeFieldElem operator-() const;

  friend bool operator==(const PrimeFieldElem&, const PrimeFieldElem&) = default;

  std::string to_string() const { return std::to_string(residue_); }

 private:
  struct Unchecked {};
  PrimeFieldElem(Unchecked, std::uint64_t residue, std::uint64_t modulus)
      : residue_(residue), modulus_(modulus) {}
  void require_same_modulus(const PrimeFieldElem& other) const;

  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 2;
};

/// Smallest generator of F_p^*.
std::uint64_t primitive_root(std::uint64_t p);

/// All x in F_p with x^order == 1, ascending by residue.
std::vector<std::uint64_t> roots_of_unity(std::uint64_t order, std::uint64_t p);

}  // namespace wps
