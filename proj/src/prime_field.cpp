#include "wps/prime_field.hpp"

#include "wps/error.hpp"

namespace wps {

namespace {

constexpr std::uint64_t kMaxModulus = 1ULL << 32;

// Residues stay below 2^32, so the product fits in 64 bits.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a % p) * (b % p) % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeFieldElem::PrimeFieldElem(long long value, std::uint64_t modulus) : modulus_(modulus) {
  // Trial division is not free for large moduli; remember the last one accepted.
  thread_local std::uint64_t last_accepted = 0;
  if (modulus != last_accepted) {
    if (modulus >= kMaxModulus || !is_prime(modulus)) {
      throw Error(Errc::NotPrime, "modulus " + std::to_string(modulus) + " is not a supported prime");
    }
    last_accepted = modulus;
  }
  long long r = value % static_cast<long long>(modulus);
  if (r < 0) r += static_cast<long long>(modulus);
  residue_ = static_cast<std::uint64_t>(r);
}

void PrimeFieldElem::require_same_modulus(const PrimeFieldElem& other) const {
  if (modulus_ != other.modulus_) {
    throw Error(Errc::FieldMismatch, "F_" + std::to_string(modulus_) + " vs F_" +
                                         std::to_string(other.modulus_));
  }
}

PrimeFieldElem PrimeFieldElem::pow(std::uint64_t exponent) const {
  return {Unchecked{}, pow_mod(residue_, exponent, modulus_), modulus_};
}

PrimeFieldElem PrimeFieldElem::inverse() const {
  if (residue_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_p");
  return pow(modulus_ - 2);
}

PrimeFieldElem& PrimeFieldElem::operator+=(const PrimeFieldElem& rhs) {
  require_same_modulus(rhs);
  residue_ = (residue_ + rhs.residue_) % modulus_;
  return *this;
}

PrimeFieldElem& PrimeFieldElem::operator-=(const PrimeFieldElem& rhs) {
  require_same_modulus(rhs);
  residue_ = (residue_ + modulus_ - rhs.residue_) % modulus_;
  return *this;
}

PrimeFieldElem& PrimeFieldElem::operator*=(const PrimeFieldElem& rhs) {
  require_same_modulus(rhs);
  residue_ = mul_mod(residue_, rhs.residue_, modulus_);
  return *this;
}

PrimeFieldElem& PrimeFieldElem::operator/=(const PrimeFieldElem& rhs) {
  require_same_modulus(rhs);
  return *this *= rhs.inverse();
}

PrimeFieldElem PrimeFieldElem::operator-() const {
  return {Unchecked{}, (modulus_ - residue_) % modulus_, modulus_};
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (auto q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  return 1;
}

std::vector<std::uint64_t> roots_of_unity(std::uint64_t order, std::uint64_t p) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (pow_mod(x, order, p) == 1) roots.push_back(x);
  }
  return roots;
}

}  // namespace wps
