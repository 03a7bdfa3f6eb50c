#pragma once

// Arbitrary-precision non-negative integers plus the modular primitives the
// rest of the library is built on. Representation is boost cpp_int; every
// value handled here is kept non-negative.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include "ges/errors.hpp"

namespace ges {

using BigNat = boost::multiprecision::cpp_int;

// Bits needed to represent v; 0 for v == 0.
std::size_t bit_length(const BigNat& v);

// Non-invertible element passed to mod_inv; carries gcd(a, modulus).
class NotInvertibleError : public Error {
 public:
  NotInvertibleError(std::string msg, BigNat common_factor)
      : Error(std::move(msg)), common_factor_(std::move(common_factor)) {}
  const BigNat& common_factor() const { return common_factor_; }

 private:
  BigNat common_factor_;
};

// Seedable deterministic random source. Same seed, same stream — protocol
// transcripts in tests depend on this. Not thread-safe; confine one handle
// to one logical thread.
class RngHandle {
 public:
  explicit RngHandle(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform value in [0, 2^count).
  BigNat bits(std::size_t count);

 private:
  std::mt19937_64 engine_;
};

// base^exponent mod modulus. Throws InvalidModulusError for modulus < 2.
BigNat mod_pow(const BigNat& base, const BigNat& exponent, const BigNat& modulus);

// Multiplicative inverse of a mod modulus. Throws NotInvertibleError with
// gcd(a, modulus) attached when the inverse does not exist.
BigNat mod_inv(const BigNat& a, const BigNat& modulus);

// Greatest common divisor; gcd(0, 0) == 0.
BigNat gcd(const BigNat& a, const BigNat& b);

// Miller–Rabin preceded by small-prime trial division. false means
// definitely composite; true means prime with error <= 4^-rounds.
bool is_probable_prime(const BigNat& n, unsigned rounds);

// Probable prime of exactly `bits` bits (top bit set), certified with the
// library-default 64 rounds.
BigNat gen_prime(std::size_t bits, RngHandle& rng);

// Uniform in [lo, hi] by rejection sampling (no modulo bias).
BigNat sample_uniform(const BigNat& lo, const BigNat& hi, RngHandle& rng);

inline constexpr unsigned kDefaultMrRounds = 64;

namespace detail {

// Primes below 8192, sieved once.
const std::vector<std::uint32_t>& small_primes();

// false iff a sieved prime strictly divides n (n equal to a sieved prime
// passes). Cheap filter in front of Miller–Rabin.
bool survives_trial_division(const BigNat& n);

}  // namespace detail

}  // namespace ges
