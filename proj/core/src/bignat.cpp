#include "ges/bignat.hpp"

#include <vector>

namespace ges {

namespace mp = boost::multiprecision;

std::size_t bit_length(const BigNat& v) {
  if (v == 0) return 0;
  return static_cast<std::size_t>(mp::msb(v)) + 1;
}

BigNat RngHandle::bits(std::size_t count) {
  if (count == 0) return 0;
  BigNat v = 0;
  const std::size_t words = (count + 63) / 64;
  for (std::size_t i = 0; i < words; ++i) {
    v <<= 64;
    v |= BigNat(engine_());
  }
  v &= (BigNat(1) << count) - 1;
  return v;
}

BigNat mod_pow(const BigNat& base, const BigNat& exponent, const BigNat& modulus) {
  if (modulus < 2) throw InvalidModulusError("mod_pow: modulus must be >= 2");
  return mp::powm(base % modulus, exponent, modulus);
}

BigNat mod_inv(const BigNat& a, const BigNat& modulus) {
  if (modulus < 2) throw InvalidModulusError("mod_inv: modulus must be >= 2");
  // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
  // cpp_int is signed, so the Bezout coefficients may go negative here.
  BigNat r0 = a % modulus, r1 = modulus;
  BigNat s0 = 1, s1 = 0;
  while (r1 != 0) {
    const BigNat q = r0 / r1;
    BigNat r2 = r0 - q * r1;
    BigNat s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0 != 1) {
    throw NotInvertibleError("mod_inv: element not invertible", r0);
  }
  s0 %= modulus;
  if (s0 < 0) s0 += modulus;
  return s0;
}

BigNat gcd(const BigNat& a, const BigNat& b) { return mp::gcd(a, b); }

namespace detail {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 8192;
    std::vector<bool> composite(kLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint32_t j = i * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool survives_trial_division(const BigNat& n) {
  for (std::uint32_t p : small_primes()) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace detail

namespace {

std::uint64_t low_word(const BigNat& n) {
  const BigNat masked = n & BigNat(0xffffffffffffffffULL);
  return static_cast<std::uint64_t>(masked);
}

// Deterministic Miller–Rabin witnesses derived from n itself, so the
// function stays a pure function of its arguments.
class WitnessSource {
 public:
  explicit WitnessSource(const BigNat& n)
      : engine_(0x9e3779b97f4a7c15ULL ^ low_word(n) ^
                (static_cast<std::uint64_t>(bit_length(n)) << 32)) {}

  // Uniform in [2, n-2]; caller guarantees n >= 5.
  BigNat next(const BigNat& n) {
    const std::size_t nbits = bit_length(n);
    for (;;) {
      BigNat c = 0;
      for (std::size_t i = 0; i < (nbits + 63) / 64; ++i) {
        c <<= 64;
        c |= BigNat(engine_());
      }
      c &= (BigNat(1) << nbits) - 1;
      if (c >= 2 && c <= n - 2) return c;
    }
  }

 private:
  std::mt19937_64 engine_;
};

bool miller_rabin(const BigNat& n, unsigned rounds) {
  // n odd, >= 5, no small factors.
  BigNat d = n - 1;
  std::size_t s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  WitnessSource witnesses(n);
  const BigNat n_minus_1 = n - 1;
  for (unsigned round = 0; round < rounds; ++round) {
    BigNat a = witnesses.next(n);
    BigNat x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool passed = false;
    for (std::size_t i = 0; i + 1 < s; ++i) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        passed = true;
        break;
      }
    }
    if (!passed) return false;
  }
  return true;
}

}  // namespace

bool is_probable_prime(const BigNat& n, unsigned rounds) {
  if (rounds < 1) throw ConfigError("is_probable_prime: rounds must be >= 1");
  if (n < 2) return false;
  for (std::uint32_t p : detail::small_primes()) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Survived trial division below 8192: definitely prime if n < 8192^2.
  if (n < BigNat(8192) * 8192) return true;
  return miller_rabin(n, rounds);
}

BigNat gen_prime(std::size_t bits, RngHandle& rng) {
  if (bits < 2) throw ConfigError("gen_prime: bits must be >= 2");
  for (;;) {
    BigNat candidate = rng.bits(bits);
    candidate |= BigNat(1) << (bits - 1);
    if (bits > 2) candidate |= 1;
    if (!detail::survives_trial_division(candidate)) continue;
    if (is_probable_prime(candidate, kDefaultMrRounds)) return candidate;
  }
}

BigNat sample_uniform(const BigNat& lo, const BigNat& hi, RngHandle& rng) {
  if (lo > hi) throw InvalidRangeError("sample_uniform: lo > hi");
  const BigNat width = hi - lo + 1;
  if (width == 1) return lo;
  const std::size_t nbits = bit_length(width);
  for (;;) {
    BigNat c = rng.bits(nbits);
    if (c < width) return lo + c;
  }
}

}  // namespace ges
