#pragma once

// Instance generation: the structured modulus N = (2xp+1)(2q+1), the
// order-xq published generator h = g^p, the secret super-increasing set,
// and the published encoding pairs W = [(e_i, d_i)].

#include <string>
#include <vector>

#include "ges/bignat.hpp"

namespace ges {

struct SecurityConfig {
  std::string profile = "custom";
  std::size_t lambda = 80;      // security bits; also sizes y_1
  std::size_t prime_bits = 256; // bit length of p and x
  std::size_t q_bits = 0;       // bit length of q; 0 means 2 * prime_bits
  std::size_t m = 160;          // number of W pairs
  unsigned mr_rounds = 64;

  std::size_t effective_q_bits() const { return q_bits == 0 ? 2 * prime_bits : q_bits; }

  // Throws ConfigError when any invariant fails.
  void validate() const;

  // lambda 80, p/x 256-bit, q 512-bit, m = 160.
  static SecurityConfig default_profile();

  // Small sizes for fast randomized suites.
  static SecurityConfig toy(std::size_t prime_bits, std::size_t m);
};

// Held by the KGC and test oracles only.
struct MasterSecret {
  BigNat p;
  BigNat x;
  BigNat q;
  BigNat g;                // order p*x*q modulo N
  std::vector<BigNat> y;   // super-increasing, secret
  std::vector<BigNat> k;   // noise coefficients

  BigNat ring_order() const { return x * q; }        // xq
  BigNat subgroup_order() const { return p * x * q; }
  BigNat frobenius_bound() const { return p * x * q - p - x * q; }

  bool operator==(const MasterSecret&) const = default;
};

struct WPair {
  BigNat e;  // y_i*p + k_i*x*q, an integer (never reduced)
  BigNat d;  // h^{y_i} mod N

  bool operator==(const WPair&) const = default;
};

struct SystemParams {
  BigNat modulus;          // N
  BigNat h;                // g^p mod N, generator of the order-xq subgroup
  std::vector<WPair> w;
  std::string profile = "custom";

  std::size_t m() const { return w.size(); }
  BigNat s_min() const { return 2; }
  BigNat s_max() const { return (BigNat(1) << m()) - 1; }

  bool operator==(const SystemParams&) const = default;
};

struct Instance {
  SystemParams params;
  MasterSecret secret;
};

// Test hook: inject the worked toy values instead of sampling. y and k may
// be left empty to sample them for the injected primes.
struct InstanceOverride {
  BigNat p;
  BigNat x;
  BigNat q;
  BigNat g;
  std::vector<BigNat> y;
  std::vector<BigNat> k;
};

// m values, each strictly greater than the sum of all earlier ones; the
// first has exactly start_bits bits.
std::vector<BigNat> gen_super_increasing(std::size_t m, std::size_t start_bits, RngHandle& rng);

// Element of order exactly p*x*q modulo N. Derives the factors of N from
// (p, x, q), raises random bases to lambda(N)/(pxq), and rejects candidates
// landing in a proper subgroup.
BigNat find_generator(const BigNat& p, const BigNat& x, const BigNat& q,
                      const BigNat& modulus, RngHandle& rng);

// Full instance generation. Deterministic per rng seed. With an override,
// the injected values are validated and used as-is (yielding e.g. the
// N = 77 toy instance).
Instance gen_instance(const SecurityConfig& cfg, RngHandle& rng,
                      const InstanceOverride* hook = nullptr);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool all_passed() const;
  const ValidationCheck* find(std::string_view name) const;
};

// Re-derives every generation invariant from (sp, msk): factor primality,
// q > p, super-increasing y, e/d consistency, h- and g-order conditions,
// W bit lengths.
ValidationReport validate_instance(const SystemParams& sp, const MasterSecret& msk);

namespace detail {

// Factors of N recovered from the secret primes: tries the paper's literal
// xp+1 form first (valid when p or x is 2), then 2xp+1. Throws ConfigError
// if neither matches N.
std::pair<BigNat, BigNat> recover_factors(const BigNat& p, const BigNat& x,
                                          const BigNat& q, const BigNat& modulus);

}  // namespace detail

}  // namespace ges
