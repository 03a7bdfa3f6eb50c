#pragma once

// Level-tagged encodings and the operations on them: level-1 encoding of a
// plaintext, addition at equal levels, level-summing multiplication,
// extraction into the blinded group form, and blinded equality.

#include <utility>

#include "ges/instance.hpp"

namespace ges {

// Element of S = [2, 2^m - 1]. The holder never learns the hidden ring
// image of r; only the KGC-side oracle can recover it.
struct Plaintext {
  BigNat r;

  bool operator==(const Plaintext&) const = default;
};

// Integer codeword u at level kappa. The value is carried without modular
// reduction: reducing would require xq, which users do not have.
struct Encoding {
  BigNat value;
  std::size_t level = 1;

  bool operator==(const Encoding&) const = default;
};

// Group-element form b = h^{p^{kappa-1} * val} mod N at level kappa.
struct BlindedEncoding {
  BigNat value;
  std::size_t level = 1;

  bool operator==(const BlindedEncoding&) const = default;
};

struct Level1Encoding {
  Plaintext plain;
  Encoding code;
  BlindedEncoding blinded;
};

// Samples r uniformly from S and encodes it.
Level1Encoding encode_level1(const SystemParams& sp, RngHandle& rng);

// Deterministic encoding of a caller-chosen plaintext: u is the subset sum
// of the e_i selected by r's bits (bit 1 = least significant), b the
// matching product of d_i mod N. Same r, identical outputs.
// Throws OutOfRangeError for r outside S.
std::pair<Encoding, BlindedEncoding> encode_known(const SystemParams& sp,
                                                  const Plaintext& plain);

// Integer addition at equal levels. Throws LevelMismatchError.
Encoding add(const Encoding& a, const Encoding& b);

// Group multiplication at equal levels. Throws LevelMismatchError.
BlindedEncoding add_blinded(const BlindedEncoding& a, const BlindedEncoding& b,
                            const SystemParams& sp);

// Integer product; levels sum. Any levels accepted.
Encoding mul(const Encoding& a, const Encoding& b);

// b^u mod N; levels sum. The result does not depend on u's noise component.
BlindedEncoding ext(const BlindedEncoding& b, const Encoding& u, const SystemParams& sp);

// Equality of blinded values at equal levels (no zero-testing parameter in
// this scheme). Throws LevelMismatchError for mismatched levels.
bool eq_blinded(const BlindedEncoding& a, const BlindedEncoding& b);

// Test oracle: recovers the hidden ring value u * p^{-level} mod xq.
// Requires the master secret; this is what makes the homomorphism
// invariants assertable.
BigNat decode_oracle(const Encoding& u, const MasterSecret& msk);

}  // namespace ges
