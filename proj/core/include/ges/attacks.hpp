#pragma once

// The scheme's own attack procedures, used as validation oracles: exact
// subset-sum search against published W, and order recovery from forged
// duplicate encodings.

#include <cstdint>
#include <optional>
#include <vector>

#include "ges/instance.hpp"

namespace ges {

struct SspInstance {
  std::vector<BigNat> weights;  // the published e_i
  BigNat target;                // the observed codeword u
};

inline constexpr std::size_t kSspMaxWeights = 40;

// Meet-in-the-middle subset search: bit j of the result selects weights[j].
// Returns nullopt when no subset sums to the target. Throws CapacityError
// above kSspMaxWeights (half-sum table would outgrow desk scale).
std::optional<std::uint64_t> ssp_solve_mitm(const SspInstance& inst);

// Given three encodings claimed to hide the same value at the same level,
// returns a multiple-free candidate for xq: gcd of pairwise differences,
// stripped of small prime factors while h^{candidate/l} stays 1 mod N.
// nullopt when the gcd gives no xq multiple (e.g. equal or unrelated inputs).
std::optional<BigNat> duplicate_encoding_attack(const BigNat& u1, const BigNat& u2,
                                                const BigNat& u3, const SystemParams& sp);

struct UnforgeabilityReport {
  // Public API side: every plaintext in the enumerated/sampled slice of S
  // produced one distinct codeword.
  bool public_encodings_unique = false;
  std::size_t plaintexts_checked = 0;
  bool exhaustive = false;

  // Forged side: duplicates minted with msk let the gcd attack recover xq.
  bool attack_recovered_ring_order = false;
  BigNat recovered;  // 0 when the attack returned nothing
};

// Reproduces the paper's break condition: the public API yields one
// encoding per element, while msk-forged duplicates surrender xq to
// duplicate_encoding_attack. msk is test-harness material here.
UnforgeabilityReport verify_unforgeability_probe(const SystemParams& sp,
                                                 const MasterSecret& msk, RngHandle& rng);

}  // namespace ges
