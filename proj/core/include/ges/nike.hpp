#pragma once

// Multi-party non-interactive key exchange: Setup, Publish, ShareKey, and
// session-key derivation. Each party broadcasts one level-1 encoding; any
// subset then derives a common group element with no further interaction.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ges/encoding.hpp"

namespace ges {

using SessionKey = std::array<std::uint8_t, 32>;

struct PartyKeyPair {
  std::string party_id;
  Plaintext r;              // secret
  Encoding public_u;        // broadcast
  BlindedEncoding secret_b; // private key
};

struct SharedSecret {
  BigNat group_element;
  std::size_t level = 0;    // equals the participant count
  SessionKey session_key{};
  // Identity element means the hidden values multiplied to 0 mod xq. The
  // result must never be used as a key; callers check this flag.
  bool degenerate = false;
};

// Runs instance generation (identical contract, including the test hook).
Instance setup(const SecurityConfig& cfg, RngHandle& rng,
               const InstanceOverride* hook = nullptr);

// Fresh keypair from a uniformly sampled plaintext.
PartyKeyPair publish(const SystemParams& sp, RngHandle& rng, std::string party_id = {});

// Deterministic keypair for a caller-chosen plaintext (test vectors, CLI).
PartyKeyPair keypair_for(const SystemParams& sp, const Plaintext& r,
                         std::string party_id = {});

// secret^{prod peers} mod N at level |peers| + 1. Every participant running
// this over the complementary peer set obtains the same group element.
// Throws on empty peers or non-level-1 peers.
SharedSecret share_key(const BlindedEncoding& secret, const std::vector<Encoding>& peers,
                       const SystemParams& sp, std::string_view context = {});

SharedSecret share_key(const PartyKeyPair& own, const std::vector<Encoding>& peers,
                       const SystemParams& sp, std::string_view context = {});

// SHA-256(context || element as big-endian, zero-padded to
// ceil(bitlen(N)/8) bytes). Requires 1 <= element < N.
SessionKey derive_session_key(const BigNat& element, std::string_view context,
                              const SystemParams& sp);

}  // namespace ges
