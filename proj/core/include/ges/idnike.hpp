#pragma once

// ID-based key generation: the KGC turns any hashed identity into a private
// blinded key via the trapdoor p^{-1} mod xq. The hashed identity itself
// serves as the party's level-1 public encoding.

#include <string>
#include <string_view>

#include "ges/encoding.hpp"

namespace ges {

struct Identity {
  std::string id;  // raw identity bytes
  BigNat h;        // hash output in (1, N)

  // The identity's public key, usable directly in share_key peer lists.
  Encoding as_public_encoding() const { return Encoding{h, 1}; }
};

// Counter-mode expansion of SHA-256 to n = bitlen(N) bits: attempt t reads
// ceil(n/256) digests at consecutive 4-byte big-endian counters starting at
// t*ceil(n/256), takes the first n bits, and accepts the first candidate in
// (1, N). Deterministic per (id, N).
Identity hash_identity(std::string_view id, const SystemParams& sp);

// Private key for the identity: h * p^{-1} mod xq exponentiates the
// published generator, giving a level-1 blinded encoding.
BlindedEncoding id_keygen(const Identity& identity, const MasterSecret& msk,
                          const SystemParams& sp);

// True iff h exceeds the Frobenius bound pxq - p - xq, so h = yp + kxq has
// a non-negative solution and h is a well-formed level-1 encoding.
bool check_representable(const Identity& identity, const MasterSecret& msk);

}  // namespace ges
