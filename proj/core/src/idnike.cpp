#include "ges/idnike.hpp"

#include <limits>

#include "ges/hash.hpp"

namespace ges {

Identity hash_identity(std::string_view id, const SystemParams& sp) {
  const std::size_t n_bits = bit_length(sp.modulus);
  const std::size_t n_bytes = (n_bits + 7) / 8;
  const std::size_t blocks = (n_bits + 255) / 256;

  std::vector<std::uint8_t> message(4 + id.size(), 0);
  std::copy(id.begin(), id.end(), message.begin() + 4);

  for (std::uint64_t attempt = 0;; ++attempt) {
    std::vector<std::uint8_t> stream;
    stream.reserve(blocks * 32);
    for (std::size_t block = 0; block < blocks; ++block) {
      const std::uint64_t counter = attempt * blocks + block;
      if (counter > std::numeric_limits<std::uint32_t>::max()) {
        throw Error("hash_identity: counter space exhausted");
      }
      message[0] = static_cast<std::uint8_t>(counter >> 24);
      message[1] = static_cast<std::uint8_t>(counter >> 16);
      message[2] = static_cast<std::uint8_t>(counter >> 8);
      message[3] = static_cast<std::uint8_t>(counter);
      const Digest digest = sha256(message);
      stream.insert(stream.end(), digest.begin(), digest.end());
    }
    BigNat candidate =
        from_bytes_be(std::span(stream.data(), n_bytes)) >> (8 * n_bytes - n_bits);
    if (candidate > 1 && candidate < sp.modulus) {
      return Identity{std::string(id), std::move(candidate)};
    }
  }
}

BlindedEncoding id_keygen(const Identity& identity, const MasterSecret& msk,
                          const SystemParams& sp) {
  const BigNat ring = msk.ring_order();
  const BigNat y_h = identity.h * mod_inv(msk.p, ring) % ring;
  return BlindedEncoding{mod_pow(sp.h, y_h, sp.modulus), 1};
}

bool check_representable(const Identity& identity, const MasterSecret& msk) {
  return identity.h > msk.frobenius_bound();
}

}  // namespace ges
