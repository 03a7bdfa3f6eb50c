#include "ges/encoding.hpp"

namespace ges {

Level1Encoding encode_level1(const SystemParams& sp, RngHandle& rng) {
  Plaintext plain{sample_uniform(sp.s_min(), sp.s_max(), rng)};
  auto [code, blinded] = encode_known(sp, plain);
  return Level1Encoding{std::move(plain), std::move(code), std::move(blinded)};
}

std::pair<Encoding, BlindedEncoding> encode_known(const SystemParams& sp,
                                                  const Plaintext& plain) {
  if (plain.r < sp.s_min() || plain.r > sp.s_max()) {
    throw OutOfRangeError("encode_known: plaintext outside S = [2, 2^m - 1]");
  }
  BigNat u = 0;
  BigNat b = 1;
  for (std::size_t j = 0; j < sp.m(); ++j) {
    if (boost::multiprecision::bit_test(plain.r, static_cast<unsigned>(j))) {
      u += sp.w[j].e;
      b = (b * sp.w[j].d) % sp.modulus;
    }
  }
  return {Encoding{std::move(u), 1}, BlindedEncoding{std::move(b), 1}};
}

Encoding add(const Encoding& a, const Encoding& b) {
  if (a.level != b.level) {
    throw LevelMismatchError("add: encodings must be at the same level");
  }
  return Encoding{a.value + b.value, a.level};
}

BlindedEncoding add_blinded(const BlindedEncoding& a, const BlindedEncoding& b,
                            const SystemParams& sp) {
  if (a.level != b.level) {
    throw LevelMismatchError("add_blinded: encodings must be at the same level");
  }
  return BlindedEncoding{a.value * b.value % sp.modulus, a.level};
}

Encoding mul(const Encoding& a, const Encoding& b) {
  return Encoding{a.value * b.value, a.level + b.level};
}

BlindedEncoding ext(const BlindedEncoding& b, const Encoding& u, const SystemParams& sp) {
  return BlindedEncoding{mod_pow(b.value, u.value, sp.modulus), b.level + u.level};
}

bool eq_blinded(const BlindedEncoding& a, const BlindedEncoding& b) {
  if (a.level != b.level) {
    throw LevelMismatchError("eq_blinded: levels differ; representations at "
                             "different levels are incomparable");
  }
  return a.value == b.value;
}

BigNat decode_oracle(const Encoding& u, const MasterSecret& msk) {
  const BigNat ring = msk.ring_order();
  const BigNat p_power = mod_pow(msk.p, BigNat(u.level), ring);
  return u.value * mod_inv(p_power, ring) % ring;
}

}  // namespace ges
