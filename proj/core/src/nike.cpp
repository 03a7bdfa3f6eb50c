#include "ges/nike.hpp"

#include "ges/hash.hpp"
#include "ges/multilinear.hpp"

namespace ges {

Instance setup(const SecurityConfig& cfg, RngHandle& rng, const InstanceOverride* hook) {
  return gen_instance(cfg, rng, hook);
}

PartyKeyPair publish(const SystemParams& sp, RngHandle& rng, std::string party_id) {
  Level1Encoding enc = encode_level1(sp, rng);
  return PartyKeyPair{std::move(party_id), std::move(enc.plain), std::move(enc.code),
                      std::move(enc.blinded)};
}

PartyKeyPair keypair_for(const SystemParams& sp, const Plaintext& r, std::string party_id) {
  auto [code, blinded] = encode_known(sp, r);
  return PartyKeyPair{std::move(party_id), r, std::move(code), std::move(blinded)};
}

SharedSecret share_key(const BlindedEncoding& secret, const std::vector<Encoding>& peers,
                       const SystemParams& sp, std::string_view context) {
  if (peers.empty()) throw Error("share_key: need at least one peer encoding");
  for (const Encoding& peer : peers) {
    if (peer.level != 1) {
      throw LevelMismatchError("share_key: peer encodings must be level 1");
    }
  }
  const BlindedEncoding element = multilinear_eval(MapInput{secret, peers}, sp);
  SharedSecret out;
  out.group_element = element.value;
  out.level = element.level;
  out.degenerate = element.value == 1;
  out.session_key = derive_session_key(out.group_element, context, sp);
  return out;
}

SharedSecret share_key(const PartyKeyPair& own, const std::vector<Encoding>& peers,
                       const SystemParams& sp, std::string_view context) {
  return share_key(own.secret_b, peers, sp, context);
}

SessionKey derive_session_key(const BigNat& element, std::string_view context,
                              const SystemParams& sp) {
  if (element < 1 || element >= sp.modulus) {
    throw Error("derive_session_key: element must be in [1, N)");
  }
  const std::size_t width = (bit_length(sp.modulus) + 7) / 8;
  std::vector<std::uint8_t> input(context.begin(), context.end());
  const std::vector<std::uint8_t> element_bytes = to_bytes_be(element, width);
  input.insert(input.end(), element_bytes.begin(), element_bytes.end());
  return sha256(input);
}

}  // namespace ges
