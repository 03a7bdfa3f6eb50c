#include "ges/hash.hpp"

#include <openssl/evp.h>

namespace ges {

Digest sha256(std::span<const std::uint8_t> data) {
  Digest digest{};
  unsigned int written = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &written, EVP_sha256(),
                 nullptr) != 1 ||
      written != digest.size()) {
    throw Error("sha256: digest computation failed");
  }
  return digest;
}

std::vector<std::uint8_t> to_bytes_be(const BigNat& v, std::size_t width) {
  std::vector<std::uint8_t> minimal;
  if (v != 0) {
    boost::multiprecision::export_bits(v, std::back_inserter(minimal), 8);
  }
  if (minimal.size() > width) {
    throw Error("to_bytes_be: value does not fit the requested width");
  }
  std::vector<std::uint8_t> out(width - minimal.size(), 0);
  out.insert(out.end(), minimal.begin(), minimal.end());
  return out;
}

BigNat from_bytes_be(std::span<const std::uint8_t> bytes) {
  BigNat v = 0;
  for (std::uint8_t byte : bytes) {
    v <<= 8;
    v |= byte;
  }
  return v;
}

}  // namespace ges
