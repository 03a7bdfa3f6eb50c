#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ges/bignat.hpp"

namespace ges {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);

// Big-endian bytes of v, left-padded with zeros to exactly `width` bytes.
// Throws Error when v needs more than `width` bytes.
std::vector<std::uint8_t> to_bytes_be(const BigNat& v, std::size_t width);

BigNat from_bytes_be(std::span<const std::uint8_t> bytes);

}  // namespace ges
