#pragma once

// File formats for the CLI surface: public parameters, master secret, and
// party keypairs. JSON text with hex-encoded integers — lowercase,
// big-endian, no leading zeros except the value 0 itself.

#include <filesystem>
#include <string>
#include <string_view>

#include "ges/instance.hpp"
#include "ges/nike.hpp"

namespace ges {

inline constexpr int kFileFormatVersion = 1;

std::string to_hex(const BigNat& v);
BigNat from_hex(std::string_view hex);  // throws ParseError

std::string param_file_text(const SystemParams& sp);
SystemParams parse_param_file_text(std::string_view text);

std::string secret_file_text(const MasterSecret& msk);
MasterSecret parse_secret_file_text(std::string_view text);

std::string keypair_file_text(const PartyKeyPair& kp);
PartyKeyPair parse_keypair_file_text(std::string_view text);  // party_id not stored

void write_param_file(const std::filesystem::path& path, const SystemParams& sp);
SystemParams read_param_file(const std::filesystem::path& path);

void write_secret_file(const std::filesystem::path& path, const MasterSecret& msk);
MasterSecret read_secret_file(const std::filesystem::path& path);

void write_keypair_file(const std::filesystem::path& path, const PartyKeyPair& kp);
PartyKeyPair read_keypair_file(const std::filesystem::path& path);

}  // namespace ges
