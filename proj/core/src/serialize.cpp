#include "ges/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ges {

using nlohmann::json;

std::string to_hex(const BigNat& v) {
  std::string s = v.str(0, std::ios_base::hex);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

BigNat from_hex(std::string_view hex) {
  if (hex.empty()) throw ParseError("hex: empty string");
  BigNat v = 0;
  for (char c : hex) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      throw ParseError(std::string("hex: invalid character '") + c + "'");
    }
    v <<= 4;
    v += digit;
  }
  return v;
}

namespace {

json parse_json(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("file: not valid JSON");
  return doc;
}

void require_version(const json& doc) {
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != kFileFormatVersion) {
    throw ParseError("file: missing or unsupported version");
  }
}

BigNat hex_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw ParseError(std::string("file: missing hex field '") + key + "'");
  }
  return from_hex(doc[key].get<std::string>());
}

std::vector<BigNat> hex_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("file: missing array field '") + key + "'");
  }
  std::vector<BigNat> out;
  out.reserve(doc[key].size());
  for (const json& item : doc[key]) {
    if (!item.is_string()) throw ParseError(std::string("file: non-hex entry in '") + key + "'");
    out.push_back(from_hex(item.get<std::string>()));
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path.string());
  return buffer.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::string param_file_text(const SystemParams& sp) {
  json doc;
  doc["version"] = kFileFormatVersion;
  doc["profile"] = sp.profile;
  doc["N"] = to_hex(sp.modulus);
  doc["h"] = to_hex(sp.h);
  doc["m"] = sp.m();
  json pairs = json::array();
  for (const WPair& pair : sp.w) {
    pairs.push_back(json{{"e", to_hex(pair.e)}, {"d", to_hex(pair.d)}});
  }
  doc["W"] = std::move(pairs);
  return doc.dump(2) + "\n";
}

SystemParams parse_param_file_text(std::string_view text) {
  const json doc = parse_json(text);
  require_version(doc);
  SystemParams sp;
  sp.modulus = hex_field(doc, "N");
  sp.h = hex_field(doc, "h");
  if (!doc.contains("profile") || !doc["profile"].is_string()) {
    throw ParseError("param file: missing profile");
  }
  sp.profile = doc["profile"].get<std::string>();
  if (!doc.contains("W") || !doc["W"].is_array()) {
    throw ParseError("param file: missing W");
  }
  for (const json& item : doc["W"]) {
    WPair pair;
    pair.e = hex_field(item, "e");
    pair.d = hex_field(item, "d");
    sp.w.push_back(std::move(pair));
  }
  if (!doc.contains("m") || !doc["m"].is_number_unsigned() ||
      doc["m"].get<std::size_t>() != sp.w.size()) {
    throw ParseError("param file: m does not match |W|");
  }
  return sp;
}

std::string secret_file_text(const MasterSecret& msk) {
  json doc;
  doc["version"] = kFileFormatVersion;
  doc["p"] = to_hex(msk.p);
  doc["x"] = to_hex(msk.x);
  doc["q"] = to_hex(msk.q);
  doc["g"] = to_hex(msk.g);
  json y = json::array(), k = json::array();
  for (const BigNat& v : msk.y) y.push_back(to_hex(v));
  for (const BigNat& v : msk.k) k.push_back(to_hex(v));
  doc["y"] = std::move(y);
  doc["k"] = std::move(k);
  return doc.dump(2) + "\n";
}

MasterSecret parse_secret_file_text(std::string_view text) {
  const json doc = parse_json(text);
  require_version(doc);
  MasterSecret msk;
  msk.p = hex_field(doc, "p");
  msk.x = hex_field(doc, "x");
  msk.q = hex_field(doc, "q");
  msk.g = hex_field(doc, "g");
  msk.y = hex_array(doc, "y");
  msk.k = hex_array(doc, "k");
  if (msk.y.size() != msk.k.size()) {
    throw ParseError("secret file: |y| != |k|");
  }
  return msk;
}

std::string keypair_file_text(const PartyKeyPair& kp) {
  json doc;
  doc["version"] = kFileFormatVersion;
  doc["r"] = to_hex(kp.r.r);
  doc["u"] = to_hex(kp.public_u.value);
  doc["b"] = to_hex(kp.secret_b.value);
  doc["level"] = kp.public_u.level;
  return doc.dump(2) + "\n";
}

PartyKeyPair parse_keypair_file_text(std::string_view text) {
  const json doc = parse_json(text);
  require_version(doc);
  if (!doc.contains("level") || !doc["level"].is_number_unsigned()) {
    throw ParseError("keypair file: missing level");
  }
  const auto level = doc["level"].get<std::size_t>();
  if (level != 1) throw ParseError("keypair file: only level-1 keypairs are stored");
  PartyKeyPair kp;
  kp.r = Plaintext{hex_field(doc, "r")};
  kp.public_u = Encoding{hex_field(doc, "u"), level};
  kp.secret_b = BlindedEncoding{hex_field(doc, "b"), level};
  return kp;
}

void write_param_file(const std::filesystem::path& path, const SystemParams& sp) {
  write_text(path, param_file_text(sp));
}

SystemParams read_param_file(const std::filesystem::path& path) {
  return parse_param_file_text(read_text(path));
}

void write_secret_file(const std::filesystem::path& path, const MasterSecret& msk) {
  write_text(path, secret_file_text(msk));
}

MasterSecret read_secret_file(const std::filesystem::path& path) {
  return parse_secret_file_text(read_text(path));
}

void write_keypair_file(const std::filesystem::path& path, const PartyKeyPair& kp) {
  write_text(path, keypair_file_text(kp));
}

PartyKeyPair read_keypair_file(const std::filesystem::path& path) {
  return parse_keypair_file_text(read_text(path));
}

}  // namespace ges
