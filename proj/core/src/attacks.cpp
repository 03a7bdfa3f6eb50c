#include "ges/attacks.hpp"

#include <unordered_map>

#include "ges/encoding.hpp"

namespace ges {

namespace {

struct BigNatHash {
  std::size_t operator()(const BigNat& v) const {
    const BigNat masked = v & BigNat(0xffffffffffffffffULL);
    return static_cast<std::size_t>(static_cast<std::uint64_t>(masked));
  }
};

}  // namespace

std::optional<std::uint64_t> ssp_solve_mitm(const SspInstance& inst) {
  const std::size_t n = inst.weights.size();
  if (n > kSspMaxWeights) {
    throw CapacityError("ssp_solve_mitm: instance exceeds the 40-weight cap");
  }
  if (inst.target == 0) return 0;
  if (n == 0) return std::nullopt;

  const std::size_t left = n / 2;
  const std::size_t right = n - left;

  // Half-sum table over the left weights; first subset per sum wins.
  std::unordered_map<BigNat, std::uint64_t, BigNatHash> left_sums;
  left_sums.reserve(std::size_t{1} << left);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << left); ++mask) {
    BigNat sum = 0;
    for (std::size_t j = 0; j < left; ++j) {
      if (mask & (std::uint64_t{1} << j)) sum += inst.weights[j];
    }
    left_sums.emplace(std::move(sum), mask);
  }

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << right); ++mask) {
    BigNat sum = 0;
    for (std::size_t j = 0; j < right; ++j) {
      if (mask & (std::uint64_t{1} << j)) sum += inst.weights[left + j];
    }
    if (sum > inst.target) continue;
    const BigNat need = inst.target - sum;
    auto it = left_sums.find(need);
    if (it != left_sums.end()) {
      return it->second | (mask << left);
    }
  }
  return std::nullopt;
}

std::optional<BigNat> duplicate_encoding_attack(const BigNat& u1, const BigNat& u2,
                                                const BigNat& u3, const SystemParams& sp) {
  auto abs_diff = [](const BigNat& a, const BigNat& b) { return a > b ? a - b : b - a; };
  BigNat candidate =
      gcd(gcd(abs_diff(u1, u2), abs_diff(u1, u3)), abs_diff(u2, u3));
  if (candidate == 0) return std::nullopt;
  if (mod_pow(sp.h, candidate, sp.modulus) != 1) return std::nullopt;
  // Strip extraneous small factors while the h-order test keeps passing;
  // the raw gcd is only guaranteed to be a multiple of xq.
  for (std::uint32_t ell : detail::small_primes()) {
    if (ell > 10000) break;
    while (candidate % ell == 0 &&
           mod_pow(sp.h, candidate / ell, sp.modulus) == 1) {
      candidate /= ell;
    }
  }
  return candidate;
}

UnforgeabilityReport verify_unforgeability_probe(const SystemParams& sp,
                                                 const MasterSecret& msk, RngHandle& rng) {
  UnforgeabilityReport report;

  // (a) the public API yields one codeword per plaintext: enumerate S when
  // small, otherwise a sampled slice.
  constexpr std::size_t kExhaustiveLimit = 16;
  std::unordered_map<BigNat, BigNat, BigNatHash> seen;
  bool unique = true;
  if (sp.m() <= kExhaustiveLimit) {
    report.exhaustive = true;
    for (BigNat r = sp.s_min(); r <= sp.s_max(); ++r) {
      auto [code, blinded] = encode_known(sp, Plaintext{r});
      auto [it, inserted] = seen.emplace(code.value, r);
      if (!inserted && it->second != r) {
        unique = false;
        break;
      }
      ++report.plaintexts_checked;
    }
  } else {
    for (std::size_t i = 0; i < 4096; ++i) {
      const BigNat r = sample_uniform(sp.s_min(), sp.s_max(), rng);
      auto [code, blinded] = encode_known(sp, Plaintext{r});
      auto [it, inserted] = seen.emplace(code.value, r);
      if (!inserted && it->second != r) {
        unique = false;
        break;
      }
      ++report.plaintexts_checked;
    }
  }
  report.public_encodings_unique = unique;

  // (b) duplicates forged with the master secret: same hidden value, three
  // distinct noise coefficients.
  const BigNat ring = msk.ring_order();
  const BigNat value = sample_uniform(1, ring - 1, rng);
  BigNat noise[3];
  noise[0] = sample_uniform(1, ring, rng);
  noise[1] = noise[0] + sample_uniform(1, ring, rng);
  noise[2] = noise[1] + sample_uniform(1, ring, rng);
  const BigNat base = value * msk.p;
  const auto forged = [&](int i) { return base + noise[i] * ring; };
  const std::optional<BigNat> recovered =
      duplicate_encoding_attack(forged(0), forged(1), forged(2), sp);
  if (recovered.has_value()) {
    report.recovered = *recovered;
    report.attack_recovered_ring_order = *recovered == ring;
  }
  return report;
}

}  // namespace ges
