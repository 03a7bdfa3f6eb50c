#include "ges/instance.hpp"

#include <sstream>
#include <utility>

namespace ges {

namespace {

BigNat ceil_div(const BigNat& a, const BigNat& b) { return (a + b - 1) / b; }

// Random integer with exactly `bits` bits, low bit set for bits > 2.
BigNat odd_candidate(std::size_t bits, RngHandle& rng) {
  BigNat c = rng.bits(bits);
  c |= BigNat(1) << (bits - 1);
  if (bits > 2) c |= 1;
  return c;
}

bool passes_one_round(const BigNat& n) { return is_probable_prime(n, 1); }

}  // namespace

void SecurityConfig::validate() const {
  if (m < 2) throw ConfigError("config: m must be >= 2");
  if (prime_bits < 2) throw ConfigError("config: prime_bits must be >= 2");
  if (lambda < 2) throw ConfigError("config: lambda must be >= 2");
  if (lambda > prime_bits) throw ConfigError("config: lambda must not exceed prime_bits");
  if (q_bits != 0 && q_bits < prime_bits) {
    throw ConfigError("config: q_bits must be 0 (auto) or >= prime_bits");
  }
  if (mr_rounds < 1) throw ConfigError("config: mr_rounds must be >= 1");
}

SecurityConfig SecurityConfig::default_profile() {
  SecurityConfig cfg;
  cfg.profile = "default";
  cfg.lambda = 80;
  cfg.prime_bits = 256;
  cfg.q_bits = 0;
  cfg.m = 160;
  cfg.mr_rounds = 64;
  return cfg;
}

SecurityConfig SecurityConfig::toy(std::size_t prime_bits, std::size_t m) {
  SecurityConfig cfg;
  cfg.profile = "toy";
  cfg.prime_bits = prime_bits;
  cfg.q_bits = 0;
  cfg.lambda = std::min<std::size_t>(prime_bits, 8);
  cfg.m = m;
  cfg.mr_rounds = 32;
  return cfg;
}

std::vector<BigNat> gen_super_increasing(std::size_t m, std::size_t start_bits,
                                         RngHandle& rng) {
  if (m < 2) throw ConfigError("gen_super_increasing: m must be >= 2");
  if (start_bits < 2) throw ConfigError("gen_super_increasing: start_bits must be >= 2");
  std::vector<BigNat> y;
  y.reserve(m);
  BigNat first = rng.bits(start_bits);
  first |= BigNat(1) << (start_bits - 1);
  y.push_back(first);
  BigNat prefix_sum = y[0];
  const BigNat gap_max = BigNat(1) << start_bits;
  for (std::size_t j = 1; j < m; ++j) {
    BigNat next = prefix_sum + sample_uniform(1, gap_max, rng);
    prefix_sum += next;
    y.push_back(std::move(next));
  }
  return y;
}

namespace detail {

std::pair<BigNat, BigNat> recover_factors(const BigNat& p, const BigNat& x,
                                          const BigNat& q, const BigNat& modulus) {
  const BigNat expected_q_factor = 2 * q + 1;
  const BigNat candidates[2] = {x * p + 1, 2 * x * p + 1};
  for (const BigNat& candidate : candidates) {
    if (candidate < 2 || modulus % candidate != 0) continue;
    if (modulus / candidate == expected_q_factor) return {candidate, expected_q_factor};
  }
  throw ConfigError("instance: modulus does not match (2xp+1)(2q+1) or (xp+1)(2q+1)");
}

}  // namespace detail

BigNat find_generator(const BigNat& p, const BigNat& x, const BigNat& q,
                      const BigNat& modulus, RngHandle& rng) {
  const auto [fp, fq] = detail::recover_factors(p, x, q, modulus);
  const BigNat group_order = p * x * q;
  const BigNat pm1 = fp - 1, qm1 = fq - 1;
  const BigNat lambda_n = pm1 / gcd(pm1, qm1) * qm1;
  if (lambda_n % group_order != 0) {
    throw ConfigError("find_generator: pxq does not divide lambda(N)");
  }
  const BigNat cofactor = lambda_n / group_order;
  for (;;) {
    const BigNat base = sample_uniform(2, modulus - 2, rng);
    if (gcd(base, modulus) != 1) continue;
    const BigNat g = mod_pow(base, cofactor, modulus);
    if (g == 1) continue;
    if (mod_pow(g, group_order, modulus) != 1) continue;  // stray 2-part survived
    bool full_order = true;
    for (const BigNat& ell : {p, x, q}) {
      if (mod_pow(g, group_order / ell, modulus) == 1) {
        full_order = false;
        break;
      }
    }
    if (full_order) return g;
  }
}

namespace {

// Prime of exactly `bits` bits such that 2*scale*candidate + 1 is also
// prime. Cheap filters run on both numbers before any full certification.
BigNat find_linked_prime(std::size_t bits, const BigNat& scale, unsigned rounds,
                         RngHandle& rng,
                         const std::vector<BigNat>& exclude) {
  for (;;) {
    const BigNat candidate = odd_candidate(bits, rng);
    bool excluded = false;
    for (const BigNat& e : exclude) {
      if (candidate == e) {
        excluded = true;
        break;
      }
    }
    if (excluded) continue;
    if (!detail::survives_trial_division(candidate)) continue;
    const BigNat linked = 2 * scale * candidate + 1;
    if (!detail::survives_trial_division(linked)) continue;
    if (!passes_one_round(candidate)) continue;
    if (!passes_one_round(linked)) continue;
    if (!is_probable_prime(candidate, rounds)) continue;
    if (!is_probable_prime(linked, rounds)) continue;
    return candidate;
  }
}

Instance build_from_secrets(const SecurityConfig& cfg, const BigNat& p, const BigNat& x,
                            const BigNat& q, const BigNat& modulus, const BigNat& g,
                            std::vector<BigNat> y, std::vector<BigNat> k) {
  MasterSecret msk;
  msk.p = p;
  msk.x = x;
  msk.q = q;
  msk.g = g;
  msk.y = std::move(y);
  msk.k = std::move(k);

  SystemParams sp;
  sp.modulus = modulus;
  sp.h = mod_pow(g, p, modulus);
  sp.profile = cfg.profile;
  sp.w.reserve(msk.y.size());
  const BigNat ring = x * q;
  for (std::size_t i = 0; i < msk.y.size(); ++i) {
    WPair pair;
    pair.e = msk.y[i] * p + msk.k[i] * ring;
    pair.d = mod_pow(sp.h, msk.y[i], modulus);
    sp.w.push_back(std::move(pair));
  }
  return Instance{std::move(sp), std::move(msk)};
}

Instance gen_injected(const SecurityConfig& cfg, RngHandle& rng,
                      const InstanceOverride& hook) {
  for (const BigNat* prime : {&hook.p, &hook.x, &hook.q}) {
    if (!is_probable_prime(*prime, cfg.mr_rounds)) {
      throw ConfigError("injected instance: p, x, q must all be prime");
    }
  }
  if (hook.p == hook.x || hook.p == hook.q || hook.x == hook.q) {
    throw ConfigError("injected instance: p, x, q must be distinct");
  }
  if (hook.q <= hook.p) throw ConfigError("injected instance: q must exceed p");

  // Prefer the paper's literal xp+1 factor when it is prime (possible only
  // when p or x is 2); otherwise use the generated 2xp+1 form.
  BigNat fp = hook.x * hook.p + 1;
  if (!is_probable_prime(fp, cfg.mr_rounds)) {
    fp = 2 * hook.x * hook.p + 1;
    if (!is_probable_prime(fp, cfg.mr_rounds)) {
      throw ConfigError("injected instance: neither xp+1 nor 2xp+1 is prime");
    }
  }
  const BigNat fq = 2 * hook.q + 1;
  if (!is_probable_prime(fq, cfg.mr_rounds)) {
    throw ConfigError("injected instance: 2q+1 is not prime");
  }
  const BigNat modulus = fp * fq;

  const BigNat group_order = hook.p * hook.x * hook.q;
  if (mod_pow(hook.g, group_order, modulus) != 1) {
    throw ConfigError("injected instance: g order does not divide pxq");
  }
  for (const BigNat& ell : {hook.p, hook.x, hook.q}) {
    if (mod_pow(hook.g, group_order / ell, modulus) == 1) {
      throw ConfigError("injected instance: g order is a proper divisor of pxq");
    }
  }

  std::vector<BigNat> y = hook.y;
  if (y.empty()) {
    y = gen_super_increasing(cfg.m, cfg.lambda, rng);
  } else {
    if (y.size() != cfg.m) throw ConfigError("injected instance: |y| must equal m");
    BigNat prefix = 0;
    for (const BigNat& v : y) {
      if (v <= prefix) throw ConfigError("injected instance: y is not super-increasing");
      prefix += v;
    }
  }

  std::vector<BigNat> k = hook.k;
  const BigNat ring = hook.x * hook.q;
  if (k.empty()) {
    k.reserve(cfg.m);
    for (std::size_t i = 0; i < cfg.m; ++i) k.push_back(sample_uniform(1, ring, rng));
  } else {
    if (k.size() != cfg.m) throw ConfigError("injected instance: |k| must equal m");
    for (const BigNat& v : k) {
      if (v < 1) throw ConfigError("injected instance: k_i must be >= 1");
    }
  }

  return build_from_secrets(cfg, hook.p, hook.x, hook.q, modulus, hook.g,
                            std::move(y), std::move(k));
}

}  // namespace

Instance gen_instance(const SecurityConfig& cfg, RngHandle& rng,
                      const InstanceOverride* hook) {
  cfg.validate();
  if (hook != nullptr) return gen_injected(cfg, rng, *hook);

  const BigNat p = gen_prime(cfg.prime_bits, rng);
  const BigNat x = find_linked_prime(cfg.prime_bits, p, cfg.mr_rounds, rng, {p});

  const std::size_t q_bits = cfg.effective_q_bits();
  BigNat q;
  for (;;) {
    q = find_linked_prime(q_bits, 1, cfg.mr_rounds, rng, {p, x});
    if (q > p) break;
  }

  const BigNat fp = 2 * x * p + 1;
  const BigNat fq = 2 * q + 1;
  const BigNat modulus = fp * fq;
  const BigNat g = find_generator(p, x, q, modulus, rng);

  std::vector<BigNat> y = gen_super_increasing(cfg.m, cfg.lambda, rng);

  // k_i uniform, floored so k_i * xq (and hence e_i) reaches 2*prime_bits bits.
  const BigNat ring = x * q;
  const BigNat k_floor = ceil_div(BigNat(1) << (2 * cfg.prime_bits - 1), ring);
  const BigNat k_lo = std::max(BigNat(2), k_floor);
  const BigNat k_cap = (BigNat(1) << cfg.prime_bits) - 1;
  const BigNat k_lo_doubled = 2 * k_lo;
  const BigNat k_hi = std::max(k_cap, k_lo_doubled);
  std::vector<BigNat> k;
  k.reserve(cfg.m);
  for (std::size_t i = 0; i < cfg.m; ++i) k.push_back(sample_uniform(k_lo, k_hi, rng));

  return build_from_secrets(cfg, p, x, q, modulus, g, std::move(y), std::move(k));
}

bool ValidationReport::all_passed() const {
  for (const auto& check : checks) {
    if (!check.passed) return false;
  }
  return true;
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& check : checks) {
    if (check.name == name) return &check;
  }
  return nullptr;
}

ValidationReport validate_instance(const SystemParams& sp, const MasterSecret& msk) {
  ValidationReport report;
  auto add = [&report](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const std::size_t m = sp.w.size();
  add("m-consistency", m >= 2 && msk.y.size() == m && msk.k.size() == m);

  try {
    const auto [fp, fq] = detail::recover_factors(msk.p, msk.x, msk.q, sp.modulus);
    const bool primes = is_probable_prime(fp, kDefaultMrRounds) &&
                        is_probable_prime(fq, kDefaultMrRounds) &&
                        fp * fq == sp.modulus;
    add("factor-primality", primes);
  } catch (const ConfigError& err) {
    add("factor-primality", false, err.what());
  }

  add("q-gt-p", msk.q > msk.p);

  bool super_increasing = !msk.y.empty();
  BigNat prefix = 0;
  for (const BigNat& v : msk.y) {
    if (v <= prefix) {
      super_increasing = false;
      break;
    }
    prefix += v;
  }
  add("super-increasing", super_increasing);

  const BigNat ring = msk.ring_order();
  bool w_consistent = msk.y.size() == m && msk.k.size() == m;
  if (w_consistent) {
    for (std::size_t i = 0; i < m; ++i) {
      if (sp.w[i].e != msk.y[i] * msk.p + msk.k[i] * ring ||
          sp.w[i].d != mod_pow(sp.h, msk.y[i], sp.modulus)) {
        w_consistent = false;
        break;
      }
    }
  }
  add("w-consistency", w_consistent);

  const bool h_order = sp.h != 1 && mod_pow(sp.h, ring, sp.modulus) == 1 &&
                       mod_pow(sp.h, msk.x, sp.modulus) != 1 &&
                       mod_pow(sp.h, msk.q, sp.modulus) != 1;
  add("h-order", h_order);

  const BigNat group_order = msk.subgroup_order();
  bool g_order = mod_pow(msk.g, group_order, sp.modulus) == 1 &&
                 mod_pow(msk.g, msk.p, sp.modulus) == sp.h;
  if (g_order) {
    for (const BigNat& ell : {msk.p, msk.x, msk.q}) {
      if (mod_pow(msk.g, group_order / ell, sp.modulus) == 1) {
        g_order = false;
        break;
      }
    }
  }
  add("g-order", g_order);

  const std::size_t min_prime_bits =
      std::min({bit_length(msk.p), bit_length(msk.x), bit_length(msk.q)});
  bool w_bits = true;
  for (const WPair& pair : sp.w) {
    if (bit_length(pair.e) < 2 * min_prime_bits) {
      w_bits = false;
      break;
    }
  }
  add("w-bit-length", w_bits,
      "floor 2*" + std::to_string(min_prime_bits) + " bits; m=" + describe(BigNat(m)));

  return report;
}

}  // namespace ges
