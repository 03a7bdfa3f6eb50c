// Command-line surface: parameter generation, key publication, shared-key
// derivation, ID-based keygen, attack demos, and the map benchmark.
//
// Exit codes: 0 success, 1 IO/parse failure, 2 usage error, 3 degenerate key.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ges/attacks.hpp"
#include "ges/idnike.hpp"
#include "ges/multilinear.hpp"
#include "ges/nike.hpp"
#include "ges/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIoParse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag.has_value()) return *flag;
  if (const char* env = std::getenv("GES_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Decimal by default, 0x prefix for hex.
ges::BigNat parse_number(std::string_view text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    return ges::from_hex(text.substr(2));
  }
  if (text.empty()) throw ges::ParseError("number: empty string");
  ges::BigNat v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ges::ParseError(std::string("number: invalid digit '") + c + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

std::vector<ges::BigNat> parse_number_list(const std::string& csv) {
  std::vector<ges::BigNat> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string item =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) throw ges::ParseError("list: empty entry");
    out.push_back(parse_number(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string hex0x(const ges::BigNat& v) { return "0x" + ges::to_hex(v); }

struct GenParamsArgs {
  std::size_t lambda = 80;
  std::size_t prime_bits = 256;
  std::size_t q_bits = 0;
  std::size_t m = 160;
  std::optional<std::uint64_t> seed;
  std::string out_public;
  std::string out_secret;
};

int cmd_gen_params(const GenParamsArgs& args) {
  ges::SecurityConfig cfg;
  cfg.lambda = args.lambda;
  cfg.prime_bits = args.prime_bits;
  cfg.q_bits = args.q_bits;
  cfg.m = args.m;
  const ges::SecurityConfig defaults = ges::SecurityConfig::default_profile();
  cfg.profile = (cfg.lambda == defaults.lambda && cfg.prime_bits == defaults.prime_bits &&
                 cfg.effective_q_bits() == defaults.effective_q_bits() && cfg.m == defaults.m)
                    ? "default"
                    : "custom";
  cfg.validate();

  ges::RngHandle rng(resolve_seed(args.seed));
  const auto start = std::chrono::steady_clock::now();
  const ges::Instance inst = ges::gen_instance(cfg, rng);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  ges::write_param_file(args.out_public, inst.params);
  ges::write_secret_file(args.out_secret, inst.secret);

  std::cout << "N: " << ges::bit_length(inst.params.modulus) << " bits\n"
            << "m: " << inst.params.m() << "\n"
            << "generated in " << elapsed.count() << " s\n"
            << "wrote " << args.out_public << " and " << args.out_secret << "\n";
  std::cout << "note: " << args.out_secret
            << " holds the master secret; restrict its permissions (e.g. chmod 600)\n";
  return kExitOk;
}

struct KeygenArgs {
  std::string params;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string forced_r;  // hex or decimal; test hook
};

int cmd_keygen(const KeygenArgs& args) {
  const ges::SystemParams sp = ges::read_param_file(args.params);
  ges::PartyKeyPair kp;
  if (!args.forced_r.empty()) {
    kp = ges::keypair_for(sp, ges::Plaintext{parse_number(args.forced_r)});
  } else {
    ges::RngHandle rng(resolve_seed(args.seed));
    kp = ges::publish(sp, rng);
  }
  ges::write_keypair_file(args.out, kp);
  std::cout << "u = " << hex0x(kp.public_u.value) << "\n";
  return kExitOk;
}

struct ShareKeyArgs {
  std::string params;
  std::string keypair;
  std::string peers_csv;
  std::string context;
};

int cmd_sharekey(const ShareKeyArgs& args) {
  const ges::SystemParams sp = ges::read_param_file(args.params);
  const ges::PartyKeyPair own = ges::read_keypair_file(args.keypair);
  // tamper check: the stored (u, b) must be the encoding of the stored r
  try {
    const auto [expect_u, expect_b] = ges::encode_known(sp, own.r);
    if (expect_u != own.public_u || expect_b != own.secret_b) {
      throw ges::ParseError("keypair file: u/b do not match r under these parameters");
    }
  } catch (const ges::OutOfRangeError&) {
    throw ges::ParseError("keypair file: r is outside S for these parameters");
  }
  std::vector<ges::Encoding> peers;
  for (ges::BigNat& value : parse_number_list(args.peers_csv)) {
    peers.push_back(ges::Encoding{std::move(value), 1});
  }
  const ges::SharedSecret ss = ges::share_key(own, peers, sp, args.context);
  std::cout << "element = " << hex0x(ss.group_element) << "\n"
            << "level = " << ss.level << "\n";
  if (ss.degenerate) {
    std::cerr << "degenerate shared element (identity); discard this key\n";
    return kExitDegenerate;
  }
  std::cout << "session_key = ";
  for (std::uint8_t byte : ss.session_key) {
    static const char digits[] = "0123456789abcdef";
    std::cout << digits[byte >> 4] << digits[byte & 0xf];
  }
  std::cout << "\n";
  return kExitOk;
}

struct IdKeygenArgs {
  std::string secret;
  std::string params;
  std::string identity;
};

int cmd_id_keygen(const IdKeygenArgs& args) {
  const ges::SystemParams sp = ges::read_param_file(args.params);
  const ges::MasterSecret msk = ges::read_secret_file(args.secret);
  const ges::Identity id = ges::hash_identity(args.identity, sp);
  if (!ges::check_representable(id, msk)) {
    std::cerr << "warning: hashed identity is below the Frobenius bound; "
                 "it is not a well-formed encoding\n";
  }
  const ges::BlindedEncoding priv = ges::id_keygen(id, msk, sp);
  std::cout << "h = " << hex0x(id.h) << "\n"
            << "private = " << hex0x(priv.value) << "\n";
  return kExitOk;
}

struct AttackArgs {
  std::string mode;
  std::string weights_csv;
  std::string target;
  std::string inputs_csv;
  std::string params;
};

int cmd_attack(const AttackArgs& args) {
  if (args.mode == "ssp") {
    if (args.weights_csv.empty() || args.target.empty()) {
      throw ges::ConfigError("attack ssp: --weights and --target are required");
    }
    ges::SspInstance inst;
    inst.weights = parse_number_list(args.weights_csv);
    inst.target = parse_number(args.target);
    const auto mask = ges::ssp_solve_mitm(inst);
    if (!mask.has_value()) {
      std::cout << "none\n";
      return kExitOk;
    }
    std::string bits;
    for (std::size_t j = inst.weights.size(); j-- > 0;) {
      bits.push_back((*mask >> j) & 1 ? '1' : '0');
    }
    std::cout << "mask " << bits << " (r = " << *mask << ")\n";
    return kExitOk;
  }
  if (args.mode == "gcd") {
    if (args.inputs_csv.empty() || args.params.empty()) {
      throw ges::ConfigError("attack gcd: --inputs and --params are required");
    }
    const std::vector<ges::BigNat> inputs = parse_number_list(args.inputs_csv);
    if (inputs.size() != 3) {
      throw ges::ConfigError("attack gcd: exactly three encodings required");
    }
    const ges::SystemParams sp = ges::read_param_file(args.params);
    const auto recovered =
        ges::duplicate_encoding_attack(inputs[0], inputs[1], inputs[2], sp);
    if (recovered.has_value()) {
      std::cout << *recovered << "\n";
    } else {
      std::cout << "none\n";
    }
    return kExitOk;
  }
  throw ges::ConfigError("attack: mode must be ssp or gcd");
}

struct BenchArgs {
  std::string params;
  std::size_t degree = 7;
  std::size_t reps = 15;
  std::optional<std::uint64_t> seed;
};

int cmd_bench(const BenchArgs& args) {
  const ges::SystemParams sp = ges::read_param_file(args.params);
  ges::RngHandle rng(resolve_seed(args.seed));

  // encoding is excluded from the timed section
  const ges::BlindedEncoding base = ges::encode_level1(sp, rng).blinded;
  std::vector<ges::Encoding> factors;
  factors.reserve(args.degree);
  for (std::size_t i = 0; i < args.degree; ++i) {
    factors.push_back(ges::encode_level1(sp, rng).code);
  }
  const ges::MapInput input{base, factors};

  ges::multilinear_eval(input, sp);  // warm-up
  std::vector<double> samples;
  samples.reserve(args.reps);
  for (std::size_t rep = 0; rep < args.reps; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    const ges::BlindedEncoding out = ges::multilinear_eval(input, sp);
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    samples.push_back(elapsed.count());
    if (out.value == 0) return kExitIoParse;  // unreachable; keeps the call alive
  }
  std::sort(samples.begin(), samples.end());
  const double median = samples.size() % 2 == 1
                            ? samples[samples.size() / 2]
                            : 0.5 * (samples[samples.size() / 2 - 1] +
                                     samples[samples.size() / 2]);
  std::cout << "bench t=" << args.degree << " median_ms=" << median << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded-encoding toolkit: parameters, multi-party key exchange, "
               "ID-based keys, attack oracles, benchmarks"};
  app.require_subcommand(1);

  GenParamsArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen-params", "generate system parameters");
  gen->add_option("--lambda", gen_args.lambda, "security parameter");
  gen->add_option("--prime-bits", gen_args.prime_bits, "bit length of p and x");
  gen->add_option("--q-bits", gen_args.q_bits, "bit length of q (0 = 2*prime-bits)");
  gen->add_option("--m", gen_args.m, "number of W pairs")->check(CLI::Range(2u, 100000u));
  gen->add_option("--seed", gen_args.seed, "deterministic seed (else GES_SEED env)");
  gen->add_option("--out-public", gen_args.out_public, "parameter file path")->required();
  gen->add_option("--out-secret", gen_args.out_secret, "master secret file path")->required();

  KeygenArgs keygen_args;
  CLI::App* keygen = app.add_subcommand("keygen", "publish a level-1 keypair");
  keygen->add_option("--params", keygen_args.params, "parameter file")->required();
  keygen->add_option("--out", keygen_args.out, "keypair file path")->required();
  keygen->add_option("--seed", keygen_args.seed, "deterministic seed");
  keygen->add_option("--r", keygen_args.forced_r, "use this plaintext (test vectors)");

  ShareKeyArgs share_args;
  CLI::App* share = app.add_subcommand("sharekey", "derive the shared group element");
  share->add_option("--params", share_args.params, "parameter file")->required();
  share->add_option("--keypair", share_args.keypair, "own keypair file")->required();
  share->add_option("--peers", share_args.peers_csv,
                    "comma-separated peer u values (0x-prefixed hex or decimal)")
      ->required();
  share->add_option("--context", share_args.context, "KDF context string");

  IdKeygenArgs id_args;
  CLI::App* idkg = app.add_subcommand("id-keygen", "derive a private key from an identity");
  idkg->add_option("--secret", id_args.secret, "master secret file")->required();
  idkg->add_option("--params", id_args.params, "parameter file")->required();
  idkg->add_option("--identity", id_args.identity, "identity string")->required();

  AttackArgs attack_args;
  CLI::App* attack = app.add_subcommand("attack", "run a validation attack");
  attack->add_option("--mode", attack_args.mode, "ssp or gcd")->required();
  attack->add_option("--weights", attack_args.weights_csv, "ssp: weight list");
  attack->add_option("--target", attack_args.target, "ssp: target sum");
  attack->add_option("--inputs", attack_args.inputs_csv, "gcd: three duplicate encodings");
  attack->add_option("--params", attack_args.params, "gcd: parameter file");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "time a t-linear map evaluation");
  bench->add_option("--params", bench_args.params, "parameter file")->required();
  bench->add_option("--t", bench_args.degree, "number of non-blinded factors")
      ->check(CLI::Range(1u, 64u));
  bench->add_option("--reps", bench_args.reps, "repetitions")->check(CLI::Range(1u, 100000u));
  bench->add_option("--seed", bench_args.seed, "deterministic seed");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_gen_params(gen_args);
    if (keygen->parsed()) return cmd_keygen(keygen_args);
    if (share->parsed()) return cmd_sharekey(share_args);
    if (idkg->parsed()) return cmd_id_keygen(id_args);
    if (attack->parsed()) return cmd_attack(attack_args);
    if (bench->parsed()) return cmd_bench(bench_args);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  } catch (const ges::ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const ges::CapacityError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const ges::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitIoParse;
  }
}
