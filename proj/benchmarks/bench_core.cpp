// Microbenchmarks for the big-integer surface: modular exponentiation,
// encoding, instance generation, and t-linear map evaluation.

#include <benchmark/benchmark.h>

#include <optional>

#include "ges/multilinear.hpp"
#include "ges/nike.hpp"

namespace {

using namespace ges;

const Instance& default_instance() {
  static const Instance inst = [] {
    RngHandle rng(1);
    return gen_instance(SecurityConfig::default_profile(), rng);
  }();
  return inst;
}

const Instance& toy_instance() {
  static const Instance inst = [] {
    RngHandle rng(2);
    return gen_instance(SecurityConfig::toy(16, 12), rng);
  }();
  return inst;
}

void BM_ModPow(benchmark::State& state) {
  const auto bits = static_cast<std::size_t>(state.range(0));
  RngHandle rng(3);
  const BigNat modulus = rng.bits(bits) | (BigNat(1) << (bits - 1)) | 1;
  const BigNat base = rng.bits(bits - 1);
  const BigNat exponent = rng.bits(bits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mod_pow(base, exponent, modulus));
  }
}
BENCHMARK(BM_ModPow)->Arg(256)->Arg(512)->Arg(1024);

void BM_GenPrime(benchmark::State& state) {
  const auto bits = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 4;
  for (auto _ : state) {
    RngHandle rng(seed++);
    benchmark::DoNotOptimize(gen_prime(bits, rng));
  }
}
BENCHMARK(BM_GenPrime)->Arg(128)->Arg(256);

void BM_EncodeKnown(benchmark::State& state) {
  const SystemParams& sp = default_instance().params;
  RngHandle rng(5);
  const Plaintext r{sample_uniform(sp.s_min(), sp.s_max(), rng)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode_known(sp, r));
  }
}
BENCHMARK(BM_EncodeKnown);

void BM_MultilinearEval(benchmark::State& state) {
  const SystemParams& sp = default_instance().params;
  RngHandle rng(6);
  MapInput input{encode_level1(sp, rng).blinded, {}};
  for (int i = 0; i < state.range(0); ++i) {
    input.factors.push_back(encode_level1(sp, rng).code);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(multilinear_eval(input, sp));
  }
}
BENCHMARK(BM_MultilinearEval)->DenseRange(1, 7);

void BM_ShareKeyToy(benchmark::State& state) {
  const Instance& inst = toy_instance();
  RngHandle rng(7);
  const PartyKeyPair self = publish(inst.params, rng);
  std::vector<Encoding> peers;
  for (int i = 0; i < 3; ++i) peers.push_back(publish(inst.params, rng).public_u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(share_key(self, peers, inst.params));
  }
}
BENCHMARK(BM_ShareKeyToy);

void BM_InstanceGenToy(benchmark::State& state) {
  std::uint64_t seed = 8;
  for (auto _ : state) {
    RngHandle rng(seed++);
    benchmark::DoNotOptimize(gen_instance(SecurityConfig::toy(12, 8), rng));
  }
}
BENCHMARK(BM_InstanceGenToy);

}  // namespace

BENCHMARK_MAIN();
