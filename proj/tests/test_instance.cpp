#include <doctest.h>

#include <set>

#include "ges/encoding.hpp"
#include "test_util.hpp"

using namespace ges;
using namespace ges::testing;

TEST_CASE("toy injected instance reproduces the worked values") {
  const Instance inst = make_toy77();
  CHECK(inst.params.modulus == 77);
  CHECK(inst.params.h == 8);
  REQUIRE(inst.params.m() == 4);
  const BigNat want_e[4] = {16, 29, 28, 66};
  const BigNat want_d[4] = {64, 50, 36, 64};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(inst.params.w[i].e == want_e[i]);
    CHECK(inst.params.w[i].d == want_d[i]);
  }
  CHECK(inst.secret.ring_order() == 10);
  CHECK(inst.secret.subgroup_order() == 30);
  CHECK(validate_instance(inst.params, inst.secret).all_passed());
}

TEST_CASE("decode oracle on toy values") {
  const Instance inst = make_toy77();
  CHECK(decode_oracle(Encoding{44, 1}, inst.secret) == 8);
  CHECK(decode_oracle(Encoding{126, 1}, inst.secret) == 2);
  // e_1 as a level-1 encoding decodes to y_1 mod xq
  CHECK(decode_oracle(Encoding{inst.params.w[0].e, 1}, inst.secret) ==
        inst.secret.y[0] % inst.secret.ring_order());
}

TEST_CASE("gen_super_increasing") {
  RngHandle rng(11);
  SUBCASE("shape at m=4") {
    const auto y = gen_super_increasing(4, 2, rng);
    REQUIRE(y.size() == 4);
    BigNat prefix = 0;
    for (const BigNat& v : y) {
      CHECK(v > prefix);
      prefix += v;
    }
  }
  SUBCASE("prefix sums at paper scale") {
    const auto y = gen_super_increasing(160, 80, rng);
    REQUIRE(y.size() == 160);
    CHECK(bit_length(y[0]) == 80);
    BigNat prefix = 0;
    for (const BigNat& v : y) {
      CHECK(v > prefix);
      prefix += v;
    }
  }
  SUBCASE("m=2") {
    const auto y = gen_super_increasing(2, 4, rng);
    CHECK(y[1] > y[0]);
    CHECK(bit_length(y[0]) == 4);
  }
}

TEST_CASE("find_generator order conditions") {
  RngHandle rng(12);
  const BigNat g = find_generator(3, 2, 5, 77, rng);
  CHECK(mod_pow(g, 30, 77) == 1);
  CHECK(mod_pow(g, 10, 77) != 1);  // pxq/p
  CHECK(mod_pow(g, 15, 77) != 1);  // pxq/x
  CHECK(mod_pow(g, 6, 77) != 1);   // pxq/q
}

TEST_CASE("generated instance invariants") {
  RngHandle rng(13);
  const Instance inst = gen_instance(SecurityConfig::toy(10, 6), rng);
  const ValidationReport report = validate_instance(inst.params, inst.secret);
  for (const auto& check : report.checks) {
    INFO(check.name << ": " << check.detail);
    CHECK(check.passed);
  }

  const BigNat ring = inst.secret.ring_order();
  for (std::size_t i = 0; i < inst.params.m(); ++i) {
    CHECK(decode_oracle(Encoding{inst.params.w[i].e, 1}, inst.secret) ==
          inst.secret.y[i] % ring);
    CHECK(mod_pow(inst.params.h, inst.secret.y[i], inst.params.modulus) ==
          inst.params.w[i].d);
  }
}

TEST_CASE("gen_instance determinism per seed") {
  RngHandle a(99), b(99);
  const SecurityConfig cfg = SecurityConfig::toy(10, 5);
  const Instance ia = gen_instance(cfg, a);
  const Instance ib = gen_instance(cfg, b);
  CHECK(ia.params == ib.params);
  CHECK(ia.secret == ib.secret);

  RngHandle c(100);
  const Instance ic = gen_instance(cfg, c);
  CHECK(ia.params.modulus != ic.params.modulus);
}

TEST_CASE("validation flags tampering") {
  Instance inst = make_toy77();

  SUBCASE("perturbed e_1") {
    inst.params.w[0].e += 1;
    const ValidationReport report = validate_instance(inst.params, inst.secret);
    CHECK_FALSE(report.all_passed());
    REQUIRE(report.find("w-consistency") != nullptr);
    CHECK_FALSE(report.find("w-consistency")->passed);
  }
  SUBCASE("y order swapped") {
    std::swap(inst.secret.y[0], inst.secret.y[3]);
    const ValidationReport report = validate_instance(inst.params, inst.secret);
    REQUIRE(report.find("super-increasing") != nullptr);
    CHECK_FALSE(report.find("super-increasing")->passed);
  }
  SUBCASE("wrong modulus") {
    inst.params.modulus = 85;
    const ValidationReport report = validate_instance(inst.params, inst.secret);
    REQUIRE(report.find("factor-primality") != nullptr);
    CHECK_FALSE(report.find("factor-primality")->passed);
  }
}

TEST_CASE("plaintext-to-image map is injective at toy scale") {
  RngHandle rng(14);
  const Instance inst = gen_instance(SecurityConfig::toy(8, 8), rng);
  std::set<BigNat> images;
  const std::uint64_t top = 1u << inst.params.m();
  for (std::uint64_t r = 2; r < top; ++r) {
    BigNat image = 0;
    for (std::size_t j = 0; j < inst.params.m(); ++j) {
      if (r & (1u << j)) image += inst.secret.y[j];
    }
    CHECK(images.insert(image).second);
  }
  CHECK(images.size() == top - 2);
}

TEST_CASE("config validation") {
  SecurityConfig cfg = SecurityConfig::toy(8, 4);
  CHECK_NOTHROW(cfg.validate());

  cfg.m = 1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = SecurityConfig::toy(8, 4);
  cfg.prime_bits = 1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = SecurityConfig::toy(8, 4);
  cfg.lambda = 9;  // exceeds prime_bits
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = SecurityConfig::toy(8, 4);
  cfg.q_bits = 4;  // below prime_bits
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = SecurityConfig::toy(8, 4);
  cfg.mr_rounds = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  RngHandle rng(1);
  SecurityConfig bad = SecurityConfig::toy(8, 4);
  bad.m = 1;
  CHECK_THROWS_AS(gen_instance(bad, rng), ConfigError);
}

TEST_CASE("injected instance validation") {
  RngHandle rng(2);
  const SecurityConfig cfg = toy77_config();

  InstanceOverride hook = toy77_override();
  hook.q = 4;  // not prime
  CHECK_THROWS_AS(gen_instance(cfg, rng, &hook), ConfigError);

  hook = toy77_override();
  hook.y = {2, 3, 4, 12};  // 4 < 2+3: not super-increasing
  CHECK_THROWS_AS(gen_instance(cfg, rng, &hook), ConfigError);

  hook = toy77_override();
  hook.g = 4;  // ord(4) = 15, a proper divisor of 30
  CHECK_THROWS_AS(gen_instance(cfg, rng, &hook), ConfigError);

  // y/k omitted: sampled for the injected primes, still a valid instance.
  hook = toy77_override();
  hook.y.clear();
  hook.k.clear();
  const Instance inst = gen_instance(cfg, rng, &hook);
  CHECK(inst.params.modulus == 77);
  CHECK(validate_instance(inst.params, inst.secret).all_passed());
}

TEST_CASE("default profile shape") {
  const SecurityConfig cfg = SecurityConfig::default_profile();
  CHECK(cfg.lambda == 80);
  CHECK(cfg.prime_bits == 256);
  CHECK(cfg.effective_q_bits() == 512);
  CHECK(cfg.m == 160);
  CHECK_NOTHROW(cfg.validate());
}
