#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "ges/nike.hpp"
#include "ges/serialize.hpp"
#include "test_util.hpp"

using namespace ges;
using namespace ges::testing;

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
  const std::string command = env_prefix + std::string(GES_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buffer{};
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
    result.output += buffer.data();
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ges-cli-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// toy77 parameter/secret/keypair files shared by the vector tests
struct ToyFiles {
  TempDir dir;
  std::string params, secret, alice;
  ToyFiles() {
    const Instance inst = make_toy77();
    params = dir.file("params.json");
    secret = dir.file("secret.json");
    alice = dir.file("alice.json");
    write_param_file(params, inst.params);
    write_secret_file(secret, inst.secret);
    write_keypair_file(alice, keypair_for(inst.params, Plaintext{5}));
  }
};

}  // namespace

TEST_CASE("gen-params writes parseable, seed-stable files") {
  TempDir dir;
  const std::string base = "gen-params --prime-bits 10 --q-bits 20 --lambda 8 --m 6 --seed 7";
  const RunResult first = run_cli(base + " --out-public " + dir.file("pub1.json") +
                                  " --out-secret " + dir.file("sec1.json"));
  INFO(first.output);
  CHECK(first.exit_code == 0);
  CHECK(first.output.find("N: ") != std::string::npos);
  CHECK(first.output.find("generated in") != std::string::npos);
  CHECK(first.output.find("restrict its permissions") != std::string::npos);

  const SystemParams sp = read_param_file(dir.file("pub1.json"));
  const MasterSecret msk = read_secret_file(dir.file("sec1.json"));
  CHECK(sp.m() == 6);
  CHECK(validate_instance(sp, msk).all_passed());

  const RunResult second = run_cli(base + " --out-public " + dir.file("pub2.json") +
                                   " --out-secret " + dir.file("sec2.json"));
  CHECK(second.exit_code == 0);
  CHECK(slurp(dir.file("pub1.json")) == slurp(dir.file("pub2.json")));
  CHECK(slurp(dir.file("sec1.json")) == slurp(dir.file("sec2.json")));
}

TEST_CASE("gen-params usage errors exit 2") {
  TempDir dir;
  const RunResult bad_m = run_cli("gen-params --m 1 --out-public " + dir.file("p.json") +
                                  " --out-secret " + dir.file("s.json"));
  CHECK(bad_m.exit_code == 2);
  const RunResult missing = run_cli("gen-params --m 6");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("keygen reproduces the toy vector and is seed-stable") {
  ToyFiles toy;
  const std::string out = toy.dir.file("kp.json");
  const RunResult forced = run_cli("keygen --params " + toy.params + " --r 5 --out " + out);
  INFO(forced.output);
  CHECK(forced.exit_code == 0);
  CHECK(forced.output.find("u = 0x2c") != std::string::npos);
  const PartyKeyPair kp = read_keypair_file(out);
  CHECK(kp.public_u.value == 44);
  CHECK(kp.secret_b.value == 71);

  const std::string out_a = toy.dir.file("a.json"), out_b = toy.dir.file("b.json");
  CHECK(run_cli("keygen --params " + toy.params + " --seed 9 --out " + out_a).exit_code == 0);
  CHECK(run_cli("keygen --params " + toy.params + " --seed 9 --out " + out_b).exit_code == 0);
  CHECK(slurp(out_a) == slurp(out_b));

  const RunResult out_of_range =
      run_cli("keygen --params " + toy.params + " --r 1 --out " + toy.dir.file("c.json"));
  CHECK(out_of_range.exit_code == 1);
}

TEST_CASE("keygen on a corrupt parameter file exits 1") {
  TempDir dir;
  std::ofstream(dir.file("bad.json")) << "{\"version\": 1";
  const RunResult result =
      run_cli("keygen --params " + dir.file("bad.json") + " --out " + dir.file("kp.json"));
  CHECK(result.exit_code == 1);
}

TEST_CASE("sharekey reproduces the toy agreement") {
  ToyFiles toy;
  const RunResult result =
      run_cli("sharekey --params " + toy.params + " --keypair " + toy.alice +
              " --peers 0x52");
  INFO(result.output);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("element = 0x24") != std::string::npos);
  // session key: SHA-256 of the single byte 0x24 (frozen vector)
  CHECK(result.output.find(
            "09fc96082d34c2dfc1295d92073b5ea1dc8ef8da95f14dfded011ffb96d3e54b") !=
        std::string::npos);

  // peer order invariance with two peers (u values for r=9 and r=2)
  const RunResult ab = run_cli("sharekey --params " + toy.params + " --keypair " +
                               toy.alice + " --peers 0x52,0x1d");
  const RunResult ba = run_cli("sharekey --params " + toy.params + " --keypair " +
                               toy.alice + " --peers 0x1d,0x52");
  CHECK(ab.exit_code == 0);
  CHECK(ab.output == ba.output);
}

TEST_CASE("sharekey rejects tampered keypair files") {
  ToyFiles toy;
  const Instance inst = make_toy77();

  // u inconsistent with r
  PartyKeyPair forged = keypair_for(inst.params, Plaintext{5});
  forged.public_u.value += 1;
  const std::string bad_u = toy.dir.file("bad_u.json");
  write_keypair_file(bad_u, forged);
  const RunResult inconsistent = run_cli("sharekey --params " + toy.params +
                                         " --keypair " + bad_u + " --peers 0x52");
  CHECK(inconsistent.exit_code == 1);

  // r outside S
  PartyKeyPair out_of_s = keypair_for(inst.params, Plaintext{5});
  out_of_s.r = Plaintext{1};
  const std::string bad_r = toy.dir.file("bad_r.json");
  write_keypair_file(bad_r, out_of_s);
  const RunResult invalid_r = run_cli("sharekey --params " + toy.params + " --keypair " +
                                      bad_r + " --peers 0x52");
  CHECK(invalid_r.exit_code == 1);
  CHECK(invalid_r.output.find("outside S") != std::string::npos);
}

TEST_CASE("GES_SEED is the fallback for --seed") {
  ToyFiles toy;
  const std::string out_env = toy.dir.file("env.json");
  const std::string out_flag = toy.dir.file("flag.json");
  const RunResult env_run = run_cli("keygen --params " + toy.params + " --out " + out_env,
                                    "GES_SEED=9 ");
  CHECK(env_run.exit_code == 0);
  const RunResult flag_run =
      run_cli("keygen --params " + toy.params + " --seed 9 --out " + out_flag);
  CHECK(flag_run.exit_code == 0);
  CHECK(slurp(out_env) == slurp(out_flag));
}

TEST_CASE("sharekey flags the degenerate pair with exit 3") {
  ToyFiles toy;
  const RunResult result = run_cli("sharekey --params " + toy.params + " --keypair " +
                                   toy.alice + " --peers 0x2d");
  INFO(result.output);
  CHECK(result.exit_code == 3);
  CHECK(result.output.find("degenerate") != std::string::npos);
}

TEST_CASE("id-keygen reproduces the toy fixture") {
  ToyFiles toy;
  const RunResult result = run_cli("id-keygen --secret " + toy.secret + " --params " +
                                   toy.params + " --identity user-165");
  INFO(result.output);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("h = 0x35") != std::string::npos);
  CHECK(result.output.find("private = 0x8\n") != std::string::npos);

  const RunResult missing = run_cli("id-keygen --secret " + toy.dir.file("nope.json") +
                                    " --params " + toy.params + " --identity x");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("attack ssp") {
  const RunResult hit = run_cli("attack --mode ssp --weights 16,29,28,66 --target 44");
  INFO(hit.output);
  CHECK(hit.exit_code == 0);
  CHECK(hit.output.find("mask 0101") != std::string::npos);
  CHECK(hit.output.find("(r = 5)") != std::string::npos);

  const RunResult miss = run_cli("attack --mode ssp --weights 16,29,28,66 --target 1");
  CHECK(miss.exit_code == 0);
  CHECK(miss.output.find("none") != std::string::npos);

  std::string big = "1";
  for (int i = 1; i < 41; ++i) big += ",1";
  const RunResult oversize = run_cli("attack --mode ssp --weights " + big + " --target 3");
  CHECK(oversize.exit_code == 2);
}

TEST_CASE("attack gcd") {
  ToyFiles toy;
  const RunResult hit =
      run_cli("attack --mode gcd --inputs 34,54,94 --params " + toy.params);
  INFO(hit.output);
  CHECK(hit.exit_code == 0);
  CHECK(hit.output.find("10") != std::string::npos);

  const RunResult miss =
      run_cli("attack --mode gcd --inputs 101,9034,77113 --params " + toy.params);
  CHECK(miss.exit_code == 0);
  CHECK(miss.output.find("none") != std::string::npos);
}

TEST_CASE("bench prints the machine-readable line") {
  ToyFiles toy;
  const RunResult result =
      run_cli("bench --params " + toy.params + " --t 1 --reps 3 --seed 4");
  INFO(result.output);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("bench t=1 median_ms=") != std::string::npos);

  const RunResult zero_reps =
      run_cli("bench --params " + toy.params + " --t 1 --reps 0");
  CHECK(zero_reps.exit_code == 2);
}
