#include <doctest.h>

#include <random>

#include "autoreal/automaton.hpp"
#include "helpers.hpp"

using namespace autoreal;
using namespace testutil;

TEST_CASE("baum-sweet fixture matches the block definition") {
  DFAO bs = load_dfao("baum_sweet.json");
  CHECK(sequence_prefix(bs, 21).str() == "110110010100100110010");
  for (unsigned long n = 0; n < (1ul << 12); ++n)
    CHECK(eval(bs, mpz_class(n)) == std::to_string(baum_sweet_def(n)));
}

TEST_CASE("thue-morse fixture evaluates by popcount parity") {
  DFAO tm = load_dfao("thue_morse.json");
  for (unsigned long n = 0; n < (1ul << 12); ++n) {
    unsigned want = __builtin_popcountll(n) & 1;
    CHECK(eval(tm, mpz_class(n)) == std::to_string(want));
  }
}

TEST_CASE("minimization is minimal and preserves evaluation") {
  DFAO bs = minimize(load_dfao("baum_sweet.json"));
  CHECK(bs.states.size() == 3);
  DFAO orig = load_dfao("baum_sweet.json");
  for (unsigned long n = 0; n < 2048; ++n)
    CHECK(eval(bs, mpz_class(n)) == eval(orig, mpz_class(n)));
}

TEST_CASE("reverse reading preserves evaluation") {
  for (const char* name : {"thue_morse.json", "baum_sweet.json"}) {
    DFAO a = load_dfao(name);
    DFAO r = reverse_reading(a);
    CHECK(r.convention == ReadOrder::MsbFirst);
    for (unsigned long n = 0; n < (1ul << 12); ++n)
      CHECK(eval(a, mpz_class(n)) == eval(r, mpz_class(n)));
  }
}

TEST_CASE("reversed baum-sweet still matches the block definition") {
  DFAO r = reverse_reading(load_dfao("baum_sweet.json"));
  for (unsigned long n = 0; n < (1ul << 12); ++n)
    CHECK(eval(r, mpz_class(n)) == std::to_string(baum_sweet_def(n)));
}

TEST_CASE("zero invariance normalization is stable on fixtures") {
  for (const char* name : {"thue_morse.json", "baum_sweet.json"}) {
    DFAO a = load_dfao(name);
    DFAO b = normalize_zero_invariance(a);
    for (unsigned long n = 0; n < 2048; ++n)
      CHECK(eval(a, mpz_class(n)) == eval(b, mpz_class(n)));
  }
}

TEST_CASE("kernel size on fixtures") {
  KernelResult tm = kernel_size(load_dfao("thue_morse.json"));
  CHECK(tm.m == 2);
  CHECK(kernel_size(load_dfao("baum_sweet.json")).m ==
        kernel_oracle(load_dfao("baum_sweet.json"), 1 << 12));
  CHECK(tm.m == kernel_oracle(load_dfao("thue_morse.json"), 1 << 12));
}

TEST_CASE("kernel representatives reproduce their classes") {
  DFAO bs = load_dfao("baum_sweet.json");
  KernelResult k = kernel_size(bs);
  // Representatives index pairwise distinct subsequences.
  std::set<std::vector<std::string>> seen;
  for (const auto& [i, j] : k.representatives) {
    mpz_class ki = pow_z(static_cast<unsigned long>(bs.k), i);
    std::vector<std::string> prefix;
    for (unsigned long n = 0; n < 512; ++n)
      prefix.push_back(eval(bs, ki * n + j));
    CHECK(seen.insert(prefix).second);
  }
  CHECK(seen.size() == k.m);
}

TEST_CASE("random automata: oracle equivalence and reversal") {
  std::mt19937 rng(2024);
  for (int it = 0; it < 10; ++it) {
    DFAO a = random_dfao(rng);
    CHECK(kernel_size(a).m == kernel_oracle(a, 1 << 10));
    DFAO r = reverse_reading(a);
    for (unsigned long n = 0; n < 1024; ++n)
      CHECK(eval(a, mpz_class(n)) == eval(r, mpz_class(n)));
  }
}
