#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "seed.hpp"

namespace symknot::test {
namespace {
std::uint64_t g_seed = kDefaultSeed;
}
std::uint64_t seed() { return g_seed; }
}  // namespace symknot::test

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      symknot::test::g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
      continue;
    }
    rest.push_back(argv[i]);
  }
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
