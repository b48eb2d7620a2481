#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <vector>

#include "test_support.hpp"

namespace {
unsigned g_seed = 20260314u;
}

unsigned test_seed() { return g_seed; }

// Accepts a leading --seed N (stripped before handing the rest to doctest)
// so randomized tests stay reproducible by default and steerable on demand.
int main(int argc, char** argv) {
    std::vector<char*> args;
    for (int i = 0; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            g_seed = static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10));
            ++i;
            continue;
        }
        args.push_back(argv[i]);
    }
    doctest::Context ctx(static_cast<int>(args.size()), args.data());
    return ctx.run();
}
