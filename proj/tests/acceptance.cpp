// Runs the full verification suite and prints one line per criterion.

#include <cstdlib>
#include <iostream>
#include <string>

#include "qaffine/acceptance.hpp"

int main() {
    qaffine::SuiteOptions opt;
    if (const char* env = std::getenv("QAFFINE_SEED")) opt.seed = std::stoull(env);
    auto rep = qaffine::acceptance_suite(opt);
    bool ok = true;
    for (const auto& r : rep.criteria) {
        std::cout << (r.ok ? "PASS " : "FAIL ") << r.id << ": " << r.detail << "\n";
        ok = ok && r.ok;
    }
    for (const auto& r : rep.parts)
        if (!r.ok) std::cout << "  failing record " << r.id << ": " << r.detail << "\n";
    return ok ? 0 : 1;
}
