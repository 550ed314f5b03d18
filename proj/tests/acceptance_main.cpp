#include "mincone/acceptance.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    double budget = 600.0;
    if (argc > 1) budget = std::atof(argv[1]);
    auto results = mincone::run_acceptance(budget);
    std::fputs(mincone::render_acceptance(results).c_str(), stdout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    return failed == 0 ? 0 : 1;
}
