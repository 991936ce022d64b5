// Acceptance suite: runs every acceptance criterion at its pinned scope and
// prints one pass/fail line per criterion. Exits nonzero on any failure.

#include "svir/checks.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    svir::CheckOptions opts;
    bool full = true;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--max-n") == 0 && i + 1 < argc) {
            opts.max_n = std::atol(argv[++i]);
        } else if (std::strcmp(argv[i], "--acceptance-only") == 0) {
            full = false;
        } else {
            std::fprintf(stderr, "usage: %s [--max-n N] [--acceptance-only]\n", argv[0]);
            return 2;
        }
    }

    auto results = full ? svir::run_all_checks(opts) : svir::run_acceptance(opts);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%-4s %-4s %8.1f ms  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.millis,
                    r.description.c_str());
        if (!r.detail.empty())
            std::printf("              %s\n", r.detail.c_str());
        if (!r.pass)
            ++failures;
    }
    std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
