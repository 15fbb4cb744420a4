// Acceptance gate: one line per criterion, nonzero exit if any checked
// criterion fails.  Criterion 11 is a long-running exhaustive search and is
// reported as SKIP here; run `symscheme verify --exhaustive-table1` for it.
#include <cstdio>

#include "symscheme/verify.hpp"

int main()
{
    bool all = true;
    for (const auto& c : symscheme::run_acceptance()) {
        all = all && c.pass;
        std::printf("criterion %2d: %s - %s%s%s%s\n", c.id, c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.detail.empty() ? "" : " (",
                    c.detail.c_str(), c.detail.empty() ? "" : ")");
    }
    std::printf("criterion 11: SKIP - exhaustive subspace search "
                "(run: symscheme verify --exhaustive-table1; ~3 min, verifies that "
                "exactly four inner distributions occur)\n");
    return all ? 0 : 1;
}
