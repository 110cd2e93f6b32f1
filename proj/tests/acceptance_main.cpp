// One line per acceptance criterion; nonzero exit if any criterion fails.
#include "hilbert_ball/verify.hpp"

#include <cstdio>
#include <string>

int main(int argc, char** argv) {
    const std::string only = argc > 1 ? argv[1] : "";
    int failed = 0;
    int total = 0;
    for (const auto& e : hball::verify::acceptance_criteria()) {
        if (!only.empty() && e.group != only) continue;
        const auto r = hball::verify::run_criterion(e);
        std::printf("%s\n", hball::verify::format_result_line(r).c_str());
        std::fflush(stdout);
        ++total;
        if (!r.passed) ++failed;
    }
    std::printf("acceptance: %d/%d criteria passed\n", total - failed, total);
    return failed == 0 ? 0 : 1;
}
