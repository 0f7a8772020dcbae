// One line per acceptance criterion; exit status 1 if any fails.

#include "bkb/suite.hpp"

#include <chrono>
#include <cstdio>
#include <exception>

int main() {
    int failed = 0;
    for (const auto& c : bkb::acceptance_checks()) {
        auto t0 = std::chrono::steady_clock::now();
        bkb::CheckResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %2d %-34s %7.2fs  %s\n", r.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, r.detail.c_str());
        std::fflush(stdout);
        if (!r.ok) ++failed;
    }
    std::printf("%d of 12 criteria failed\n", failed);
    return failed ? 1 : 0;
}
