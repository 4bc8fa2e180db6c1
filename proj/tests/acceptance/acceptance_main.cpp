// Runs every acceptance criterion at its stated tolerance, one line per criterion.
#include <cstdio>
#include <cstring>

#include "interlink/verify.hpp"

int main(int argc, char** argv)
{
    interlink::VerifyOptions options;
    if (argc > 1 && std::strcmp(argv[1], "--quick") == 0) {
        options.profile = interlink::Profile::quick;
    }
    int failed = 0;
    for (const auto& r : interlink::run_acceptance(options)) {
        std::printf("[%s] criterion %2d  %-34s %8.3f s (limit %g s)", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.time_limit_s);
        for (const auto& [name, value] : r.measurements) {
            std::printf("  %s=%.3g", name.c_str(), value);
        }
        if (!r.passed) {
            std::printf("\n        %s", r.failure.c_str());
            ++failed;
        }
        std::printf("\n");
    }
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
