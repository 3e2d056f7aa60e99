#include "urodlab/acceptance.hpp"

#include <cstdio>

using namespace urodlab;

int main() {
    auto first = acceptance::run_all();
    bool all = true;
    for (const auto& r : first) {
        bool in_time = r.seconds <= r.budget;
        bool ok = r.pass && in_time;
        all = all && ok;
        std::printf("%s criterion %s: %s (%.2f s, budget %.0f s)%s\n", ok ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(),
                    r.seconds, r.budget, in_time ? "" : " over budget");
        if (!r.pass) std::printf("%s\n", r.detail.dump(2).c_str());
    }
    // determinism: a second full run must serialize identically
    auto a = dump(acceptance::manifest(first));
    auto b = dump(acceptance::manifest(acceptance::run_all()));
    bool same = a == b;
    all = all && same;
    std::printf("%s criterion 7: manifest byte-identical across two runs (%zu bytes)\n", same ? "PASS" : "FAIL", a.size());
    return all ? 0 : 1;
}
