#pragma once

#include <map>
#include <vector>

#include "tvrt/link.hpp"

namespace tvrt {

// Braid closures as PD codes, for generating test diagrams. A word is a list
// of nonzero integers: +i is the positive generator crossing strand i over
// strand i+1 (1-based), -i its inverse. Unused strands close into 0-crossing
// unknot components.
inline FramedLink braid_closure(int strands, const std::vector<int>& word,
                                std::vector<long> framings = {}) {
    if (strands < 1) throw DomainError("braid_closure: need at least one strand");
    int next_arc = 1;
    std::vector<int> start(static_cast<std::size_t>(strands)), cur(static_cast<std::size_t>(strands));
    for (int i = 0; i < strands; ++i) start[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i)] = next_arc++;
    std::vector<bool> touched(static_cast<std::size_t>(strands), false);

    std::vector<std::array<int, 4>> pd;
    for (int g : word) {
        int i = std::abs(g) - 1;
        if (i < 0 || i + 1 >= strands) throw DomainError("braid_closure: generator out of range");
        touched[static_cast<std::size_t>(i)] = touched[static_cast<std::size_t>(i + 1)] = true;
        int nl = next_arc++, nr = next_arc++;  // new arcs at positions i, i+1
        int ol = cur[static_cast<std::size_t>(i)], orr = cur[static_cast<std::size_t>(i + 1)];
        if (g > 0) {
            // left strand passes over: under-in at bottom right
            pd.push_back({orr, nr, nl, ol});
        } else {
            // right strand passes over: under-in at bottom left
            pd.push_back({ol, orr, nr, nl});
        }
        cur[static_cast<std::size_t>(i)] = nl;
        cur[static_cast<std::size_t>(i + 1)] = nr;
    }

    // closure: top arcs are the same as the bottom arcs; rewrite labels
    std::map<int, int> rename;
    for (int i = 0; i < strands; ++i) {
        int a = cur[static_cast<std::size_t>(i)], b = start[static_cast<std::size_t>(i)];
        // cur[i] closes into start[i]
        if (a != b) rename[a] = b;
    }
    auto resolve = [&](int a) {
        while (rename.count(a)) a = rename[a];
        return a;
    };
    for (auto& c : pd)
        for (int s = 0; s < 4; ++s) c[static_cast<std::size_t>(s)] = resolve(c[static_cast<std::size_t>(s)]);

    // count components: traced ones from the pd plus untouched strands
    int untouched = 0;
    for (int i = 0; i < strands; ++i)
        if (!touched[static_cast<std::size_t>(i)]) ++untouched;
    // trace strand cycles through the braid permutation to count components
    std::vector<int> perm(static_cast<std::size_t>(strands));
    for (int i = 0; i < strands; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int g : word) {
        int i = std::abs(g) - 1;
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
    }
    std::vector<bool> seen(static_cast<std::size_t>(strands), false);
    int cycles = 0;
    for (int i = 0; i < strands; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++cycles;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = perm[static_cast<std::size_t>(j)];
        }
    }
    int traced = cycles - untouched;
    int total = traced + untouched;
    std::vector<int> unknotted;
    for (int i = 0; i < untouched; ++i) unknotted.push_back(traced + i);
    if (framings.empty()) framings.assign(static_cast<std::size_t>(total), 0);
    if (static_cast<int>(framings.size()) != total)
        throw DomainError("braid_closure: framing count mismatch");
    return FramedLink::from_pd(total, pd, framings, unknotted);
}

}  // namespace tvrt
