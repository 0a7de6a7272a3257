#pragma once

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "tvrt/census.hpp"
#include "tvrt/pachner.hpp"
#include "tvrt/rt_engine.hpp"
#include "tvrt/selftest_algebra.hpp"
#include "tvrt/tv_engine.hpp"
#include "tvrt/verification.hpp"

namespace tvrt::selftest {

struct SuiteResult {
    std::string name;
    bool passed = false;
    long checks = 0;
    double seconds = 0.0;
    std::string detail;
};

// state sums unchanged under random applicable move sequences
inline SuiteResult pachner_suite(const std::vector<int>& levels, int sequences_per_manifold,
                                 int max_moves, std::uint32_t seed, int threads = 1) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult res;
    res.name = "pachner";
    res.passed = true;
    std::mt19937 rng(seed);
    TvOptions opts;
    opts.threads = threads;
    for (int r : levels) {
        ModularData md(r);
        for (const auto& entry : census()) {
            CycNumber base = tv_state_sum(entry.triangulation, md, opts).value;
            for (int seq = 0; seq < sequences_per_manifold; ++seq) {
                Triangulation cur = entry.triangulation;
                int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_moves));
                for (int step = 0; step < len; ++step) {
                    auto cands = pachner_candidates(cur);
                    // cap growth so the recolored sums stay small
                    std::vector<PachnerCandidate> pool;
                    for (const auto& c : cands) {
                        bool grows = c.kind == PachnerKind::kTwoThree ||
                                     c.kind == PachnerKind::kOneFour;
                        if (!grows ||
                            cur.tet_count() <= entry.triangulation.tet_count() + 3)
                            pool.push_back(c);
                    }
                    if (pool.empty()) break;
                    const auto& c = pool[rng() % pool.size()];
                    try {
                        cur = pachner_move(cur, c.kind, c.a, c.b);
                    } catch (const MoveRejectedError&) {
                    }
                }
                ++res.checks;
                if (!(tv_state_sum(cur, md, opts).value == base)) {
                    res.passed = false;
                    res.detail = entry.name + " at r=" + std::to_string(r);
                }
            }
        }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// blow-ups and a handle-slide pair of surgery presentations
inline SuiteResult kirby_suite(const std::vector<int>& levels) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult res;
    res.name = "kirby";
    res.passed = true;
    std::vector<FramedLink> bases;
    bases.push_back(FramedLink::from_pd(0, {}, {}));
    bases.push_back(framed_unknot(0));
    bases.push_back(framed_unknot(3));
    bases.push_back(FramedLink::from_pd(2, {{1, 3, 2, 4}, {3, 1, 4, 2}}, {0, 0}));
    for (int r : levels) {
        ModularData md(r);
        for (const auto& base : bases) {
            InvariantValue tau = rt_invariant(base, md);
            for (int sign : {+1, -1}) {
                ++res.checks;
                InvariantValue blown = rt_invariant(with_blowup(base, sign), md);
                if (!invariant_equal(blown, tau, md) ||
                    !(modulus_squared(blown, md) == modulus_squared(tau, md))) {
                    res.passed = false;
                    res.detail = "blow-up changed the invariant at r=" + std::to_string(r);
                }
            }
        }
        // two presentations of the same lens space
        ++res.checks;
        InvariantValue a = rt_invariant(framed_unknot(4), md);
        InvariantValue b =
            rt_invariant(FramedLink::from_pd(2, {{1, 3, 2, 4}, {3, 1, 4, 2}}, {5, 1}), md);
        if (!(modulus_squared(a, md) == modulus_squared(b, md))) {
            res.passed = false;
            res.detail = "handle-slide pair disagrees at r=" + std::to_string(r);
        }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline SuiteResult symmetry_suite(const std::vector<int>& levels) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult res;
    res.name = "tetrahedral-symmetry";
    res.passed = true;
    for (int r : levels) {
        ModularData md(r);
        long bad = check_tetrahedral_symmetry(md);
        res.checks += static_cast<long>(admissible_sixj_tuples(md).size()) * 24;
        if (bad != 0) {
            res.passed = false;
            res.detail = std::to_string(bad) + " violations at r=" + std::to_string(r);
        }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline SuiteResult contracts_suite(const std::vector<int>& levels, int samples,
                                   std::uint32_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult res;
    res.name = "pentagon-orthogonality";
    res.passed = true;
    for (int r : levels) {
        ModularData md(r);
        AlgebraReport rep = check_move_contracts(md, samples, seed);
        res.checks += rep.pentagon_checked + rep.orthogonality_checked;
        if (!rep.ok()) {
            res.passed = false;
            res.detail = "residuals at r=" + std::to_string(r);
        }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline std::vector<SuiteResult> run_selftests(int max_level) {
    std::vector<int> algebra_levels, tv_levels, rt_levels;
    for (int r = 3; r <= max_level; ++r) algebra_levels.push_back(r);
    for (int r = 3; r <= std::min(max_level, 5); ++r) tv_levels.push_back(r);
    for (int r = 3; r <= std::min(max_level, 6); ++r) rt_levels.push_back(r);
    std::vector<SuiteResult> out;
    out.push_back(symmetry_suite(algebra_levels));
    out.push_back(contracts_suite(algebra_levels, 200, 20240817));
    out.push_back(pachner_suite(tv_levels, 5, 6, 20240817));
    out.push_back(kirby_suite(rt_levels));
    return out;
}

}  // namespace tvrt::selftest
