// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "tvrt/braid.hpp"
#include "tvrt/census.hpp"
#include "tvrt/pachner.hpp"
#include "tvrt/rt_engine.hpp"
#include "tvrt/selftest.hpp"
#include "tvrt/tv_engine.hpp"
#include "tvrt/verification.hpp"

using namespace tvrt;

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

int failures = 0;

const ModularData& data(int r) {
    static std::map<int, std::unique_ptr<ModularData>> cache;
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, std::make_unique<ModularData>(r)).first;
    return *it->second;
}

void criterion(int number, const std::string& label, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty()) {
        std::printf("PASS criterion %d: %s (%.2fs)\n", number, label.c_str(), secs);
    } else {
        ++failures;
        std::printf("FAIL criterion %d: %s (%.2fs) -- %s\n", number, label.c_str(), secs,
                    detail.c_str());
    }
    std::fflush(stdout);
}

// brute-force count of admissible colorings of a fixed trivalent spine of
// the genus-g handlebody (g = 1: circle; g = 2: dumbbell; g >= 3: dumbbell
// chain with doubled middle edges)
long spine_coloring_count(int g, const ModularData& md) {
    const int nc = md.color_count();
    if (g == 1) return nc;
    // edges: loop x, bar b_1, then for each middle section a parallel pair,
    // ending bar b_{g-1}, loop y; vertices impose admissibility
    // g=2: x, b, y with (x,x,b) and (y,y,b)
    // g=3: x, b1, p1, p2, b2, y with (x,x,b1), (b1,p1,p2), (p1,p2,b2), (y,y,b2)
    const int mid = g - 2;            // parallel-pair sections
    const int edges = 3 + 3 * mid;    // x, y, b_1..b_{g-1}, pairs p_i,q_i
    std::vector<Color> col(static_cast<std::size_t>(edges), 0);
    long count = 0;
    bool running = true;
    while (running) {
        // layout: col[0]=x, col[1]=y, then per section i: b_i at 2+3i,
        // p_i at 3+3i, q_i at 4+3i; final bar b_{g-1} = col[2+3*mid]
        // for mid = 0 the single bar is col[2]
        bool ok = true;
        Color first_bar = col[2];
        ok = ok && md.admissible(col[0], col[0], first_bar);
        Color prev_bar = first_bar;
        for (int i = 0; i < mid; ++i) {
            Color p = col[static_cast<std::size_t>(3 + 3 * i)];
            Color q = col[static_cast<std::size_t>(4 + 3 * i)];
            Color next_bar = i + 1 < mid ? col[static_cast<std::size_t>(2 + 3 * (i + 1))]
                                         : col[static_cast<std::size_t>(2 + 3 * mid)];
            ok = ok && md.admissible(prev_bar, p, q);
            ok = ok && md.admissible(p, q, next_bar);
            prev_bar = next_bar;
        }
        ok = ok && md.admissible(col[1], col[1], prev_bar);
        if (ok) ++count;
        int pos = 0;
        int total = mid > 0 ? 3 + 3 * mid : 3;
        while (pos < total) {
            if (++col[static_cast<std::size_t>(pos)] < nc) break;
            col[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        running = pos < total;
    }
    return count;
}

}  // namespace

int main() {
    criterion(1, "tetrahedral symmetry, pentagon and orthogonality exact for r in 3..8", [] {
        for (int r = 3; r <= 8; ++r) {
            const ModularData& md = data(r);
            if (selftest::check_tetrahedral_symmetry(md) != 0)
                return "symmetry violation at r=" + std::to_string(r);
            auto rep = selftest::check_move_contracts(md, r <= 5 ? 500 : 200, 20240817u + r);
            if (!rep.ok()) return "move-contract residual at r=" + std::to_string(r);
            if (rep.pentagon_checked == 0 || rep.orthogonality_checked == 0)
                return std::string("sampler starved");
        }
        return std::string();
    });

    criterion(2, "global dimension and anomaly identities", [] {
        for (int r = 3; r <= 12; ++r) {
            ModularData md(r, false);
            // omega_c^4 = [c+1]^2; re-derive the total dimension from plain
            // quantum integers, independent of the cached qdims
            CycNumber sum4 = CycNumber::zero(md.root_order());
            for (Color c = 0; c < md.color_count(); ++c) {
                CycNumber qi = quantum_integer(c + 1, md.level());
                sum4 += qi * qi;
            }
            if (!(sum4 == md.global_dim()))
                return "omega^2 != sum of fourth powers at r=" + std::to_string(r);
            double want = r / (2.0 * std::pow(std::sin(kPi / r), 2));
            if (std::abs(md.global_dim().to_complex().real() - want) > 1e-10 ||
                std::abs(md.global_dim().to_complex().imag()) > 1e-10)
                return "numeric global dimension off at r=" + std::to_string(r);
        }
        for (int r = 3; r <= 10; ++r) {
            ModularData md(r, false);
            if (!(md.delta_L() * md.delta_R() == md.global_dim()))
                return "Delta_L Delta_R != omega^2 at r=" + std::to_string(r);
            if (!(md.delta_R() == md.delta_L().conjugate()))
                return "Delta_R != conj Delta_L at r=" + std::to_string(r);
        }
        return std::string();
    });

    criterion(3, "state sum invariant under 20 random move sequences per census entry", [] {
        std::mt19937 rng(987654321);
        for (int r : {3, 4, 5}) {
            const ModularData& md = data(r);
            for (const auto& entry : census()) {
                CycNumber base = tv_state_sum(entry.triangulation, md).value;
                for (int seq = 0; seq < 20; ++seq) {
                    Triangulation cur = entry.triangulation;
                    int len = 1 + static_cast<int>(rng() % 6);
                    for (int step = 0; step < len; ++step) {
                        auto cands = pachner_candidates(cur);
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
                    if (!(tv_state_sum(cur, md).value == base))
                        return entry.name + " changed at r=" + std::to_string(r);
                }
            }
        }
        return std::string();
    });

    criterion(4, "sphere state sum is 1/omega^2 for r in 3..6, brute oracle = pruned", [] {
        for (int r = 3; r <= 6; ++r) {
            const ModularData& md = data(r);
            for (const char* name : {"S3_2tet", "S3_1tet"}) {
                TvOptions brute;
                brute.method = TvMethod::kBrute;
                StateSumResult b = tv_state_sum(census_entry(name), md, brute);
                StateSumResult p = tv_state_sum(census_entry(name), md);
                if (!(b.value == md.global_dim().inverse()))
                    return std::string(name) + " brute value wrong at r=" + std::to_string(r);
                if (!(p.value == b.value))
                    return std::string(name) + " pruned != brute at r=" + std::to_string(r);
            }
        }
        return std::string();
    });

    criterion(5, "state-space dimensions match spine-coloring counts, g in 1..3, r in 3..5", [] {
        for (int r : {3, 4, 5}) {
            const ModularData& md = data(r);
            for (int g = 1; g <= 3; ++g) {
                long count = spine_coloring_count(g, md);
                BigInt want = BigInt(count) * BigInt(count);
                if (!(md.verlinde_dim(g) == want))
                    return "genus " + std::to_string(g) + " at r=" + std::to_string(r) +
                           ": dim " + md.verlinde_dim(g).to_string() + " vs count^2 " +
                           want.to_string();
                if (!(md.handlebody_dim(g) == BigInt(count)))
                    return "handlebody dim mismatch at g=" + std::to_string(g) +
                           " r=" + std::to_string(r);
            }
        }
        return std::string();
    });

    criterion(6, "skein engine: 50 R2/R3 rewrites plus unknot and hopf closed forms", [] {
        // closed forms for r <= 6
        for (int r = 3; r <= 6; ++r) {
            const ModularData& md = data(r);
            FramedLink h = FramedLink::from_pd(2, {{1, 3, 2, 4}, {3, 1, 4, 2}}, {0, 0});
            for (Color a = 0; a < md.color_count(); ++a) {
                for (long f : {-1L, 0L, 2L}) {
                    FramedLink u = framed_unknot(f);
                    CycNumber want = md.twist(a).pow(f) * md.qdim(a);
                    if (!(colored_link_value(u, {a}, md) == want))
                        return "unknot closed form fails at r=" + std::to_string(r);
                }
                for (Color b = 0; b < md.color_count(); ++b) {
                    CycNumber want = quantum_integer((a + 1) * (b + 1), md.level());
                    if ((a + b) % 2) want = -want;
                    if (!(colored_link_value(h, {a, b}, md) == want))
                        return "hopf closed form fails at r=" + std::to_string(r);
                }
            }
        }
        // 50 generated rewrites at r=5
        std::mt19937 rng(55555);
        const ModularData& md = data(5);
        int done = 0;
        while (done < 50) {
            int strands = 3;
            std::vector<int> word;
            int len = 2 + static_cast<int>(rng() % 4);
            for (int i = 0; i < len; ++i) {
                int g = 1 + static_cast<int>(rng() % (strands - 1));
                word.push_back(rng() % 2 ? g : -g);
            }
            std::vector<int> rewritten = word;
            if (rng() % 2) {
                int g = 1 + static_cast<int>(rng() % (strands - 1));
                std::size_t pos = rng() % (word.size() + 1);
                rewritten.insert(rewritten.begin() + static_cast<long>(pos), {g, -g});
            } else {
                std::size_t pos = rng() % (word.size() + 1);
                word.insert(word.begin() + static_cast<long>(pos), {1, 2, 1});
                rewritten = word;
                rewritten.erase(rewritten.begin() + static_cast<long>(pos),
                                rewritten.begin() + static_cast<long>(pos) + 3);
                rewritten.insert(rewritten.begin() + static_cast<long>(pos), {2, 1, 2});
            }
            FramedLink a = braid_closure(strands, word);
            FramedLink b = braid_closure(strands, rewritten);
            std::vector<Color> colors;
            for (int i = 0; i < a.component_count(); ++i)
                colors.push_back(1 + static_cast<int>(rng() % 2));
            if (!(colored_link_value(a, colors, md) == colored_link_value(b, colors, md)))
                return "rewrite " + std::to_string(done) + " changed the value";
            ++done;
        }
        return std::string();
    });

    criterion(7, "blow-ups preserve the surgery invariant; lens space presentations agree", [] {
        for (int r = 3; r <= 6; ++r) {
            const ModularData& md = data(r);
            std::vector<FramedLink> bases;
            bases.push_back(FramedLink::from_pd(0, {}, {}));
            bases.push_back(framed_unknot(0));
            bases.push_back(framed_unknot(3));
            bases.push_back(FramedLink::from_pd(2, {{1, 3, 2, 4}, {3, 1, 4, 2}}, {0, 0}));
            for (const auto& base : bases) {
                InvariantValue tau = rt_invariant(base, md);
                for (int sign : {+1, -1}) {
                    InvariantValue blown = rt_invariant(with_blowup(base, sign), md);
                    if (!invariant_equal(blown, tau, md))
                        return "blow-up changed tau at r=" + std::to_string(r);
                }
            }
            InvariantValue a = rt_invariant(framed_unknot(4), md);
            InvariantValue b = rt_invariant(
                FramedLink::from_pd(2, {{1, 3, 2, 4}, {3, 1, 4, 2}}, {5, 1}), md);
            if (!(modulus_squared(a, md) == modulus_squared(b, md)))
                return "lens space presentations disagree at r=" + std::to_string(r);
        }
        return std::string();
    });

    criterion(8, "Z_TV = |tau|^2 exactly on all bundled pairs for r in 3..6", [] {
        for (int r = 3; r <= 6; ++r) {
            const ModularData& md = data(r);
            for (const auto& pair : bundled_pairs()) {
                VerificationReport rep = verify_pair(pair, md);
                if (!rep.equal)
                    return pair.name + " at r=" + std::to_string(r) +
                           ": Z_TV = " + rep.tv_value.to_string() +
                           " vs |tau|^2 = " + rep.rt_modsq.to_string();
                if (!(rep.tv_value.conjugate() == rep.tv_value))
                    return pair.name + " state sum not real at r=" + std::to_string(r);
                if (rep.tv_value.to_complex().real() < -1e-12)
                    return pair.name + " state sum negative at r=" + std::to_string(r);
            }
        }
        return std::string();
    });

    criterion(9, "connected sum factorization at r in 3..4", [] {
        Triangulation rp3 = census_entry("RP3");
        Triangulation s3 = census_entry("S3_2tet");
        for (const Triangulation& cs :
             {rp3_connected_sum_rp3_raw(), rp3_connected_sum_rp3()}) {
            for (int r : {3, 4}) {
                auto rep = connected_sum_check(rp3, rp3, cs, s3, data(r));
                if (!rep.equal)
                    return "Z(RP3#RP3) Z(S3) != Z(RP3)^2 at r=" + std::to_string(r) +
                           " on the " + std::to_string(cs.tet_count()) +
                           "-tetrahedron form";
            }
        }
        return std::string();
    });

    if (failures == 0) {
        std::printf("all 9 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
