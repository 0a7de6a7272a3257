#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <thread>
#include <vector>

#include "tvrt/modular_data.hpp"
#include "tvrt/triangulation.hpp"

namespace tvrt {

// Weight of one colored tetrahedron: the normalized 6j symbol of the six
// edge colors given in slot order (01),(02),(03),(12),(13),(23).
inline const CycNumber& tetra_weight(const std::array<Color, 6>& slot_colors,
                                     const ModularData& md) {
    // slots (01),(12),(02),(23),(03),(13) are the 6j arguments (a,b,e,c,d,f)
    return md.six_j(slot_colors[0], slot_colors[3], slot_colors[1], slot_colors[5],
                    slot_colors[2], slot_colors[4]);
}

enum class TvMethod { kBrute, kPruned };

struct TvOptions {
    TvMethod method = TvMethod::kPruned;
    int threads = 1;
    std::uint64_t ceiling = 100000000;  // admissible-coloring visits
};

struct StateSumResult {
    CycNumber value;
    std::complex<double> numeric;
    std::uint64_t colorings_total = 0;       // (r-1)^E, saturated at uint64 max
    std::uint64_t colorings_admissible = 0;  // colorings with nonzero support
    double wall_seconds = 0.0;
};

namespace detail {

// static contraction data: edge order plus the faces and tets that become
// fully colored at each step
struct TvPlan {
    int edge_count = 0;
    std::vector<int> order;                          // edge class visited at depth k
    std::vector<std::vector<std::array<int, 3>>> faces_at;  // edge ids per completed face
    std::vector<std::vector<std::array<int, 6>>> tets_at;   // edge ids per completed tet, 6j order
    int vertex_count = 0;
};

inline TvPlan make_tv_plan(const Triangulation& tri) {
    const Skeleton& sk = tri.skeleton();
    const int E = static_cast<int>(sk.edges.size());
    TvPlan plan;
    plan.edge_count = E;
    plan.vertex_count = static_cast<int>(sk.vertices.size());

    // face and tet edge-id lists
    std::vector<std::array<int, 3>> faces;
    for (const auto& f : sk.faces) {
        auto [t, fi] = f.front;
        auto slots = Skeleton::face_edge_slots(fi);
        faces.push_back({sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(slots[0])],
                         sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(slots[1])],
                         sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(slots[2])]});
    }
    // 6j argument order (a,b,e,c,d,f) reads edge slots (01),(12),(02),(23),(03),(13)
    static constexpr int kArgSlot[6] = {0, 3, 1, 5, 2, 4};
    std::vector<std::array<int, 6>> tets;
    for (int t = 0; t < tri.tet_count(); ++t) {
        std::array<int, 6> ids{};
        for (int a = 0; a < 6; ++a)
            ids[static_cast<std::size_t>(a)] =
                sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(kArgSlot[a])];
        tets.push_back(ids);
    }

    // greedy order: always pick the edge that completes the most faces, then
    // the most tets, then the lowest id
    std::vector<bool> placed(static_cast<std::size_t>(E), false);
    std::vector<bool> face_done(faces.size(), false), tet_done(tets.size(), false);
    plan.faces_at.resize(static_cast<std::size_t>(E));
    plan.tets_at.resize(static_cast<std::size_t>(E));
    for (int k = 0; k < E; ++k) {
        int best = -1, best_faces = -1, best_tets = -1;
        for (int e = 0; e < E; ++e) {
            if (placed[static_cast<std::size_t>(e)]) continue;
            int nf = 0, nt = 0;
            for (std::size_t f = 0; f < faces.size(); ++f) {
                if (face_done[f]) continue;
                bool complete = true, uses = false;
                for (int j = 0; j < 3; ++j) {
                    int ee = faces[f][static_cast<std::size_t>(j)];
                    if (ee == e) uses = true;
                    else if (!placed[static_cast<std::size_t>(ee)]) complete = false;
                }
                if (uses && complete) ++nf;
            }
            for (std::size_t t = 0; t < tets.size(); ++t) {
                if (tet_done[t]) continue;
                bool complete = true, uses = false;
                for (int j = 0; j < 6; ++j) {
                    int ee = tets[t][static_cast<std::size_t>(j)];
                    if (ee == e) uses = true;
                    else if (!placed[static_cast<std::size_t>(ee)]) complete = false;
                }
                if (uses && complete) ++nt;
            }
            if (nf > best_faces || (nf == best_faces && nt > best_tets)) {
                best = e;
                best_faces = nf;
                best_tets = nt;
            }
        }
        plan.order.push_back(best);
        placed[static_cast<std::size_t>(best)] = true;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (face_done[f]) continue;
            bool complete = true;
            for (int j = 0; j < 3; ++j)
                complete = complete && placed[static_cast<std::size_t>(faces[f][static_cast<std::size_t>(j)])];
            if (complete) {
                face_done[f] = true;
                plan.faces_at[static_cast<std::size_t>(k)].push_back(faces[f]);
            }
        }
        for (std::size_t t = 0; t < tets.size(); ++t) {
            if (tet_done[t]) continue;
            bool complete = true;
            for (int j = 0; j < 6; ++j)
                complete = complete && placed[static_cast<std::size_t>(tets[t][static_cast<std::size_t>(j)])];
            if (complete) {
                tet_done[t] = true;
                plan.tets_at[static_cast<std::size_t>(k)].push_back(tets[t]);
            }
        }
    }
    return plan;
}

struct TvWorker {
    const TvPlan& plan;
    const ModularData& md;
    std::uint64_t ceiling;
    std::atomic<std::uint64_t>& visits;
    std::vector<Color> coloring;
    CycNumber acc;
    std::uint64_t admissible = 0;
    bool overflowed = false;

    TvWorker(const TvPlan& p, const ModularData& m, std::uint64_t ceil,
             std::atomic<std::uint64_t>& v)
        : plan(p), md(m), ceiling(ceil), visits(v),
          coloring(static_cast<std::size_t>(p.edge_count), 0),
          acc(CycNumber::zero(m.root_order())) {}

    void run(int depth, const CycNumber& prod) {
        if (overflowed) return;
        if (depth == plan.edge_count) {
            acc += prod;
            ++admissible;
            return;
        }
        const int edge = plan.order[static_cast<std::size_t>(depth)];
        for (Color c = 0; c < md.color_count(); ++c) {
            if (visits.fetch_add(1, std::memory_order_relaxed) >= ceiling) {
                overflowed = true;
                return;
            }
            coloring[static_cast<std::size_t>(edge)] = c;
            CycNumber next = prod * md.qdim(c);
            bool dead = false;
            for (const auto& f : plan.faces_at[static_cast<std::size_t>(depth)]) {
                Color a = coloring[static_cast<std::size_t>(f[0])];
                Color b = coloring[static_cast<std::size_t>(f[1])];
                Color cc = coloring[static_cast<std::size_t>(f[2])];
                if (!md.admissible(a, b, cc)) {
                    dead = true;
                    break;
                }
                next *= md.theta(a, b, cc);
            }
            if (dead) continue;
            for (const auto& t : plan.tets_at[static_cast<std::size_t>(depth)]) {
                const CycNumber& w =
                    md.six_j(coloring[static_cast<std::size_t>(t[0])], coloring[static_cast<std::size_t>(t[1])],
                             coloring[static_cast<std::size_t>(t[2])], coloring[static_cast<std::size_t>(t[3])],
                             coloring[static_cast<std::size_t>(t[4])], coloring[static_cast<std::size_t>(t[5])]);
                if (w.is_zero()) {
                    dead = true;
                    break;
                }
                next *= w;
            }
            if (dead) continue;
            run(depth + 1, next);
            if (overflowed) return;
        }
    }
};

}  // namespace detail

// Z(M) = omega^{-2V} * sum over admissible edge colorings of
//        prod_edges qdim * prod_faces theta * prod_tets six_j
//
// The face factor pairs with the normalization of the 6j symbol: together
// they reproduce the state sum whose tetrahedron weight is the tet net over
// the square roots of its four face thetas.
inline StateSumResult tv_state_sum(const Triangulation& tri, const ModularData& md,
                                   const TvOptions& opts = {}) {
    auto t_start = std::chrono::steady_clock::now();
    if (!md.sixj_ready()) throw Error("tv_state_sum: modular data built without 6j table");
    detail::TvPlan plan = detail::make_tv_plan(tri);
    const int E = plan.edge_count;
    const int nc = md.color_count();

    double total_d = std::pow(static_cast<double>(nc), E);
    StateSumResult res;
    res.colorings_total = total_d > 1.8e19 ? UINT64_MAX : static_cast<std::uint64_t>(total_d);

    if (opts.method == TvMethod::kBrute && total_d > static_cast<double>(opts.ceiling))
        throw ResourceLimitError("tv_state_sum: brute enumeration of " +
                                     std::to_string(total_d) +
                                     " colorings exceeds the ceiling of " +
                                     std::to_string(opts.ceiling),
                                 total_d);

    std::atomic<std::uint64_t> visits{0};
    CycNumber sum = CycNumber::zero(md.root_order());
    std::uint64_t admissible = 0;

    if (opts.method == TvMethod::kBrute) {
        // plain odometer over all colorings
        std::vector<Color> col(static_cast<std::size_t>(E), 0);
        const Skeleton& sk = tri.skeleton();
        bool running = E > 0;
        while (running) {
            bool ok = true;
            for (const auto& f : sk.faces) {
                auto [t, fi] = f.front;
                auto slots = Skeleton::face_edge_slots(fi);
                Color a = col[static_cast<std::size_t>(sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(slots[0])])];
                Color b = col[static_cast<std::size_t>(sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(slots[1])])];
                Color c = col[static_cast<std::size_t>(sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(slots[2])])];
                if (!md.admissible(a, b, c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                CycNumber term = CycNumber::from_int(md.root_order(), 1);
                for (int e = 0; e < E; ++e) term *= md.qdim(col[static_cast<std::size_t>(e)]);
                for (const auto& f : sk.faces) {
                    auto [t, fi] = f.front;
                    auto slots = Skeleton::face_edge_slots(fi);
                    term *= md.theta(
                        col[static_cast<std::size_t>(sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(slots[0])])],
                        col[static_cast<std::size_t>(sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(slots[1])])],
                        col[static_cast<std::size_t>(sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(slots[2])])]);
                }
                static constexpr int kArgSlot[6] = {0, 3, 1, 5, 2, 4};
                for (int t = 0; t < tri.tet_count(); ++t) {
                    std::array<Color, 6> a{};
                    for (int j = 0; j < 6; ++j)
                        a[static_cast<std::size_t>(j)] =
                            col[static_cast<std::size_t>(sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(kArgSlot[j])])];
                    term *= md.six_j(a[0], a[1], a[2], a[3], a[4], a[5]);
                }
                if (!term.is_zero()) ++admissible;
                sum += term;
            }
            // advance
            int pos = 0;
            while (pos < E) {
                if (++col[static_cast<std::size_t>(pos)] < nc) break;
                col[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            running = pos < E;
        }
    } else {
        const int nthreads = std::max(1, std::min(opts.threads, nc));
        std::vector<detail::TvWorker> workers;
        workers.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) workers.emplace_back(plan, md, opts.ceiling, visits);
        if (nthreads == 1) {
            // seed depth 0 inline
            workers[0].run(0, CycNumber::from_int(md.root_order(), 1));
        } else {
            // partition the first edge's colors across workers
            std::vector<std::thread> pool;
            for (int i = 0; i < nthreads; ++i) {
                pool.emplace_back([&, i] {
                    detail::TvWorker& w = workers[static_cast<std::size_t>(i)];
                    const int edge = plan.order[0];
                    for (Color c = i; c < nc; c += nthreads) {
                        if (w.visits.fetch_add(1, std::memory_order_relaxed) >= w.ceiling) {
                            w.overflowed = true;
                            return;
                        }
                        w.coloring[static_cast<std::size_t>(edge)] = c;
                        CycNumber next = CycNumber::from_int(md.root_order(), 1) * md.qdim(c);
                        bool dead = false;
                        for (const auto& f : plan.faces_at[0]) {
                            Color a = w.coloring[static_cast<std::size_t>(f[0])];
                            Color b = w.coloring[static_cast<std::size_t>(f[1])];
                            Color cc = w.coloring[static_cast<std::size_t>(f[2])];
                            if (!md.admissible(a, b, cc)) {
                                dead = true;
                                break;
                            }
                            next *= md.theta(a, b, cc);
                        }
                        for (const auto& t : plan.tets_at[0]) {
                            if (dead) break;
                            const CycNumber& wt = md.six_j(
                                w.coloring[static_cast<std::size_t>(t[0])], w.coloring[static_cast<std::size_t>(t[1])],
                                w.coloring[static_cast<std::size_t>(t[2])], w.coloring[static_cast<std::size_t>(t[3])],
                                w.coloring[static_cast<std::size_t>(t[4])], w.coloring[static_cast<std::size_t>(t[5])]);
                            if (wt.is_zero()) dead = true;
                            else next *= wt;
                        }
                        if (dead) continue;
                        w.run(1, next);
                        if (w.overflowed) return;
                    }
                });
            }
            for (auto& th : pool) th.join();
        }
        bool overflowed = false;
        for (auto& w : workers) {
            overflowed = overflowed || w.overflowed;
            sum += w.acc;
            admissible += w.admissible;
        }
        if (overflowed)
            throw ResourceLimitError(
                "tv_state_sum: admissible-coloring visit ceiling of " +
                    std::to_string(opts.ceiling) + " exceeded",
                static_cast<double>(visits.load()));
    }

    CycNumber norm = md.global_dim().inverse().pow(plan.vertex_count);
    res.value = norm * sum;
    res.numeric = res.value.to_complex();
    res.colorings_admissible = admissible;
    res.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return res;
}

struct ConnectedSumReport {
    CycNumber lhs;  // Z(M1 # M2) * Z(S^3)
    CycNumber rhs;  // Z(M1) * Z(M2)
    bool equal = false;
};

// factorization under connected sums: Z(M1 # M2) Z(S^3) = Z(M1) Z(M2)
inline ConnectedSumReport connected_sum_check(const Triangulation& t1, const Triangulation& t2,
                                              const Triangulation& t12,
                                              const Triangulation& sphere,
                                              const ModularData& md,
                                              const TvOptions& opts = {}) {
    ConnectedSumReport rep;
    rep.lhs = tv_state_sum(t12, md, opts).value * tv_state_sum(sphere, md, opts).value;
    rep.rhs = tv_state_sum(t1, md, opts).value * tv_state_sum(t2, md, opts).value;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace tvrt
