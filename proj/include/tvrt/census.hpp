#pragma once

#include <functional>
#include <random>
#include <map>
#include <string>
#include <vector>

#include "tvrt/homology.hpp"
#include "tvrt/pachner.hpp"
#include "tvrt/triangulation.hpp"

namespace tvrt {

// Double of a single tetrahedron: the standard 2-tetrahedron 3-sphere.
inline Triangulation s3_two_tet() {
    std::vector<std::array<std::optional<Gluing>, 4>> g(2);
    for (int f = 0; f < 4; ++f) {
        g[0][static_cast<std::size_t>(f)] = Gluing{1, f, Perm4::identity()};
        g[1][static_cast<std::size_t>(f)] = Gluing{0, f, Perm4::identity()};
    }
    return Triangulation::from_gluings(2, std::move(g));
}

// One-tetrahedron 3-sphere: faces 0,1 folded by the vertex swap (01) and
// faces 2,3 by (23). First entry with trivial H_1 in the deterministic
// one-tetrahedron enumeration (see enumerate_closed, pinned by tests).
inline Triangulation s3_one_tet() {
    std::vector<std::array<std::optional<Gluing>, 4>> g(1);
    g[0][0] = Gluing{0, 1, Perm4::from_array({1, 0, 2, 3})};
    g[0][1] = Gluing{0, 0, Perm4::from_array({1, 0, 2, 3})};
    g[0][2] = Gluing{0, 3, Perm4::from_array({0, 1, 3, 2})};
    g[0][3] = Gluing{0, 2, Perm4::from_array({0, 1, 3, 2})};
    return Triangulation::from_gluings(1, std::move(g));
}

// Two-tetrahedron S^2 x S^1: first entry with H_1 = Z in the deterministic
// two-tetrahedron enumeration (pinned by tests).
inline Triangulation s2_x_s1() {
    std::vector<std::array<std::optional<Gluing>, 4>> g(2);
    g[0][0] = Gluing{0, 1, Perm4::from_array({1, 2, 3, 0})};
    g[0][1] = Gluing{0, 0, Perm4::from_array({3, 0, 1, 2})};
    g[0][2] = Gluing{1, 0, Perm4::from_array({1, 2, 0, 3})};
    g[0][3] = Gluing{1, 3, Perm4::from_array({1, 2, 0, 3})};
    g[1][0] = Gluing{0, 2, Perm4::from_array({2, 0, 1, 3})};
    g[1][1] = Gluing{1, 2, Perm4::from_array({3, 2, 0, 1})};
    g[1][2] = Gluing{1, 1, Perm4::from_array({2, 3, 1, 0})};
    g[1][3] = Gluing{0, 3, Perm4::from_array({2, 0, 1, 3})};
    return Triangulation::from_gluings(2, std::move(g));
}

// Lens space L(p,q) as the classical bipyramid model: p tetrahedra
// (N, S, v_i, v_{i+1}) around the polar axis, locals (0=N, 1=S, 2=v_i,
// 3=v_{i+1}); the upper boundary sector i is carried to the lower sector
// i+q by the pole swap. Requires p >= 2 and gcd(p,q) = 1.
inline Triangulation lens_space(int p, int q) {
    if (p < 2) throw DomainError("lens_space: p must be at least 2");
    q = ((q % p) + p) % p;
    std::vector<std::array<std::optional<Gluing>, 4>> g(static_cast<std::size_t>(p));
    const Perm4 ring = Perm4::from_array({0, 1, 3, 2});
    const Perm4 fold = Perm4::from_array({1, 0, 2, 3});
    for (int i = 0; i < p; ++i) {
        int next = (i + 1) % p, prev = (i + p - 1) % p;
        g[static_cast<std::size_t>(i)][2] = Gluing{next, 3, ring};
        g[static_cast<std::size_t>(i)][3] = Gluing{prev, 2, ring};
        g[static_cast<std::size_t>(i)][1] = Gluing{(i + q) % p, 0, fold};
        g[static_cast<std::size_t>(i)][0] = Gluing{(i + p - q) % p, 1, fold};
    }
    return Triangulation::from_gluings(p, std::move(g));
}

namespace detail {

// Gluing table from a list of tetrahedra on global vertex ids (all four ids
// distinct within each tet, and no two simplices on the same vertex set).
// Interior faces pair up by vertex set; boundary faces are glued via the
// supplied vertex involution.
inline Triangulation from_global_tets(const std::vector<std::array<int, 4>>& tets,
                                      const std::function<int(int)>& boundary_map) {
    const int n = static_cast<int>(tets.size());
    auto face_key = [&](int t, int f) {
        std::array<int, 3> k{};
        int w = 0;
        for (int i = 0; i < 4; ++i)
            if (i != f) k[static_cast<std::size_t>(w++)] = tets[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)];
        std::sort(k.begin(), k.end());
        return k;
    };
    std::map<std::array<int, 3>, std::vector<std::pair<int, int>>> faces;
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) faces[face_key(t, f)].push_back({t, f});

    auto local_of = [&](int t, int global) {
        for (int i = 0; i < 4; ++i)
            if (tets[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] == global) return i;
        throw ValidationError("from_global_tets: vertex not in tetrahedron");
    };

    std::vector<std::array<std::optional<Gluing>, 4>> g(static_cast<std::size_t>(n));
    for (const auto& [key, slots] : faces) {
        if (slots.size() == 2) {
            auto [t0, f0] = slots[0];
            auto [t1, f1] = slots[1];
            Perm4 perm;
            for (int i = 0; i < 4; ++i)
                perm.img[static_cast<std::size_t>(i)] =
                    i == f0 ? static_cast<std::uint8_t>(f1)
                            : static_cast<std::uint8_t>(local_of(
                                  t1, tets[static_cast<std::size_t>(t0)][static_cast<std::size_t>(i)]));
            g[static_cast<std::size_t>(t0)][static_cast<std::size_t>(f0)] = Gluing{t1, f1, perm};
            g[static_cast<std::size_t>(t1)][static_cast<std::size_t>(f1)] =
                Gluing{t0, f0, perm.inverse()};
        } else if (slots.size() == 1) {
            auto [t0, f0] = slots[0];
            if (g[static_cast<std::size_t>(t0)][static_cast<std::size_t>(f0)]) continue;
            std::array<int, 3> target{};
            for (int i = 0; i < 3; ++i) target[static_cast<std::size_t>(i)] = boundary_map(key[static_cast<std::size_t>(i)]);
            std::sort(target.begin(), target.end());
            auto it = faces.find(target);
            if (it == faces.end() || it->second.size() != 1)
                throw ValidationError("from_global_tets: boundary involution does not map faces to faces");
            auto [t1, f1] = it->second[0];
            Perm4 perm;
            for (int i = 0; i < 4; ++i)
                perm.img[static_cast<std::size_t>(i)] =
                    i == f0 ? static_cast<std::uint8_t>(f1)
                            : static_cast<std::uint8_t>(local_of(
                                  t1, boundary_map(tets[static_cast<std::size_t>(t0)][static_cast<std::size_t>(i)])));
            g[static_cast<std::size_t>(t0)][static_cast<std::size_t>(f0)] = Gluing{t1, f1, perm};
            g[static_cast<std::size_t>(t1)][static_cast<std::size_t>(f1)] =
                Gluing{t0, f0, perm.inverse()};
        } else {
            throw ValidationError("from_global_tets: face shared by more than two tetrahedra");
        }
    }
    return Triangulation::from_gluings(n, std::move(g));
}

}  // namespace detail

// RP^3 # RP^3: the product of the octahedral 2-sphere with an interval, with
// each end sphere identified by its antipodal map. Each end contributes a
// twisted I-bundle over RP^2 (a punctured RP^3), so the double is the
// connected sum. 24 tetrahedra before simplification.
inline Triangulation rp3_connected_sum_rp3_raw() {
    // octahedron vertices 1..6 with antipode k <-> 7-k
    auto antipode = [](int k) { return 7 - k; };
    std::vector<std::array<int, 3>> oct_faces;
    for (int s1 : {1, 6})
        for (int s2 : {2, 5})
            for (int s3 : {3, 4}) oct_faces.push_back({s1, s2, s3});

    auto vid = [](int k, int level) { return (k - 1) + 6 * level; };
    std::vector<std::array<int, 4>> tets;
    for (auto f : oct_faces) {
        std::sort(f.begin(), f.end());
        int a = f[0], b = f[1], c = f[2];
        tets.push_back({vid(a, 0), vid(b, 0), vid(c, 0), vid(c, 1)});
        tets.push_back({vid(a, 0), vid(b, 0), vid(b, 1), vid(c, 1)});
        tets.push_back({vid(a, 0), vid(a, 1), vid(b, 1), vid(c, 1)});
    }
    auto boundary_map = [&](int v) {
        int level = v / 6, k = v % 6 + 1;
        return vid(antipode(k), level);
    };
    return detail::from_global_tets(tets, boundary_map);
}

// greedy monotone simplification; vertex collapses first, then edge moves
inline Triangulation simplify_monotone(Triangulation tri) {
    bool progress = true;
    while (progress) {
        progress = false;
        auto cands = pachner_candidates(tri);
        for (PachnerKind kind : {PachnerKind::kFourOne, PachnerKind::kThreeTwo}) {
            for (const auto& cand : cands) {
                if (cand.kind != kind) continue;
                try {
                    tri = pachner_move(tri, cand.kind, cand.a, cand.b);
                    progress = true;
                    break;
                } catch (const MoveRejectedError&) {
                }
            }
            if (progress) break;
        }
    }
    return tri;
}


// random 2-3 stirring alternated with monotone collapse; deterministic for
// a fixed seed, returns the smallest triangulation encountered
inline Triangulation simplify_random(Triangulation tri, std::uint32_t seed, int rounds) {
    std::mt19937 rng(seed);
    Triangulation best = tri;
    Triangulation cur = std::move(tri);
    for (int round = 0; round < rounds; ++round) {
        auto cands = pachner_candidates(cur);
        std::vector<PachnerCandidate> grow;
        for (const auto& c : cands)
            if (c.kind == PachnerKind::kTwoThree) grow.push_back(c);
        if (!grow.empty()) {
            const auto& c = grow[rng() % grow.size()];
            try {
                cur = pachner_move(cur, c.kind, c.a, c.b);
            } catch (const MoveRejectedError&) {
            }
        }
        cur = simplify_monotone(cur);
        if (cur.tet_count() < best.tet_count()) best = cur;
        if (cur.tet_count() > best.tet_count() + 6) cur = best;
    }
    return best;
}

// The bundled form: the raw quotient simplified to eight tetrahedra by the
// seeded walk simplify_random(raw, 1, 100); tests re-derive this table.
inline Triangulation rp3_connected_sum_rp3() {
    std::vector<std::array<std::optional<Gluing>, 4>> g(8);
    g[0][0] = Gluing{4, 1, Perm4::from_array({1, 3, 2, 0})};
    g[0][1] = Gluing{0, 2, Perm4::from_array({0, 2, 1, 3})};
    g[0][2] = Gluing{0, 1, Perm4::from_array({0, 2, 1, 3})};
    g[0][3] = Gluing{1, 0, Perm4::from_array({1, 3, 2, 0})};
    g[1][0] = Gluing{0, 3, Perm4::from_array({3, 0, 2, 1})};
    g[1][1] = Gluing{3, 2, Perm4::from_array({0, 2, 3, 1})};
    g[1][2] = Gluing{3, 1, Perm4::from_array({3, 2, 1, 0})};
    g[1][3] = Gluing{3, 3, Perm4::from_array({1, 2, 0, 3})};
    g[2][0] = Gluing{3, 0, Perm4::from_array({0, 1, 2, 3})};
    g[2][1] = Gluing{2, 3, Perm4::from_array({0, 3, 2, 1})};
    g[2][2] = Gluing{5, 2, Perm4::from_array({0, 1, 2, 3})};
    g[2][3] = Gluing{2, 1, Perm4::from_array({0, 3, 2, 1})};
    g[3][0] = Gluing{2, 0, Perm4::from_array({0, 1, 2, 3})};
    g[3][1] = Gluing{1, 2, Perm4::from_array({3, 2, 1, 0})};
    g[3][2] = Gluing{1, 1, Perm4::from_array({0, 3, 1, 2})};
    g[3][3] = Gluing{1, 3, Perm4::from_array({2, 0, 1, 3})};
    g[4][0] = Gluing{7, 1, Perm4::from_array({1, 0, 2, 3})};
    g[4][1] = Gluing{0, 0, Perm4::from_array({3, 0, 2, 1})};
    g[4][2] = Gluing{4, 3, Perm4::from_array({0, 1, 3, 2})};
    g[4][3] = Gluing{4, 2, Perm4::from_array({0, 1, 3, 2})};
    g[5][0] = Gluing{6, 1, Perm4::from_array({1, 3, 0, 2})};
    g[5][1] = Gluing{6, 2, Perm4::from_array({1, 2, 3, 0})};
    g[5][2] = Gluing{2, 2, Perm4::from_array({0, 1, 2, 3})};
    g[5][3] = Gluing{6, 3, Perm4::from_array({1, 0, 2, 3})};
    g[6][0] = Gluing{7, 0, Perm4::from_array({0, 1, 2, 3})};
    g[6][1] = Gluing{5, 0, Perm4::from_array({2, 0, 3, 1})};
    g[6][2] = Gluing{5, 1, Perm4::from_array({3, 0, 1, 2})};
    g[6][3] = Gluing{5, 3, Perm4::from_array({1, 0, 2, 3})};
    g[7][0] = Gluing{6, 0, Perm4::from_array({0, 1, 2, 3})};
    g[7][1] = Gluing{4, 0, Perm4::from_array({1, 0, 2, 3})};
    g[7][2] = Gluing{7, 3, Perm4::from_array({0, 1, 3, 2})};
    g[7][3] = Gluing{7, 2, Perm4::from_array({0, 1, 3, 2})};
    return Triangulation::from_gluings(8, std::move(g));
}

// Exhaustive enumeration of closed oriented triangulations with a fixed
// number of tetrahedra, in deterministic order. Used to locate the minimal
// census entries; the bundled tables are pinned in census() and re-derived
// by tests.
inline std::vector<Triangulation> enumerate_closed(int tet_count,
                                                   const std::function<bool(const Triangulation&)>& accept,
                                                   int limit) {
    std::vector<Triangulation> found;
    const int slots = 4 * tet_count;
    std::vector<int> partner(static_cast<std::size_t>(slots), -1);
    std::vector<int> perm_choice(static_cast<std::size_t>(slots), -1);

    // all 6 bijections between two faces, as images of the three non-face
    // vertices in increasing order
    static const int kThree[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

    std::function<void()> recurse = [&]() {
        if (static_cast<int>(found.size()) >= limit) return;
        int first = -1;
        for (int s = 0; s < slots; ++s)
            if (partner[static_cast<std::size_t>(s)] < 0) {
                first = s;
                break;
            }
        if (first < 0) {
            std::vector<std::array<std::optional<Gluing>, 4>> g(static_cast<std::size_t>(tet_count));
            for (int s = 0; s < slots; ++s) {
                int p = partner[static_cast<std::size_t>(s)];
                if (s > p) continue;
                int t0 = s / 4, f0 = s % 4, t1 = p / 4, f1 = p % 4;
                int choice = perm_choice[static_cast<std::size_t>(s)];
                std::array<int, 3> src{}, dst{};
                int w = 0;
                for (int v = 0; v < 4; ++v)
                    if (v != f0) src[static_cast<std::size_t>(w++)] = v;
                w = 0;
                for (int v = 0; v < 4; ++v)
                    if (v != f1) dst[static_cast<std::size_t>(w++)] = v;
                std::array<int, 4> img{};
                img[static_cast<std::size_t>(f0)] = f1;
                for (int i = 0; i < 3; ++i)
                    img[static_cast<std::size_t>(src[static_cast<std::size_t>(i)])] =
                        dst[static_cast<std::size_t>(kThree[choice][i])];
                Perm4 perm = Perm4::from_array(img);
                g[static_cast<std::size_t>(t0)][static_cast<std::size_t>(f0)] = Gluing{t1, f1, perm};
                g[static_cast<std::size_t>(t1)][static_cast<std::size_t>(f1)] =
                    Gluing{t0, f0, perm.inverse()};
            }
            try {
                Triangulation tri = Triangulation::from_gluings(tet_count, std::move(g));
                if (accept(tri)) found.push_back(std::move(tri));
            } catch (const ValidationError&) {
            }
            return;
        }
        for (int p = first + 1; p < slots; ++p) {
            if (partner[static_cast<std::size_t>(p)] >= 0) continue;
            partner[static_cast<std::size_t>(first)] = p;
            partner[static_cast<std::size_t>(p)] = first;
            for (int choice = 0; choice < 6; ++choice) {
                perm_choice[static_cast<std::size_t>(first)] = choice;
                recurse();
                if (static_cast<int>(found.size()) >= limit) break;
            }
            partner[static_cast<std::size_t>(first)] = -1;
            partner[static_cast<std::size_t>(p)] = -1;
        }
    };
    recurse();
    return found;
}

struct CensusEntry {
    std::string name;
    Triangulation triangulation;
    AbelianGroup expected_h1;
};

// The bundled closed-manifold census. Every entry is validated on
// construction and its homology is pinned by tests.
inline const std::vector<CensusEntry>& census() {
    static const std::vector<CensusEntry> entries = [] {
        std::vector<CensusEntry> out;
        out.push_back({"S3_2tet", s3_two_tet(), AbelianGroup::free(0)});
        out.push_back({"S3_1tet", s3_one_tet(), AbelianGroup::free(0)});
        out.push_back({"RP3", lens_space(2, 1), AbelianGroup::cyclic(2)});
        out.push_back({"L3_1", lens_space(3, 1), AbelianGroup::cyclic(3)});
        out.push_back({"L4_1", lens_space(4, 1), AbelianGroup::cyclic(4)});
        out.push_back({"L5_1", lens_space(5, 1), AbelianGroup::cyclic(5)});
        out.push_back({"S2xS1", s2_x_s1(), AbelianGroup::cyclic(0)});
        return out;
    }();
    return entries;
}

inline const Triangulation& census_entry(const std::string& name) {
    for (const auto& e : census())
        if (e.name == name) return e.triangulation;
    throw DomainError("census: no entry named " + name);
}

}  // namespace tvrt
