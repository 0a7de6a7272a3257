#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tvrt/triangulation.hpp"

namespace tvrt {

enum class PachnerKind { kTwoThree, kThreeTwo, kOneFour, kFourOne };

inline const char* pachner_kind_name(PachnerKind k) {
    switch (k) {
        case PachnerKind::kTwoThree: return "2-3";
        case PachnerKind::kThreeTwo: return "3-2";
        case PachnerKind::kOneFour: return "1-4";
        case PachnerKind::kFourOne: return "4-1";
    }
    return "?";
}

namespace detail {

// boundary face of the replaced region: old slot, new slot, and the label
// map from old tetrahedron labels to new tetrahedron locals
struct BoundaryFace {
    int old_tet, old_face;
    int new_tet, new_face;
    Perm4 label_map;
};

inline Triangulation rebuild(const Triangulation& tri, const std::vector<int>& removed,
                             int added_count,
                             const std::vector<std::array<std::optional<Gluing>, 4>>& added_gluings,
                             const std::vector<BoundaryFace>& boundary) {
    const int n_old = tri.tet_count();
    std::vector<int> remap(static_cast<std::size_t>(n_old), -1);
    int next = 0;
    for (int t = 0; t < n_old; ++t) {
        bool gone = false;
        for (int r : removed) gone = gone || (r == t);
        if (!gone) remap[static_cast<std::size_t>(t)] = next++;
    }
    const int base = next;
    const int n_new = base + added_count;
    std::vector<std::array<std::optional<Gluing>, 4>> G(static_cast<std::size_t>(n_new));

    auto is_removed = [&](int t) { return remap[static_cast<std::size_t>(t)] < 0; };

    for (int t = 0; t < n_old; ++t) {
        if (is_removed(t)) continue;
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (is_removed(g.tet)) continue;  // filled in by boundary processing
            G[static_cast<std::size_t>(remap[static_cast<std::size_t>(t)])][static_cast<std::size_t>(f)] =
                Gluing{remap[static_cast<std::size_t>(g.tet)], g.face, g.perm};
        }
    }
    // internal gluings among the added tetrahedra (already in new local ids)
    for (int k = 0; k < added_count; ++k)
        for (int f = 0; f < 4; ++f)
            if (added_gluings[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)]) {
                Gluing g = *added_gluings[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)];
                g.tet += base;
                G[static_cast<std::size_t>(base + k)][static_cast<std::size_t>(f)] = g;
            }

    auto locate_boundary = [&](int t, int f) -> const BoundaryFace* {
        for (const auto& b : boundary)
            if (b.old_tet == t && b.old_face == f) return &b;
        return nullptr;
    };
    for (const auto& b : boundary) {
        std::size_t nt = static_cast<std::size_t>(base + b.new_tet);
        std::size_t nf = static_cast<std::size_t>(b.new_face);
        if (G[nt][nf]) continue;  // partner already handled it
        const Gluing& old = tri.gluing(b.old_tet, b.old_face);
        if (const BoundaryFace* pb = locate_boundary(old.tet, old.face)) {
            Perm4 p = b.label_map.inverse().then(old.perm).then(pb->label_map);
            G[nt][nf] = Gluing{base + pb->new_tet, pb->new_face, p};
            G[static_cast<std::size_t>(base + pb->new_tet)][static_cast<std::size_t>(pb->new_face)] =
                Gluing{static_cast<int>(nt), static_cast<int>(nf), p.inverse()};
        } else {
            Perm4 p = b.label_map.inverse().then(old.perm);
            int target = remap[static_cast<std::size_t>(old.tet)];
            G[nt][nf] = Gluing{target, old.face, p};
            G[static_cast<std::size_t>(target)][static_cast<std::size_t>(old.face)] =
                Gluing{static_cast<int>(nt), static_cast<int>(nf), p.inverse()};
        }
    }
    try {
        return Triangulation::from_gluings(n_new, std::move(G));
    } catch (const ValidationError& e) {
        throw MoveRejectedError(std::string("move produced an invalid gluing table: ") + e.what());
    }
}

}  // namespace detail

// Replace two distinct tetrahedra sharing the given face by three around a
// new edge.
inline Triangulation pachner_2_3(const Triangulation& tri, int tet, int face) {
    if (tet < 0 || tet >= tri.tet_count() || face < 0 || face > 3)
        throw MoveRejectedError("2-3: no such face");
    const Gluing& g01 = tri.gluing(tet, face);
    const int t0 = tet, f0 = face, t1 = g01.tet, f1 = g01.face;
    const Perm4 pi = g01.perm;
    if (t1 == t0) throw MoveRejectedError("2-3: both sides of the face lie in one tetrahedron");

    std::array<int, 3> eq{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f0) eq[static_cast<std::size_t>(k++)] = v;

    // new tets N_k = (P, Q, eq[k], eq[k+1]) with locals (0,1,2,3)
    std::vector<std::array<std::optional<Gluing>, 4>> added(3);
    const Perm4 flip23 = Perm4::from_array({0, 1, 3, 2});
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        added[static_cast<std::size_t>(i)][2] = Gluing{j, 3, flip23};
        added[static_cast<std::size_t>(j)][3] = Gluing{i, 2, flip23};
    }

    std::vector<detail::BoundaryFace> boundary;
    for (int i = 0; i < 3; ++i) {
        int u = eq[static_cast<std::size_t>(i)], v = eq[static_cast<std::size_t>((i + 1) % 3)],
            w = eq[static_cast<std::size_t>((i + 2) % 3)];
        Perm4 lam0;  // t0 labels -> N_i locals
        lam0.img[static_cast<std::size_t>(f0)] = 0;
        lam0.img[static_cast<std::size_t>(w)] = 1;
        lam0.img[static_cast<std::size_t>(u)] = 2;
        lam0.img[static_cast<std::size_t>(v)] = 3;
        boundary.push_back({t0, w, i, 1, lam0});
        Perm4 lam1;  // t1 labels -> N_i locals
        lam1.img[static_cast<std::size_t>(f1)] = 1;
        lam1.img[static_cast<std::size_t>(pi(w))] = 0;
        lam1.img[static_cast<std::size_t>(pi(u))] = 2;
        lam1.img[static_cast<std::size_t>(pi(v))] = 3;
        boundary.push_back({t1, pi(w), i, 0, lam1});
    }
    return detail::rebuild(tri, {t0, t1}, 3, added, boundary);
}

// Replace the three distinct tetrahedra around a degree-3 edge by two glued
// along the equatorial triangle.
inline Triangulation pachner_3_2(const Triangulation& tri, int edge_class) {
    const auto& edges = tri.skeleton().edges;
    if (edge_class < 0 || edge_class >= static_cast<int>(edges.size()))
        throw MoveRejectedError("3-2: no such edge");
    const EdgeClass& ec = edges[static_cast<std::size_t>(edge_class)];
    if (ec.degree() != 3) throw MoveRejectedError("3-2: edge degree is not 3");

    struct Ring {
        int tet, u, v, enter, exit;
    };
    std::array<Ring, 3> ring{};
    auto [st, ss] = ec.slots.front();
    int ct = st, cu = kEdgeVerts[ss][0], cv = kEdgeVerts[ss][1];
    std::array<int, 2> cand{};
    int k = 0;
    for (int f = 0; f < 4; ++f)
        if (f != cu && f != cv) cand[static_cast<std::size_t>(k++)] = f;
    int enter = cand[1], exit = cand[0];
    for (int i = 0; i < 3; ++i) {
        ring[static_cast<std::size_t>(i)] = {ct, cu, cv, enter, exit};
        const Gluing& g = tri.gluing(ct, exit);
        int nu = g.perm(cu), nv = g.perm(cv), nenter = g.face;
        int nexit = 6 - nu - nv - nenter;
        ct = g.tet;
        cu = nu;
        cv = nv;
        enter = nenter;
        exit = nexit;
    }
    if (ct != st || cu != kEdgeVerts[ss][0] || cv != kEdgeVerts[ss][1])
        throw MoveRejectedError("3-2: edge ring does not close after three steps");
    if (ring[0].tet == ring[1].tet || ring[1].tet == ring[2].tet || ring[0].tet == ring[2].tet)
        throw MoveRejectedError("3-2: tetrahedra around the edge are not distinct");

    // new tets: tP (locals 0=P,1=b0,2=b1,3=b2) and tQ (0=Q,1..3 same)
    std::vector<std::array<std::optional<Gluing>, 4>> added(2);
    added[0][0] = Gluing{1, 0, Perm4::identity()};
    added[1][0] = Gluing{0, 0, Perm4::identity()};

    std::vector<detail::BoundaryFace> boundary;
    for (int i = 0; i < 3; ++i) {
        const Ring& R = ring[static_cast<std::size_t>(i)];
        int bi = 1 + i;                 // local of b_i
        int bprev = 1 + (i + 2) % 3;    // local of b_{i-1}
        int bmiss = 1 + (i + 1) % 3;    // local of b_{i+1}, the omitted one
        Perm4 lamP;                     // T_i labels -> tP locals
        lamP.img[static_cast<std::size_t>(R.u)] = 0;
        lamP.img[static_cast<std::size_t>(R.enter)] = static_cast<std::uint8_t>(bi);
        lamP.img[static_cast<std::size_t>(R.exit)] = static_cast<std::uint8_t>(bprev);
        lamP.img[static_cast<std::size_t>(R.v)] = static_cast<std::uint8_t>(bmiss);
        boundary.push_back({R.tet, R.v, 0, bmiss, lamP});
        Perm4 lamQ;  // T_i labels -> tQ locals
        lamQ.img[static_cast<std::size_t>(R.v)] = 0;
        lamQ.img[static_cast<std::size_t>(R.enter)] = static_cast<std::uint8_t>(bi);
        lamQ.img[static_cast<std::size_t>(R.exit)] = static_cast<std::uint8_t>(bprev);
        lamQ.img[static_cast<std::size_t>(R.u)] = static_cast<std::uint8_t>(bmiss);
        boundary.push_back({R.tet, R.u, 1, bmiss, lamQ});
    }
    return detail::rebuild(tri, {ring[0].tet, ring[1].tet, ring[2].tet}, 2, added, boundary);
}

// Cone a tetrahedron from an interior point: one tetrahedron becomes four.
inline Triangulation pachner_1_4(const Triangulation& tri, int tet) {
    if (tet < 0 || tet >= tri.tet_count()) throw MoveRejectedError("1-4: no such tetrahedron");

    // K_i covers face i of the old tet; locals keep the old labels except
    // that the new cone point takes slot i
    std::vector<std::array<std::optional<Gluing>, 4>> added(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            std::array<int, 4> tr{0, 1, 2, 3};
            std::swap(tr[static_cast<std::size_t>(i)], tr[static_cast<std::size_t>(j)]);
            added[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Gluing{j, i, Perm4::from_array(tr)};
        }
    std::vector<detail::BoundaryFace> boundary;
    for (int i = 0; i < 4; ++i)
        boundary.push_back({tet, i, i, i, Perm4::identity()});
    return detail::rebuild(tri, {tet}, 4, added, boundary);
}

// Collapse the star of a degree-4 interior vertex back to one tetrahedron.
inline Triangulation pachner_4_1(const Triangulation& tri, int vertex_class) {
    const auto& verts = tri.skeleton().vertices;
    if (vertex_class < 0 || vertex_class >= static_cast<int>(verts.size()))
        throw MoveRejectedError("4-1: no such vertex");
    const VertexClass& vc = verts[static_cast<std::size_t>(vertex_class)];
    if (vc.degree() != 4) throw MoveRejectedError("4-1: vertex degree is not 4");
    std::array<int, 4> tets{}, o_slot{};
    for (int i = 0; i < 4; ++i) {
        tets[static_cast<std::size_t>(i)] = vc.slots[static_cast<std::size_t>(i)].first;
        o_slot[static_cast<std::size_t>(i)] = vc.slots[static_cast<std::size_t>(i)].second;
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (tets[static_cast<std::size_t>(i)] == tets[static_cast<std::size_t>(j)])
                throw MoveRejectedError("4-1: star tetrahedra are not distinct");

    // f_ij = face of tet_i shared with tet_j through the cone point
    std::array<std::array<int, 4>, 4> fij{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            int found = -1;
            for (int f = 0; f < 4; ++f) {
                if (f == o_slot[static_cast<std::size_t>(i)]) continue;
                const Gluing& g = tri.gluing(tets[static_cast<std::size_t>(i)], f);
                if (g.tet == tets[static_cast<std::size_t>(j)] &&
                    g.perm(o_slot[static_cast<std::size_t>(i)]) == o_slot[static_cast<std::size_t>(j)]) {
                    if (found >= 0) throw MoveRejectedError("4-1: star is not simple");
                    found = f;
                }
            }
            if (found < 0) throw MoveRejectedError("4-1: star tetrahedra do not pairwise meet");
            fij[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = found;
        }

    // the restored tetrahedron U: vertex j is the corner missing from tet_j;
    // label map of tet_j: cone point -> j, corner k -> f_jk
    std::vector<std::array<std::optional<Gluing>, 4>> added(1);
    std::vector<detail::BoundaryFace> boundary;
    for (int j = 0; j < 4; ++j) {
        Perm4 lam;
        lam.img[static_cast<std::size_t>(o_slot[static_cast<std::size_t>(j)])] =
            static_cast<std::uint8_t>(j);
        for (int kk = 0; kk < 4; ++kk) {
            if (kk == j) continue;
            lam.img[static_cast<std::size_t>(fij[static_cast<std::size_t>(j)][static_cast<std::size_t>(kk)])] =
                static_cast<std::uint8_t>(kk);
        }
        boundary.push_back({tets[static_cast<std::size_t>(j)],
                            o_slot[static_cast<std::size_t>(j)], 0, j, lam});
    }
    return detail::rebuild(tri, {tets[0], tets[1], tets[2], tets[3]}, 1, added, boundary);
}

inline Triangulation pachner_move(const Triangulation& tri, PachnerKind kind, int a, int b = -1) {
    switch (kind) {
        case PachnerKind::kTwoThree: return pachner_2_3(tri, a, b);
        case PachnerKind::kThreeTwo: return pachner_3_2(tri, a);
        case PachnerKind::kOneFour: return pachner_1_4(tri, a);
        case PachnerKind::kFourOne: return pachner_4_1(tri, a);
    }
    throw DomainError("pachner_move: unknown kind");
}

// candidate locations; applying one may still reject in degenerate cases
struct PachnerCandidate {
    PachnerKind kind;
    int a, b;
};

inline std::vector<PachnerCandidate> pachner_candidates(const Triangulation& tri) {
    std::vector<PachnerCandidate> out;
    for (int t = 0; t < tri.tet_count(); ++t) {
        out.push_back({PachnerKind::kOneFour, t, -1});
        for (int f = 0; f < 4; ++f)
            if (tri.gluing(t, f).tet != t) out.push_back({PachnerKind::kTwoThree, t, f});
    }
    const Skeleton& sk = tri.skeleton();
    for (std::size_t e = 0; e < sk.edges.size(); ++e) {
        const auto& ec = sk.edges[e];
        if (ec.degree() == 3 && ec.slots[0].first != ec.slots[1].first &&
            ec.slots[1].first != ec.slots[2].first && ec.slots[0].first != ec.slots[2].first)
            out.push_back({PachnerKind::kThreeTwo, static_cast<int>(e), -1});
    }
    for (std::size_t v = 0; v < sk.vertices.size(); ++v)
        if (sk.vertices[v].degree() == 4)
            out.push_back({PachnerKind::kFourOne, static_cast<int>(v), -1});
    return out;
}

}  // namespace tvrt
