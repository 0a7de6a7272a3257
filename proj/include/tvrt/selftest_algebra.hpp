#pragma once

#include <array>
#include <random>
#include <vector>

#include "tvrt/modular_data.hpp"

namespace tvrt::selftest {

// Vertex permutations of the tetrahedron act on the six edge slots. Argument
// order is (a,b,e,c,d,f) for the edges ((01),(12),(02),(23),(03),(13)).
inline std::array<Color, 6> permute_sixj_args(const std::array<Color, 6>& args,
                                              const std::array<int, 4>& vperm) {
    static constexpr int kEdgeVerts[6][2] = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}, {1, 3}};
    auto edge_slot = [](int u, int v) {
        if (u > v) std::swap(u, v);
        for (int s = 0; s < 6; ++s)
            if (kEdgeVerts[s][0] == u && kEdgeVerts[s][1] == v) return s;
        return -1;
    };
    std::array<Color, 6> out{};
    for (int s = 0; s < 6; ++s) {
        int u = vperm[kEdgeVerts[s][0]], v = vperm[kEdgeVerts[s][1]];
        out[static_cast<std::size_t>(edge_slot(u, v))] = args[static_cast<std::size_t>(s)];
    }
    return out;
}

inline std::vector<std::array<int, 4>> all_vertex_permutations() {
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<std::array<int, 4>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// all 6-tuples whose four faces are admissible
inline std::vector<std::array<Color, 6>> admissible_sixj_tuples(const ModularData& md) {
    std::vector<std::array<Color, 6>> out;
    const int nc = md.color_count();
    for (Color a = 0; a < nc; ++a)
        for (Color b = 0; b < nc; ++b)
            for (Color e = 0; e < nc; ++e) {
                if (!md.admissible(a, b, e)) continue;
                for (Color c = 0; c < nc; ++c)
                    for (Color d = 0; d < nc; ++d) {
                        if (!md.admissible(c, d, e)) continue;
                        for (Color f = 0; f < nc; ++f)
                            if (md.admissible(a, d, f) && md.admissible(b, c, f))
                                out.push_back({a, b, e, c, d, f});
                    }
            }
    return out;
}

// exact check of all 24 tetrahedral symmetries on every admissible tuple;
// returns the number of violations
inline long check_tetrahedral_symmetry(const ModularData& md) {
    long bad = 0;
    auto perms = all_vertex_permutations();
    for (const auto& t : admissible_sixj_tuples(md)) {
        const CycNumber& ref = md.six_j(t[0], t[1], t[2], t[3], t[4], t[5]);
        for (const auto& p : perms) {
            auto s = permute_sixj_args(t, p);
            if (md.six_j(s[0], s[1], s[2], s[3], s[4], s[5]) != ref) ++bad;
        }
    }
    return bad;
}

// Pentagon contract of the 2-3 move. Boundary data: shared face (x1,x2,x3),
// apex edges u1,u2,u3 to one apex and w1,w2,w3 to the other:
//
//   theta(x1,x2,x3) * S(x1,x2,x3,u3,u1,u2) * S(x1,x2,x3,w3,w1,w2)
//     = sum_y qdim(y) * theta(u1,w1,y) theta(u2,w2,y) theta(u3,w3,y)
//         * S(x1,u2,u1,y,w1,w2) * S(x2,u3,u2,y,w2,w3) * S(x3,u1,u3,y,w3,w1)
//
// Returns the exact residual LHS - RHS.
inline CycNumber pentagon_residual(const ModularData& md, Color x1, Color x2, Color x3,
                                   Color u1, Color u2, Color u3, Color w1, Color w2,
                                   Color w3) {
    CycNumber lhs = md.theta(x1, x2, x3) * md.six_j(x1, x2, x3, u3, u1, u2) *
                    md.six_j(x1, x2, x3, w3, w1, w2);
    CycNumber rhs = CycNumber::zero(md.root_order());
    for (Color y = 0; y < md.color_count(); ++y) {
        if (!md.admissible(u1, w1, y) || !md.admissible(u2, w2, y) ||
            !md.admissible(u3, w3, y))
            continue;
        rhs += md.qdim(y) * md.theta(u1, w1, y) * md.theta(u2, w2, y) * md.theta(u3, w3, y) *
               md.six_j(x1, u2, u1, y, w1, w2) * md.six_j(x2, u3, u2, y, w2, w3) *
               md.six_j(x3, u1, u3, y, w3, w1);
    }
    return lhs - rhs;
}

// Bubble contract of the 2-0 move (two tetrahedra glued along two faces).
// Boundary data x2,x3,u1,u2 and outer edges u3, v:
//
//   sum_t qdim(t) theta(t,x2,x3) theta(t,u2,u1)
//       * S(t,x2,x3,u3,u1,u2) * S(t,x2,x3,v,u1,u2)
//     = delta_{u3,v} / (qdim(u3) * theta(x3,u1,u3) * theta(x2,u2,u3))
//
// Returns the exact residual (only meaningful when the right-hand faces are
// admissible, which the caller guarantees).
inline CycNumber orthogonality_residual(const ModularData& md, Color x2, Color x3, Color u1,
                                        Color u2, Color u3, Color v) {
    CycNumber lhs = CycNumber::zero(md.root_order());
    for (Color t = 0; t < md.color_count(); ++t) {
        if (!md.admissible(t, x2, x3) || !md.admissible(t, u2, u1)) continue;
        lhs += md.qdim(t) * md.theta(t, x2, x3) * md.theta(t, u2, u1) *
               md.six_j(t, x2, x3, u3, u1, u2) * md.six_j(t, x2, x3, v, u1, u2);
    }
    CycNumber rhs = CycNumber::zero(md.root_order());
    if (u3 == v)
        rhs = (md.qdim(u3) * md.theta(x3, u1, u3) * md.theta(x2, u2, u3)).inverse();
    return lhs - rhs;
}

struct AlgebraReport {
    long symmetry_violations = 0;
    long pentagon_violations = 0;
    long orthogonality_violations = 0;
    long pentagon_checked = 0;
    long orthogonality_checked = 0;
    bool ok() const {
        return symmetry_violations == 0 && pentagon_violations == 0 &&
               orthogonality_violations == 0;
    }
};

// random admissible boundary data for the two contracts
inline AlgebraReport check_move_contracts(const ModularData& md, int samples,
                                          std::uint32_t seed) {
    AlgebraReport rep;
    std::mt19937 rng(seed);
    const int nc = md.color_count();
    std::uniform_int_distribution<int> col(0, nc - 1);

    // admissible triples for fast sampling
    std::vector<std::array<Color, 3>> triples;
    for (Color a = 0; a < nc; ++a)
        for (Color b = 0; b < nc; ++b)
            for (Color c = 0; c < nc; ++c)
                if (md.admissible(a, b, c)) triples.push_back({a, b, c});
    std::uniform_int_distribution<std::size_t> tri(0, triples.size() - 1);

    CycNumber zero = CycNumber::zero(md.root_order());
    for (int it = 0; it < samples; ++it) {
        // pentagon: sample x-triple, then apex edges by rejection; the
        // all-zero configuration guarantees termination
        for (int attempt = 0; attempt < 100000; ++attempt) {
            auto x = triples[tri(rng)];
            Color u1 = col(rng), u2 = col(rng), u3 = col(rng);
            if (!md.admissible(x[0], u1, u2) || !md.admissible(x[1], u3, u2) ||
                !md.admissible(x[2], u1, u3))
                continue;
            Color w1 = col(rng), w2 = col(rng), w3 = col(rng);
            if (!md.admissible(x[0], w1, w2) || !md.admissible(x[1], w3, w2) ||
                !md.admissible(x[2], w1, w3))
                continue;
            ++rep.pentagon_checked;
            if (pentagon_residual(md, x[0], x[1], x[2], u1, u2, u3, w1, w2, w3) != zero)
                ++rep.pentagon_violations;
            break;
        }
        // orthogonality: sample boundary so the collapsed faces are admissible
        for (int attempt = 0; attempt < 100000; ++attempt) {
            Color x2 = col(rng), x3 = col(rng), u1 = col(rng), u2 = col(rng);
            Color u3 = col(rng), v = col(rng);
            if (!md.admissible(x3, u1, u3) || !md.admissible(x2, u2, u3)) continue;
            if (!md.admissible(x3, u1, v) || !md.admissible(x2, u2, v)) continue;
            ++rep.orthogonality_checked;
            if (orthogonality_residual(md, x2, x3, u1, u2, u3, v) != zero)
                ++rep.orthogonality_violations;
            break;
        }
    }
    return rep;
}

}  // namespace tvrt::selftest
