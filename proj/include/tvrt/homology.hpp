#pragma once

#include <string>
#include <vector>

#include "tvrt/bigint.hpp"
#include "tvrt/triangulation.hpp"

namespace tvrt {

// Finitely generated abelian group: Z^rank + sum Z/d_i with d_1 | d_2 | ...
struct AbelianGroup {
    int rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1

    bool trivial() const { return rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }

    static AbelianGroup free(int rank) { return AbelianGroup{rank, {}}; }
    static AbelianGroup cyclic(long n) {
        AbelianGroup g;
        if (n == 0)
            g.rank = 1;
        else if (std::abs(n) > 1)
            g.torsion.push_back(BigInt(std::abs(n)));
        return g;
    }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < rank; ++i) out += out.empty() ? "Z" : " + Z";
        for (const auto& d : torsion) {
            if (!out.empty()) out += " + ";
            out += "Z/" + d.to_string();
        }
        return out.empty() ? "0" : out;
    }
};

namespace detail {

// in-place Smith normal form; returns the diagonal (invariant factors,
// divisibility enforced)
inline std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<BigInt> diag;
    std::size_t top = 0;
    while (top < rows && top < cols) {
        // find a nonzero pivot
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = top; i < rows && pr == rows; ++i)
            for (std::size_t j = top; j < cols; ++j)
                if (!m[i][j].is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == rows) break;
        std::swap(m[top], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            // clear the pivot column
            for (std::size_t i = top + 1; i < rows; ++i) {
                while (!m[i][top].is_zero()) {
                    BigInt q = m[i][top] / m[top][top];
                    for (std::size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
                    if (!m[i][top].is_zero()) {
                        std::swap(m[top], m[i]);
                        clean = false;
                    }
                }
            }
            // clear the pivot row
            for (std::size_t j = top + 1; j < cols; ++j) {
                while (!m[top][j].is_zero()) {
                    BigInt q = m[top][j] / m[top][top];
                    for (std::size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
                    if (!m[top][j].is_zero()) {
                        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][j]);
                        clean = false;
                    }
                }
            }
        }
        diag.push_back(m[top][top].abs());
        ++top;
    }
    // enforce the divisibility chain d1 | d2 | ...
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            if ((diag[j] % diag[i]).is_zero()) continue;
            BigInt g = BigInt::gcd(diag[i], diag[j]);
            BigInt l = diag[i] * diag[j] / g;
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

inline int matrix_rank(const std::vector<std::vector<BigInt>>& m) {
    int rank = 0;
    for (const auto& d : smith_diagonal(m))
        if (!d.is_zero()) ++rank;
    return rank;
}

}  // namespace detail

// cokernel Z^n / im(M) for a square presentation matrix (columns are
// relators); used for the homology of surgery presentations
inline AbelianGroup cokernel(const std::vector<std::vector<BigInt>>& m) {
    AbelianGroup g;
    if (m.empty()) return g;
    const int n = static_cast<int>(m.size());
    auto diag = detail::smith_diagonal(m);
    int nonzero = 0;
    for (const auto& d : diag) {
        if (d.is_zero()) continue;
        ++nonzero;
        if (!(d.is_one())) g.torsion.push_back(d);
    }
    g.rank = n - nonzero;
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

// H_1 of a closed triangulation from the simplicial chain complex
// C_2 -> C_1 -> C_0 of the quotient cell structure.
//
// im(d2) lands in ker(d1), and Z^E / ker(d1) is free (it embeds in C_0), so
// ker(d1)/im(d2) has the same torsion as Z^E/im(d2); the rank is
// (E - rank d1) - rank d2.
inline AbelianGroup homology_h1(const Triangulation& tri) {
    const Skeleton& sk = tri.skeleton();
    const std::size_t E = sk.edges.size();
    const std::size_t F = sk.faces.size();
    const std::size_t V = sk.vertices.size();

    // d1: V x E
    std::vector<std::vector<BigInt>> d1(V, std::vector<BigInt>(E, BigInt(0)));
    for (std::size_t e = 0; e < E; ++e) {
        auto [t, s] = sk.edges[e].slots.front();
        int u = kEdgeVerts[s][0], v = kEdgeVerts[s][1];
        int cu = sk.tet_vertex[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)];
        int cv = sk.tet_vertex[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
        d1[static_cast<std::size_t>(cv)][e] += BigInt(1);
        d1[static_cast<std::size_t>(cu)][e] -= BigInt(1);
    }

    // d2: E x F, using the representative side of each face class
    std::vector<std::vector<BigInt>> d2(E, std::vector<BigInt>(F, BigInt(0)));
    for (std::size_t fc = 0; fc < F; ++fc) {
        auto [t, f] = sk.faces[fc].front;
        std::array<int, 3> verts{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) verts[static_cast<std::size_t>(k++)] = v;
        // oriented boundary of [v0,v1,v2]
        const int pairs[3][3] = {{verts[0], verts[1], +1},
                                 {verts[1], verts[2], +1},
                                 {verts[0], verts[2], -1}};
        for (const auto& p : pairs) {
            int slot = edge_slot_of(p[0], p[1]);
            int ec = sk.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(slot)];
            bool rev = sk.tet_edge_reversed[static_cast<std::size_t>(t)][static_cast<std::size_t>(slot)];
            int sign = p[2] * (rev ? -1 : 1);
            d2[static_cast<std::size_t>(ec)][fc] += BigInt(sign);
        }
    }

    AbelianGroup g;
    auto diag2 = detail::smith_diagonal(d2);
    int rank2 = 0;
    for (const auto& d : diag2) {
        if (d.is_zero()) continue;
        ++rank2;
        if (!d.is_one()) g.torsion.push_back(d);
    }
    int rank1 = detail::matrix_rank(d1);
    g.rank = static_cast<int>(E) - rank1 - rank2;
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

}  // namespace tvrt
