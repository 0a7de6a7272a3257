#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tvrt/errors.hpp"

namespace tvrt {

// Permutation of {0,1,2,3}, used for vertex correspondences of face gluings.
struct Perm4 {
    std::array<std::uint8_t, 4> img{0, 1, 2, 3};

    static Perm4 identity() { return {}; }
    static Perm4 from_array(const std::array<int, 4>& a) {
        Perm4 p;
        bool seen[4] = {false, false, false, false};
        for (int i = 0; i < 4; ++i) {
            if (a[i] < 0 || a[i] > 3 || seen[a[i]])
                throw ValidationError("gluing perm is not a permutation of {0,1,2,3}");
            seen[a[i]] = true;
            p.img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a[i]);
        }
        return p;
    }
    int operator()(int i) const { return img[static_cast<std::size_t>(i)]; }
    Perm4 inverse() const {
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.img[img[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        return p;
    }
    // (a.then(b))(x) = b(a(x))
    Perm4 then(const Perm4& b) const {
        Perm4 p;
        for (int i = 0; i < 4; ++i)
            p.img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(b(img[static_cast<std::size_t>(i)]));
        return p;
    }
    int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img[static_cast<std::size_t>(i)] > img[static_cast<std::size_t>(j)]) ++inv;
        return inv % 2 ? -1 : 1;
    }
    friend bool operator==(const Perm4& a, const Perm4& b) { return a.img == b.img; }
};

struct Gluing {
    int tet = -1;
    int face = -1;
    Perm4 perm;  // maps this tetrahedron's vertex labels to the target's
    friend bool operator==(const Gluing& a, const Gluing& b) {
        return a.tet == b.tet && a.face == b.face && a.perm == b.perm;
    }
};

// edge slots in the order (01),(02),(03),(12),(13),(23)
inline constexpr int kEdgeVerts[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

inline int edge_slot_of(int u, int v) {
    if (u > v) std::swap(u, v);
    for (int s = 0; s < 6; ++s)
        if (kEdgeVerts[s][0] == u && kEdgeVerts[s][1] == v) return s;
    throw DomainError("edge_slot_of: not an edge");
}

struct EdgeClass {
    std::vector<std::pair<int, int>> slots;  // (tet, edge slot 0..5)
    std::vector<bool> reversed;              // slot orientation vs. class representative
    int degree() const { return static_cast<int>(slots.size()); }
};

struct FaceClass {
    std::pair<int, int> front;  // (tet, face)
    std::pair<int, int> back;
};

struct VertexClass {
    std::vector<std::pair<int, int>> slots;  // (tet, vertex)
    int degree() const { return static_cast<int>(slots.size()); }
};

struct Skeleton {
    std::vector<EdgeClass> edges;
    std::vector<FaceClass> faces;
    std::vector<VertexClass> vertices;
    // per tetrahedron: class index of each edge slot / face / vertex
    std::vector<std::array<int, 6>> tet_edge;
    std::vector<std::array<bool, 6>> tet_edge_reversed;
    std::vector<std::array<int, 4>> tet_face;
    std::vector<std::array<int, 4>> tet_vertex;
    // the three edge slots of face i (fixed tables)
    static std::array<int, 3> face_edge_slots(int face) {
        std::array<int, 3> out{};
        int k = 0;
        for (int s = 0; s < 6; ++s)
            if (kEdgeVerts[s][0] != face && kEdgeVerts[s][1] != face) out[static_cast<std::size_t>(k++)] = s;
        return out;
    }
};

// Closed oriented 3-manifold triangulation given as a tetrahedron face-gluing
// table. Fully validated on construction: involutive gluings, no free faces,
// consistent orientation, all edge classes orientation-preserving, every
// vertex link a 2-sphere, Euler characteristic zero.
class Triangulation {
public:
    static Triangulation from_gluings(int tet_count,
                                      std::vector<std::array<std::optional<Gluing>, 4>> gluings) {
        Triangulation t;
        t.tet_count_ = tet_count;
        t.gluings_ = std::move(gluings);
        t.validate_and_build();
        return t;
    }

    int tet_count() const { return tet_count_; }
    const Gluing& gluing(int tet, int face) const {
        return *gluings_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
    }
    const Skeleton& skeleton() const { return skel_; }
    const std::vector<int>& orientation() const { return orientation_; }

    long edge_count() const { return static_cast<long>(skel_.edges.size()); }
    long face_count() const { return static_cast<long>(skel_.faces.size()); }
    long vertex_count() const { return static_cast<long>(skel_.vertices.size()); }
    long euler_characteristic() const {
        return vertex_count() - edge_count() + face_count() - tet_count_;
    }

    // gluing table with all tetrahedra relabeled by an odd permutation;
    // same manifold with reversed orientation
    Triangulation reversed() const {
        const Perm4 swap01 = Perm4::from_array({1, 0, 2, 3});
        std::vector<std::array<std::optional<Gluing>, 4>> g(static_cast<std::size_t>(tet_count_));
        for (int t = 0; t < tet_count_; ++t)
            for (int f = 0; f < 4; ++f) {
                const Gluing& old = gluing(t, f);
                Gluing ng;
                ng.tet = old.tet;
                ng.perm = swap01.then(old.perm).then(swap01);
                ng.face = ng.perm(swap01(f));
                g[static_cast<std::size_t>(t)][static_cast<std::size_t>(swap01(f))] = ng;
            }
        return from_gluings(tet_count_, std::move(g));
    }

    std::string serialize() const {
        nlohmann::ordered_json j;
        j["format"] = "tri-v1";
        j["tetrahedra"] = tet_count_;
        auto arr = nlohmann::ordered_json::array();
        for (int t = 0; t < tet_count_; ++t) {
            auto row = nlohmann::ordered_json::array();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = gluing(t, f);
                nlohmann::ordered_json e;
                e["tet"] = g.tet;
                e["face"] = g.face;
                e["perm"] = {g.perm(0), g.perm(1), g.perm(2), g.perm(3)};
                row.push_back(e);
            }
            arr.push_back(row);
        }
        j["gluings"] = arr;
        return j.dump(2) + "\n";
    }

    static Triangulation parse(const std::string& text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("tri: malformed JSON: ") + e.what());
        }
        if (!j.is_object() || j.value("format", "") != "tri-v1")
            throw ParseError("tri: missing or unknown format tag (expected \"tri-v1\")");
        if (!j.contains("tetrahedra") || !j["tetrahedra"].is_number_integer())
            throw ParseError("tri: missing integer field \"tetrahedra\"");
        const int n = j["tetrahedra"].get<int>();
        if (n < 1) throw ParseError("tri: tetrahedra count must be at least 1");
        if (!j.contains("gluings") || !j["gluings"].is_array() ||
            j["gluings"].size() != static_cast<std::size_t>(n))
            throw ParseError("tri: \"gluings\" must be an array with one row per tetrahedron");
        std::vector<std::array<std::optional<Gluing>, 4>> g(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) {
            const auto& row = j["gluings"][static_cast<std::size_t>(t)];
            if (!row.is_array() || row.size() != 4)
                throw ParseError("tri: gluing row of tetrahedron " + std::to_string(t) +
                                 " must have 4 entries");
            for (int f = 0; f < 4; ++f) {
                const auto& e = row[static_cast<std::size_t>(f)];
                if (e.is_null())
                    throw ParseError("tri: tetrahedron " + std::to_string(t) + " face " +
                                     std::to_string(f) +
                                     " is unglued; closed triangulation required");
                if (!e.is_object() || !e.contains("tet") || !e.contains("face") ||
                    !e.contains("perm"))
                    throw ParseError("tri: bad gluing entry at tetrahedron " + std::to_string(t) +
                                     " face " + std::to_string(f));
                Gluing gl;
                gl.tet = e["tet"].get<int>();
                gl.face = e["face"].get<int>();
                if (gl.tet < 0 || gl.tet >= n)
                    throw ParseError("tri: tetrahedron " + std::to_string(t) + " face " +
                                     std::to_string(f) + " glues to nonexistent tetrahedron " +
                                     std::to_string(gl.tet));
                if (gl.face < 0 || gl.face > 3)
                    throw ParseError("tri: tetrahedron " + std::to_string(t) + " face " +
                                     std::to_string(f) + " glues to invalid face index " +
                                     std::to_string(gl.face));
                const auto& pa = e["perm"];
                if (!pa.is_array() || pa.size() != 4)
                    throw ParseError("tri: perm must be an array of 4 vertex indices");
                std::array<int, 4> a{};
                for (int k = 0; k < 4; ++k) a[static_cast<std::size_t>(k)] = pa[static_cast<std::size_t>(k)].get<int>();
                try {
                    gl.perm = Perm4::from_array(a);
                } catch (const ValidationError&) {
                    throw ParseError("tri: tetrahedron " + std::to_string(t) + " face " +
                                     std::to_string(f) + ": perm is not a vertex permutation");
                }
                g[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = gl;
            }
        }
        Triangulation out;
        out.tet_count_ = n;
        out.gluings_ = std::move(g);
        out.validate_and_build();
        return out;
    }

    friend bool operator==(const Triangulation& a, const Triangulation& b) {
        if (a.tet_count_ != b.tet_count_) return false;
        for (int t = 0; t < a.tet_count_; ++t)
            for (int f = 0; f < 4; ++f)
                if (!(a.gluing(t, f) == b.gluing(t, f))) return false;
        return true;
    }

private:
    int tet_count_ = 0;
    std::vector<std::array<std::optional<Gluing>, 4>> gluings_;
    Skeleton skel_;
    std::vector<int> orientation_;

    void validate_and_build() {
        if (tet_count_ < 1) throw ValidationError("triangulation: no tetrahedra");
        if (gluings_.size() != static_cast<std::size_t>(tet_count_))
            throw ValidationFailureSize();

        // closed + involutive
        for (int t = 0; t < tet_count_; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& og = gluings_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
                if (!og)
                    throw ValidationError("triangulation: tetrahedron " + std::to_string(t) +
                                          " face " + std::to_string(f) + " is unglued");
                const Gluing& g = *og;
                if (g.tet < 0 || g.tet >= tet_count_)
                    throw ValidationError("triangulation: tetrahedron " + std::to_string(t) +
                                          " face " + std::to_string(f) + " glues out of range");
                if (g.perm(f) != g.face)
                    throw ValidationError("triangulation: tetrahedron " + std::to_string(t) +
                                          " face " + std::to_string(f) +
                                          ": perm does not carry the face to the target face");
                const auto& back = gluings_[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(g.face)];
                if (!back || back->tet != t || back->face != f || !(back->perm == g.perm.inverse()))
                    throw ValidationError("triangulation: gluing of tetrahedron " +
                                          std::to_string(t) + " face " + std::to_string(f) +
                                          " is not matched by its inverse");
                if (g.tet == t && g.face == f)
                    throw ValidationError("triangulation: face glued to itself at tetrahedron " +
                                          std::to_string(t) + " face " + std::to_string(f));
            }

        build_skeleton();

        if (euler_characteristic() != 0)
            throw ValidationError("triangulation: Euler characteristic is " +
                                  std::to_string(euler_characteristic()) + ", expected 0");
        check_orientable();
        check_vertex_links();
    }

    struct ValidationFailureSize : ValidationError {
        ValidationFailureSize() : ValidationError("triangulation: gluing table size mismatch") {}
    };

    void build_skeleton() {
        skel_ = Skeleton();
        const int n = tet_count_;
        skel_.tet_edge.assign(static_cast<std::size_t>(n), {-1, -1, -1, -1, -1, -1});
        skel_.tet_edge_reversed.assign(static_cast<std::size_t>(n), {false, false, false, false, false, false});
        skel_.tet_face.assign(static_cast<std::size_t>(n), {-1, -1, -1, -1});
        skel_.tet_vertex.assign(static_cast<std::size_t>(n), {-1, -1, -1, -1});

        // face classes: orbit size 2
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) {
                if (skel_.tet_face[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] >= 0) continue;
                const Gluing& g = gluing(t, f);
                FaceClass fc;
                fc.front = {t, f};
                fc.back = {g.tet, g.face};
                int id = static_cast<int>(skel_.faces.size());
                skel_.tet_face[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = id;
                skel_.tet_face[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(g.face)] = id;
                skel_.faces.push_back(fc);
            }

        // edge classes: BFS orbits carrying orientation flags
        for (int t = 0; t < n; ++t)
            for (int s = 0; s < 6; ++s) {
                if (skel_.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] >= 0) continue;
                int id = static_cast<int>(skel_.edges.size());
                EdgeClass ec;
                std::vector<std::pair<std::pair<int, int>, bool>> queue{{{t, s}, false}};
                skel_.tet_edge[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = id;
                skel_.tet_edge_reversed[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = false;
                ec.slots.push_back({t, s});
                ec.reversed.push_back(false);
                while (!queue.empty()) {
                    auto [slot, rev] = queue.back();
                    queue.pop_back();
                    auto [ct, cs] = slot;
                    int u = kEdgeVerts[cs][0], v = kEdgeVerts[cs][1];
                    for (int f = 0; f < 4; ++f) {
                        if (f == u || f == v) continue;  // faces containing the edge
                        const Gluing& g = gluing(ct, f);
                        int nu = g.perm(u), nv = g.perm(v);
                        bool nrev = rev;
                        if (nu > nv) {
                            std::swap(nu, nv);
                            nrev = !nrev;
                        }
                        int ns = edge_slot_of(nu, nv);
                        int& mark = skel_.tet_edge[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(ns)];
                        if (mark >= 0) {
                            if (mark != id)
                                throw ValidationError("triangulation: inconsistent edge orbits");
                            if (skel_.tet_edge_reversed[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(ns)] != nrev)
                                throw ValidationError(
                                    "triangulation: edge identified with itself reversed");
                            continue;
                        }
                        mark = id;
                        skel_.tet_edge_reversed[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(ns)] = nrev;
                        ec.slots.push_back({g.tet, ns});
                        ec.reversed.push_back(nrev);
                        queue.push_back({{g.tet, ns}, nrev});
                    }
                }
                skel_.edges.push_back(std::move(ec));
            }

        // vertex classes
        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v) {
                if (skel_.tet_vertex[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] >= 0) continue;
                int id = static_cast<int>(skel_.vertices.size());
                VertexClass vc;
                std::vector<std::pair<int, int>> queue{{t, v}};
                skel_.tet_vertex[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] = id;
                vc.slots.push_back({t, v});
                while (!queue.empty()) {
                    auto [ct, cv] = queue.back();
                    queue.pop_back();
                    for (int f = 0; f < 4; ++f) {
                        if (f == cv) continue;
                        const Gluing& g = gluing(ct, f);
                        int nv = g.perm(cv);
                        int& mark = skel_.tet_vertex[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(nv)];
                        if (mark >= 0) continue;
                        mark = id;
                        vc.slots.push_back({g.tet, nv});
                        queue.push_back({g.tet, nv});
                    }
                }
                skel_.vertices.push_back(std::move(vc));
            }
    }

    void check_orientable() {
        orientation_.assign(static_cast<std::size_t>(tet_count_), 0);
        for (int start = 0; start < tet_count_; ++start) {
            if (orientation_[static_cast<std::size_t>(start)] != 0) continue;
            orientation_[static_cast<std::size_t>(start)] = 1;
            std::vector<int> queue{start};
            while (!queue.empty()) {
                int t = queue.back();
                queue.pop_back();
                for (int f = 0; f < 4; ++f) {
                    const Gluing& g = gluing(t, f);
                    int want = -orientation_[static_cast<std::size_t>(t)] * g.perm.sign();
                    int& cur = orientation_[static_cast<std::size_t>(g.tet)];
                    if (cur == 0) {
                        cur = want;
                        queue.push_back(g.tet);
                    } else if (cur != want) {
                        throw ValidationError("triangulation: not orientable");
                    }
                }
            }
        }
    }

    void check_vertex_links() {
        for (std::size_t vi = 0; vi < skel_.vertices.size(); ++vi) {
            const auto& vc = skel_.vertices[vi];
            const int fl = vc.degree();  // triangles of the link
            if ((3 * fl) % 2 != 0)
                throw ValidationError("triangulation: vertex link is not a closed surface");
            // connectivity of the link via face gluings
            std::map<std::pair<int, int>, int> comp;
            for (const auto& s : vc.slots) comp[s] = -1;
            std::vector<std::pair<int, int>> queue{vc.slots.front()};
            comp[vc.slots.front()] = 0;
            while (!queue.empty()) {
                auto [t, v] = queue.back();
                queue.pop_back();
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    const Gluing& g = gluing(t, f);
                    std::pair<int, int> next{g.tet, g.perm(v)};
                    auto it = comp.find(next);
                    if (it != comp.end() && it->second == -1) {
                        it->second = 0;
                        queue.push_back(next);
                    }
                }
            }
            for (const auto& [slot, c] : comp)
                if (c == -1)
                    throw ValidationError("triangulation: vertex link is disconnected");
            // V - E + F of the link: link vertices are ends of edge classes
            long vl = 0;
            for (const auto& ec : skel_.edges) {
                auto [t, s] = ec.slots.front();
                int u = kEdgeVerts[s][0], v = kEdgeVerts[s][1];
                if (skel_.tet_vertex[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)] == static_cast<int>(vi)) ++vl;
                if (skel_.tet_vertex[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] == static_cast<int>(vi)) ++vl;
            }
            long chi = vl - (3L * fl) / 2 + fl;
            if (chi != 2)
                throw ValidationError("triangulation: vertex link has Euler characteristic " +
                                      std::to_string(chi) + ", expected 2 (sphere)");
        }
    }
};

}  // namespace tvrt
