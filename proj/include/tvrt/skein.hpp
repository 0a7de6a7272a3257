#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "tvrt/link.hpp"
#include "tvrt/temperley_lieb.hpp"

namespace tvrt {

namespace skein_detail {

using Pairing = std::vector<std::pair<int, int>>;  // sorted pairs of endpoint ids

struct Node {
    std::vector<int> points;
    std::vector<std::pair<Pairing, CycNumber>> terms;
};

inline void sort_pairing(Pairing& p) {
    for (auto& [x, y] : p)
        if (x > y) std::swap(x, y);
    std::sort(p.begin(), p.end());
}

// Contract a closed network: every endpoint id occurs in exactly two nodes.
// Nodes are absorbed greedily by shared-endpoint count; chains are traced
// through both pairings and closed cycles pick up factors of delta.
inline CycNumber contract(const std::vector<Node>& nodes, const CycNumber& delta,
                          const CycNumber& one) {
    std::map<Pairing, CycNumber> frontier;
    frontier[{}] = one;
    std::set<int> fpoints;
    std::vector<bool> used(nodes.size(), false);

    for (std::size_t step = 0; step < nodes.size(); ++step) {
        // next node: most endpoints shared with the frontier
        std::size_t best = nodes.size();
        int best_shared = -1;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (used[i]) continue;
            int shared = 0;
            for (int p : nodes[i].points) shared += fpoints.count(p) ? 1 : 0;
            if (shared > best_shared) {
                best_shared = shared;
                best = i;
            }
        }
        const Node& node = nodes[best];
        used[best] = true;

        std::set<int> npoints(node.points.begin(), node.points.end());
        std::set<int> shared;
        for (int p : node.points)
            if (fpoints.count(p)) shared.insert(p);
        // new frontier points: symmetric difference
        std::set<int> next_points;
        for (int p : fpoints)
            if (!shared.count(p)) next_points.insert(p);
        for (int p : npoints)
            if (!shared.count(p)) next_points.insert(p);

        std::map<Pairing, CycNumber> next;
        for (const auto& [fp, fc] : frontier) {
            std::map<int, int> pf;
            for (const auto& [x, y] : fp) {
                pf[x] = y;
                pf[y] = x;
            }
            for (const auto& [np, nc] : node.terms) {
                std::map<int, int> pn;
                for (const auto& [x, y] : np) {
                    pn[x] = y;
                    pn[y] = x;
                }
                Pairing out;
                std::set<int> visited;
                for (int start : next_points) {
                    if (visited.count(start)) continue;
                    // walk alternating through the two partner maps
                    int cur = start;
                    bool in_frontier = fpoints.count(start) > 0;
                    visited.insert(start);
                    for (;;) {
                        int nxt = in_frontier ? pf.at(cur) : pn.at(cur);
                        if (!shared.count(nxt)) {
                            visited.insert(nxt);
                            out.push_back({start, nxt});
                            break;
                        }
                        visited.insert(nxt);
                        cur = nxt;
                        in_frontier = !in_frontier;  // shared points continue on the other side
                    }
                }
                // untouched shared points form closed cycles
                int loops = 0;
                for (int p : shared) {
                    if (visited.count(p)) continue;
                    ++loops;
                    int cur = p;
                    bool in_frontier = true;
                    while (!visited.count(cur)) {
                        visited.insert(cur);
                        cur = in_frontier ? pf.at(cur) : pn.at(cur);
                        in_frontier = !in_frontier;
                    }
                }
                CycNumber coeff = fc * nc;
                for (int l = 0; l < loops; ++l) coeff *= delta;
                sort_pairing(out);
                auto it = next.find(out);
                if (it == next.end())
                    next.emplace(std::move(out), std::move(coeff));
                else {
                    it->second += coeff;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
        frontier = std::move(next);
        fpoints = std::move(next_points);
    }
    auto it = frontier.find({});
    if (frontier.empty()) return one - one;  // everything cancelled
    if (it == frontier.end() || frontier.size() != 1)
        throw Error("skein contraction did not close");
    return it->second;
}

}  // namespace skein_detail

// Kauffman bracket of the diagram with each component cabled by the
// Jones-Wenzl projector of its color, in the blackboard framing of the PD
// code. Crossing smoothings: the A-resolution joins (slot0,slot1) and
// (slot2,slot3) of the counterclockwise PD tuple.
inline CycNumber cabled_bracket(const FramedLink& link, const std::vector<Color>& colors,
                                const ModularData& md, std::uint64_t crossing_guard = 65536) {
    if (static_cast<int>(colors.size()) != link.component_count())
        throw DomainError("cabled_bracket: one color per component required");
    const int ord = md.root_order();
    const CycNumber one = CycNumber::from_int(ord, 1);
    const CycNumber A = CycNumber::zeta_power(ord, 1);
    const CycNumber Ainv = CycNumber::zeta_power(ord, -1);
    const CycNumber delta = md.qdim(1);

    std::uint64_t cabled = 0;
    for (std::size_t x = 0; x < link.crossings().size(); ++x)
        cabled += static_cast<std::uint64_t>(colors[static_cast<std::size_t>(link.under_component(static_cast<int>(x)))]) *
                  static_cast<std::uint64_t>(colors[static_cast<std::size_t>(link.over_component(static_cast<int>(x)))]);
    if (cabled > crossing_guard)
        throw ResourceLimitError("cabled_bracket: " + std::to_string(cabled) +
                                     " cabled crossings exceed the guard of " +
                                     std::to_string(crossing_guard),
                                 static_cast<double>(cabled));

    int next_id = 0;
    auto fresh = [&]() { return next_id++; };
    std::vector<skein_detail::Node> nodes;
    auto wire = [&](int p, int q) {
        skein_detail::Node n;
        n.points = {p, q};
        n.terms.push_back({{{std::min(p, q), std::max(p, q)}}, one});
        nodes.push_back(std::move(n));
    };

    // per (crossing, slot) bundles of ports in travel order
    std::vector<std::array<std::vector<int>, 4>> bundles(link.crossings().size());
    for (std::size_t x = 0; x < link.crossings().size(); ++x) {
        const Crossing& cr = link.crossings()[x];
        const int m = colors[static_cast<std::size_t>(link.under_component(static_cast<int>(x)))];
        const int n = colors[static_cast<std::size_t>(link.over_component(static_cast<int>(x)))];
        auto& bd = bundles[x];
        if (m == 0 && n == 0) continue;
        if (m == 0 || n == 0) {
            // one cable is empty; the other passes straight through
            int w = std::max(m, n);
            int in_slot = m == 0 ? (cr.over_in_at_d ? 3 : 1) : 0;
            int out_slot = m == 0 ? (cr.over_in_at_d ? 1 : 3) : 2;
            for (int k = 0; k < w; ++k) {
                int p = fresh(), q = fresh();
                bd[static_cast<std::size_t>(in_slot)].push_back(p);
                bd[static_cast<std::size_t>(out_slot)].push_back(q);
                wire(p, q);
            }
            continue;
        }
        // grid of m x n elementary crossings; rows 1..n bottom to top, under
        // wires run south to north, over wires run horizontally
        std::vector<std::vector<std::array<int, 4>>> stub(
            static_cast<std::size_t>(m), std::vector<std::array<int, 4>>(static_cast<std::size_t>(n)));
        for (int u = 0; u < m; ++u)
            for (int rho = 0; rho < n; ++rho) {
                // stubs S,E,N,W
                stub[static_cast<std::size_t>(u)][static_cast<std::size_t>(rho)] = {fresh(), fresh(), fresh(),
                                                                                    fresh()};
                skein_detail::Node nd;
                auto& s = stub[static_cast<std::size_t>(u)][static_cast<std::size_t>(rho)];
                nd.points = {s[0], s[1], s[2], s[3]};
                skein_detail::Pairing pa{{s[0], s[1]}, {s[2], s[3]}};  // (S,E),(N,W)
                skein_detail::Pairing pb{{s[0], s[3]}, {s[1], s[2]}};  // (S,W),(E,N)
                skein_detail::sort_pairing(pa);
                skein_detail::sort_pairing(pb);
                nd.terms.push_back({pa, A});
                nd.terms.push_back({pb, Ainv});
                nodes.push_back(std::move(nd));
            }
        // internal wires
        for (int u = 0; u < m; ++u)
            for (int rho = 0; rho + 1 < n; ++rho)
                wire(stub[static_cast<std::size_t>(u)][static_cast<std::size_t>(rho)][2],
                     stub[static_cast<std::size_t>(u)][static_cast<std::size_t>(rho + 1)][0]);
        for (int u = 0; u + 1 < m; ++u)
            for (int rho = 0; rho < n; ++rho)
                wire(stub[static_cast<std::size_t>(u)][static_cast<std::size_t>(rho)][1],
                     stub[static_cast<std::size_t>(u + 1)][static_cast<std::size_t>(rho)][3]);
        // boundary bundles in travel order
        for (int u = 0; u < m; ++u) {
            bd[0].push_back(stub[static_cast<std::size_t>(u)][0][0]);                       // S row 1
            bd[2].push_back(stub[static_cast<std::size_t>(u)][static_cast<std::size_t>(n - 1)][2]);  // N row n
        }
        for (int v = 0; v < n; ++v) {
            if (cr.over_in_at_d) {
                // over enters west, wire v on row n-v
                bd[3].push_back(stub[0][static_cast<std::size_t>(n - 1 - v)][3]);
                bd[1].push_back(stub[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1 - v)][1]);
            } else {
                // over enters east, wire v on row v+1
                bd[1].push_back(stub[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(v)][1]);
                bd[3].push_back(stub[0][static_cast<std::size_t>(v)][3]);
            }
        }
    }

    // arcs: connect the out-bundle of one crossing to the in-bundle of the
    // next; one arc per component routes through the Jones-Wenzl projector
    std::map<int, std::pair<int, int>> arc_out, arc_in;  // arc -> (crossing, slot)
    for (std::size_t x = 0; x < link.crossings().size(); ++x) {
        const Crossing& cr = link.crossings()[x];
        arc_in[cr.arcs[0]] = {static_cast<int>(x), 0};
        arc_out[cr.arcs[2]] = {static_cast<int>(x), 2};
        if (cr.over_in_at_d) {
            arc_in[cr.arcs[3]] = {static_cast<int>(x), 3};
            arc_out[cr.arcs[1]] = {static_cast<int>(x), 1};
        } else {
            arc_in[cr.arcs[1]] = {static_cast<int>(x), 1};
            arc_out[cr.arcs[3]] = {static_cast<int>(x), 3};
        }
    }
    std::map<int, int> jw_arc;  // component -> arc carrying the projector
    for (const auto& [arc, loc] : arc_out) {
        int comp = link.arc_component(arc);
        if (!jw_arc.count(comp)) jw_arc[comp] = arc;
    }
    auto add_jw = [&](int c, std::vector<int>& bottom, std::vector<int>& top) {
        const TlElement& p = jones_wenzl(c, md);
        skein_detail::Node nd;
        for (int k = 0; k < c; ++k) {
            bottom.push_back(fresh());
            top.push_back(fresh());
        }
        nd.points = bottom;
        nd.points.insert(nd.points.end(), top.begin(), top.end());
        for (const auto& [m, coeff] : p.terms) {
            skein_detail::Pairing pr;
            auto port = [&](int tl_point) {
                return tl_point < c ? bottom[static_cast<std::size_t>(tl_point)]
                                    : top[static_cast<std::size_t>(tl_point - c)];
            };
            for (int pt = 0; pt < 2 * c; ++pt)
                if (pt < m[static_cast<std::size_t>(pt)])
                    pr.push_back({port(pt), port(m[static_cast<std::size_t>(pt)])});
            skein_detail::sort_pairing(pr);
            nd.terms.push_back({pr, coeff});
        }
        nodes.push_back(std::move(nd));
    };

    for (const auto& [arc, from] : arc_out) {
        auto to = arc_in.at(arc);
        const auto& bfrom = bundles[static_cast<std::size_t>(from.first)][static_cast<std::size_t>(from.second)];
        const auto& bto = bundles[static_cast<std::size_t>(to.first)][static_cast<std::size_t>(to.second)];
        int comp = link.arc_component(arc);
        int c = colors[static_cast<std::size_t>(comp)];
        if (c == 0) continue;
        if (jw_arc.at(comp) == arc) {
            std::vector<int> bottom, top;
            add_jw(c, bottom, top);
            for (int k = 0; k < c; ++k) {
                wire(bfrom[static_cast<std::size_t>(k)], bottom[static_cast<std::size_t>(k)]);
                wire(top[static_cast<std::size_t>(k)], bto[static_cast<std::size_t>(k)]);
            }
        } else {
            for (int k = 0; k < c; ++k)
                wire(bfrom[static_cast<std::size_t>(k)], bto[static_cast<std::size_t>(k)]);
        }
    }
    // 0-crossing unknot components: closed projector traces
    for (int u : link.unknotted_components()) {
        int c = colors[static_cast<std::size_t>(u)];
        if (c == 0) continue;
        std::vector<int> bottom, top;
        add_jw(c, bottom, top);
        for (int k = 0; k < c; ++k) wire(bottom[static_cast<std::size_t>(k)], top[static_cast<std::size_t>(k)]);
    }

    if (nodes.empty()) return one;
    return skein_detail::contract(nodes, delta, one);
}

// Framed colored link invariant: the cabled bracket corrected from the
// diagram's blackboard framing (self-writhe) to the requested framings, so
// the value depends only on the framed isotopy class. The color-c unknot
// with framing f evaluates to twist(c)^f * qdim(c).
inline CycNumber colored_link_value(const FramedLink& link, const std::vector<Color>& colors,
                                    const ModularData& md, std::uint64_t crossing_guard = 65536) {
    CycNumber v = cabled_bracket(link, colors, md, crossing_guard);
    for (int i = 0; i < link.component_count(); ++i) {
        long shift = link.framings()[static_cast<std::size_t>(i)] - link.self_writhe(i);
        if (shift != 0) v *= md.twist(colors[static_cast<std::size_t>(i)]).pow(shift);
    }
    return v;
}

}  // namespace tvrt
