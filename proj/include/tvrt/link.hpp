#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tvrt/errors.hpp"
#include "tvrt/homology.hpp"
#include "tvrt/rational.hpp"

namespace tvrt {

// One crossing of a planar diagram: the four arc labels counterclockwise
// starting from the incoming under-strand. The under-strand runs slot 0 to
// slot 2; the over-strand occupies slots 1 and 3 and its direction is
// recovered globally from the requirement that every arc leaves exactly one
// crossing and enters exactly one.
struct Crossing {
    std::array<int, 4> arcs;
    bool over_in_at_d = false;  // true: over runs slot3 -> slot1 (positive crossing)
    int sign() const { return over_in_at_d ? 1 : -1; }
};

class FramedLink {
public:
    // pd entries use arbitrary arc labels; framings are indexed by component
    static FramedLink from_pd(int component_count, const std::vector<std::array<int, 4>>& pd,
                              const std::vector<long>& framings,
                              const std::vector<int>& unknotted = {}) {
        FramedLink l;
        l.component_count_ = component_count;
        l.framings_ = framings;
        l.unknotted_ = unknotted;
        for (const auto& c : pd) l.crossings_.push_back({c, false});
        l.validate_and_orient();
        return l;
    }

    int component_count() const { return component_count_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<long>& framings() const { return framings_; }
    const std::vector<int>& unknotted_components() const { return unknotted_; }
    // component index of each crossing strand
    int under_component(int crossing) const { return arc_component_.at(crossings_[static_cast<std::size_t>(crossing)].arcs[0]); }
    int over_component(int crossing) const { return arc_component_.at(crossings_[static_cast<std::size_t>(crossing)].arcs[1]); }
    int arc_component(int arc) const { return arc_component_.at(arc); }

    long self_writhe(int component) const {
        long w = 0;
        for (std::size_t x = 0; x < crossings_.size(); ++x) {
            if (under_component(static_cast<int>(x)) != component ||
                over_component(static_cast<int>(x)) != component)
                continue;
            w += crossings_[x].sign();
        }
        return w;
    }

    std::vector<std::vector<long>> linking_matrix() const {
        std::vector<std::vector<long>> m(static_cast<std::size_t>(component_count_),
                                         std::vector<long>(static_cast<std::size_t>(component_count_), 0));
        std::vector<std::vector<long>> twice = m;
        for (std::size_t x = 0; x < crossings_.size(); ++x) {
            int i = under_component(static_cast<int>(x));
            int j = over_component(static_cast<int>(x));
            if (i == j) continue;
            twice[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += crossings_[x].sign();
            twice[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] += crossings_[x].sign();
        }
        for (int i = 0; i < component_count_; ++i) {
            for (int j = 0; j < component_count_; ++j) {
                if (i == j) {
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        framings_[static_cast<std::size_t>(i)];
                } else {
                    if (twice[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % 2 != 0)
                        throw ValidationError("linking number is not an integer");
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        twice[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / 2;
                }
            }
        }
        return m;
    }

    std::string serialize() const {
        nlohmann::ordered_json j;
        j["format"] = "lnk-v1";
        j["components"] = component_count_;
        auto pd = nlohmann::ordered_json::array();
        for (const auto& c : crossings_) pd.push_back({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]});
        j["pd"] = pd;
        j["framings"] = framings_;
        j["unknotted_components"] = unknotted_;
        return j.dump(2) + "\n";
    }

    static FramedLink parse(const std::string& text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("lnk: malformed JSON: ") + e.what());
        }
        if (!j.is_object() || j.value("format", "") != "lnk-v1")
            throw ParseError("lnk: missing or unknown format tag (expected \"lnk-v1\")");
        if (!j.contains("components") || !j["components"].is_number_integer())
            throw ParseError("lnk: missing integer field \"components\"");
        int k = j["components"].get<int>();
        if (k < 0) throw ParseError("lnk: negative component count");
        std::vector<std::array<int, 4>> pd;
        if (j.contains("pd")) {
            if (!j["pd"].is_array()) throw ParseError("lnk: \"pd\" must be an array");
            for (const auto& e : j["pd"]) {
                if (!e.is_array() || e.size() != 4)
                    throw ParseError("lnk: each pd entry must be a 4-tuple of arc labels");
                pd.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
            }
        }
        std::vector<long> framings;
        if (!j.contains("framings") || !j["framings"].is_array() ||
            j["framings"].size() != static_cast<std::size_t>(k))
            throw ParseError("lnk: \"framings\" must list one integer per component");
        for (const auto& e : j["framings"]) framings.push_back(e.get<long>());
        std::vector<int> unknotted;
        if (j.contains("unknotted_components"))
            for (const auto& e : j["unknotted_components"]) unknotted.push_back(e.get<int>());
        return from_pd(k, pd, framings, unknotted);
    }

private:
    int component_count_ = 0;
    std::vector<Crossing> crossings_;
    std::vector<long> framings_;
    std::vector<int> unknotted_;
    std::map<int, int> arc_component_;

    void validate_and_orient() {
        // collect arcs and their appearances: (crossing, slot)
        std::map<int, std::vector<std::pair<int, int>>> appearances;
        for (std::size_t x = 0; x < crossings_.size(); ++x)
            for (int s = 0; s < 4; ++s)
                appearances[crossings_[x].arcs[static_cast<std::size_t>(s)]].push_back(
                    {static_cast<int>(x), s});
        for (const auto& [arc, apps] : appearances)
            if (apps.size() != 2)
                throw ValidationError("lnk: arc label " + std::to_string(arc) + " appears " +
                                      std::to_string(apps.size()) + " times, expected 2");

        // Orient the over-strands: every arc must leave one crossing slot and
        // enter another. Slot 0 is an entry, slot 2 an exit; slots 1/3 are
        // fixed by propagation, with ties broken deterministically.
        // role: +1 entry (arc ends here), -1 exit (arc starts here)
        std::map<std::pair<int, int>, int> role;
        for (std::size_t x = 0; x < crossings_.size(); ++x) {
            role[{static_cast<int>(x), 0}] = +1;
            role[{static_cast<int>(x), 2}] = -1;
            role[{static_cast<int>(x), 1}] = 0;
            role[{static_cast<int>(x), 3}] = 0;
        }
        bool progress = true;
        auto set_role = [&](int x, int s, int r) {
            int& cur = role[{x, s}];
            if (cur == r) return false;
            if (cur != 0 && cur != r)
                throw ValidationError("lnk: arcs cannot be consistently oriented at crossing " +
                                      std::to_string(x));
            cur = r;
            // the crossing's two over slots carry opposite roles
            int os = s == 1 ? 3 : 1;
            int& oc = role[{x, os}];
            if (oc == r)
                throw ValidationError("lnk: arcs cannot be consistently oriented at crossing " +
                                      std::to_string(x));
            oc = -r;
            return true;
        };
        while (progress) {
            progress = false;
            for (const auto& [arc, apps] : appearances) {
                int r0 = role[apps[0]], r1 = role[apps[1]];
                // the two appearances must take opposite roles
                if (r0 != 0 && r1 == 0) {
                    progress = set_role(apps[1].first, apps[1].second, -r0) || progress;
                } else if (r1 != 0 && r0 == 0) {
                    progress = set_role(apps[0].first, apps[0].second, -r1) || progress;
                } else if (r0 != 0 && r1 != 0 && r0 == r1) {
                    throw ValidationError("lnk: arc label " + std::to_string(arc) +
                                          " would start or end twice");
                }
            }
            if (!progress) {
                // free over-over cycle: orient the lowest undecided slot
                for (std::size_t x = 0; x < crossings_.size() && !progress; ++x)
                    if (role[{static_cast<int>(x), 1}] == 0)
                        progress = set_role(static_cast<int>(x), 1, +1);
            }
        }
        for (std::size_t x = 0; x < crossings_.size(); ++x)
            crossings_[x].over_in_at_d = role[{static_cast<int>(x), 3}] == +1;

        // trace components: follow entry -> the strand's exit
        std::map<int, int> next_arc;
        for (std::size_t x = 0; x < crossings_.size(); ++x) {
            const auto& c = crossings_[x];
            next_arc[c.arcs[0]] = c.arcs[2];
            if (c.over_in_at_d)
                next_arc[c.arcs[3]] = c.arcs[1];
            else
                next_arc[c.arcs[1]] = c.arcs[3];
        }
        std::set<int> seen;
        std::vector<std::vector<int>> traced;
        for (const auto& [arc, apps] : appearances) {
            if (seen.count(arc)) continue;
            std::vector<int> cyc;
            int cur = arc;
            while (!seen.count(cur)) {
                seen.insert(cur);
                cyc.push_back(cur);
                auto it = next_arc.find(cur);
                if (it == next_arc.end())
                    throw ValidationError("lnk: arc " + std::to_string(cur) +
                                          " has no continuation");
                cur = it->second;
            }
            if (cur != arc)
                throw ValidationError("lnk: component trace does not close at arc " +
                                      std::to_string(arc));
            traced.push_back(std::move(cyc));
        }
        for (int u : unknotted_)
            if (u < 0 || u >= component_count_)
                throw ValidationError("lnk: unknotted component index out of range");
        if (static_cast<int>(traced.size()) + static_cast<int>(unknotted_.size()) !=
            component_count_)
            throw ValidationError("lnk: diagram has " + std::to_string(traced.size()) +
                                  " traced components plus " + std::to_string(unknotted_.size()) +
                                  " unknotted ones, but \"components\" says " +
                                  std::to_string(component_count_));
        if (static_cast<int>(framings_.size()) != component_count_)
            throw ValidationError("lnk: framing count does not match component count");

        // component indices: traced components in order of smallest arc label
        // fill the indices not reserved for unknotted components
        std::sort(traced.begin(), traced.end(),
                  [](const auto& a, const auto& b) {
                      return *std::min_element(a.begin(), a.end()) <
                             *std::min_element(b.begin(), b.end());
                  });
        std::set<int> unknotted_set(unknotted_.begin(), unknotted_.end());
        if (unknotted_set.size() != unknotted_.size())
            throw ValidationError("lnk: repeated unknotted component index");
        std::vector<int> slots;
        for (int i = 0; i < component_count_; ++i)
            if (!unknotted_set.count(i)) slots.push_back(i);
        for (std::size_t t = 0; t < traced.size(); ++t)
            for (int arc : traced[t]) arc_component_[arc] = slots[t];
    }
};

// linking matrix with the framings on the diagonal plus its signature
struct LinkingData {
    std::vector<std::vector<long>> matrix;
    int signature = 0;
};

namespace detail {

// signature of a symmetric rational matrix by congruence reduction
inline int symmetric_signature(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    std::vector<bool> done(n, false);
    int sig = 0;
    for (;;) {
        // diagonal pivot
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && !m[i][i].is_zero()) {
                piv = i;
                break;
            }
        if (piv < n) {
            sig += m[piv][piv].sign();
            for (std::size_t k = 0; k < n; ++k) {
                if (done[k] || k == piv) continue;
                Rational f = m[piv][k] / m[piv][piv];
                for (std::size_t l = 0; l < n; ++l) {
                    if (done[l] || l == piv) continue;
                    m[k][l] -= f * m[piv][l];
                }
            }
            // column cleanup mirrors row cleanup by symmetry; rebuild row/col
            for (std::size_t k = 0; k < n; ++k) {
                m[piv][k] = Rational(0);
                m[k][piv] = Rational(0);
            }
            done[piv] = true;
            continue;
        }
        // hyperbolic pair
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i) {
            if (done[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (!done[j] && !m[i][j].is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        }
        if (pi == n) break;  // all that remains is zero
        const Rational b = m[pi][pj];
        std::vector<std::vector<Rational>> next = m;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k] || k == pi || k == pj) continue;
            for (std::size_t l = 0; l < n; ++l) {
                if (done[l] || l == pi || l == pj) continue;
                next[k][l] = m[k][l] - (m[pi][k] * m[pj][l] + m[pi][l] * m[pj][k]) / b;
            }
        }
        m = std::move(next);
        for (std::size_t k = 0; k < n; ++k) {
            m[pi][k] = m[k][pi] = Rational(0);
            m[pj][k] = m[k][pj] = Rational(0);
        }
        done[pi] = done[pj] = true;
        // the hyperbolic plane contributes +1 and -1
    }
    return sig;
}

}  // namespace detail

inline LinkingData linking_data(const FramedLink& l) {
    LinkingData d;
    d.matrix = l.linking_matrix();
    std::vector<std::vector<Rational>> q(d.matrix.size());
    for (std::size_t i = 0; i < d.matrix.size(); ++i)
        for (std::size_t j = 0; j < d.matrix.size(); ++j)
            q[i].push_back(Rational(d.matrix[i][j]));
    d.signature = detail::symmetric_signature(std::move(q));
    return d;
}

// first homology of the surgered manifold: cokernel of the linking matrix
inline AbelianGroup surgery_h1(const FramedLink& l) {
    auto m = l.linking_matrix();
    std::vector<std::vector<BigInt>> b(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) b[i].push_back(BigInt(m[i][j]));
    return cokernel(b);
}

}  // namespace tvrt
