#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "tvrt/modular_data.hpp"

namespace tvrt {

// Element of the Temperley-Lieb algebra TL_n over the cyclotomic field, in
// the diagram basis. Points 0..n-1 are the bottom boundary (left to right),
// points n..2n-1 the top. A diagram is the partner array of its planar
// perfect matching. Closed loops evaluate to delta = qdim(1) = -[2].
struct TlElement {
    int strands = 0;
    std::map<std::vector<int>, CycNumber> terms;
};

namespace tl {

inline std::vector<int> identity_diagram(int n) {
    std::vector<int> m(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)] = n + i;
        m[static_cast<std::size_t>(n + i)] = i;
    }
    return m;
}

inline TlElement identity(int n, const ModularData& md) {
    TlElement e;
    e.strands = n;
    e.terms[identity_diagram(n)] = CycNumber::from_int(md.root_order(), 1);
    return e;
}

// cup-cap generator e_i: bottom i,i+1 joined, top n+i,n+i+1 joined
inline TlElement generator(int n, int i, const ModularData& md) {
    TlElement e;
    e.strands = n;
    std::vector<int> m = identity_diagram(n);
    m[static_cast<std::size_t>(i)] = i + 1;
    m[static_cast<std::size_t>(i + 1)] = i;
    m[static_cast<std::size_t>(n + i)] = n + i + 1;
    m[static_cast<std::size_t>(n + i + 1)] = n + i;
    e.terms[m] = CycNumber::from_int(md.root_order(), 1);
    return e;
}

// stack b on top of a; a's top boundary is b's bottom boundary
inline TlElement multiply(const TlElement& a, const TlElement& b, const ModularData& md) {
    if (a.strands != b.strands) throw DomainError("TL: strand count mismatch");
    const int n = a.strands;
    const CycNumber delta = md.qdim(1);
    TlElement out;
    out.strands = n;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            // output points: a-bottom 0..n-1, b-top n..2n-1
            // interface i: a-top point n+i glued to b-bottom point i
            std::vector<int> comp(static_cast<std::size_t>(2 * n), -1);
            std::vector<bool> iface_seen(static_cast<std::size_t>(n), false);
            for (int start = 0; start < 2 * n; ++start) {
                if (comp[static_cast<std::size_t>(start)] != -1) continue;
                int side = start < n ? 0 : 1;  // 0: inside a, 1: inside b
                int pt = start;
                for (;;) {
                    if (side == 0) {
                        int q = ma[static_cast<std::size_t>(pt)];
                        if (q < n) {
                            comp[static_cast<std::size_t>(start)] = q;
                            comp[static_cast<std::size_t>(q)] = start;
                            break;
                        }
                        iface_seen[static_cast<std::size_t>(q - n)] = true;
                        side = 1;
                        pt = q - n;
                    } else {
                        int q = mb[static_cast<std::size_t>(pt)];
                        if (q >= n) {
                            comp[static_cast<std::size_t>(start)] = q;
                            comp[static_cast<std::size_t>(q)] = start;
                            break;
                        }
                        iface_seen[static_cast<std::size_t>(q)] = true;
                        side = 0;
                        pt = n + q;
                    }
                }
            }
            // closed loops live entirely on the interface
            int loops = 0;
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            for (int i = 0; i < n; ++i) {
                if (iface_seen[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(i)])
                    continue;
                ++loops;
                int p = i;
                while (!used[static_cast<std::size_t>(p)]) {
                    used[static_cast<std::size_t>(p)] = true;
                    int p2 = ma[static_cast<std::size_t>(n + p)] - n;  // a-edge
                    used[static_cast<std::size_t>(p2)] = true;
                    p = mb[static_cast<std::size_t>(p2)];  // b-edge
                }
            }
            CycNumber coeff = ca * cb;
            for (int l = 0; l < loops; ++l) coeff *= delta;
            auto it = out.terms.find(comp);
            if (it == out.terms.end())
                out.terms.emplace(std::move(comp), std::move(coeff));
            else {
                it->second += coeff;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    }
    return out;
}

inline TlElement scale(TlElement e, const CycNumber& c) {
    for (auto& [m, v] : e.terms) v *= c;
    return e;
}

inline TlElement add(const TlElement& a, const TlElement& b) {
    TlElement out = a;
    for (const auto& [m, v] : b.terms) {
        auto it = out.terms.find(m);
        if (it == out.terms.end())
            out.terms.emplace(m, v);
        else {
            it->second += v;
            if (it->second.is_zero()) out.terms.erase(it);
        }
    }
    return out;
}

// embed TL_{n-1} into TL_n by appending a straight strand on the right
inline TlElement embed(const TlElement& e) {
    const int n = e.strands + 1;
    TlElement out;
    out.strands = n;
    for (const auto& [m, c] : e.terms) {
        std::vector<int> big(static_cast<std::size_t>(2 * n));
        auto relabel = [&](int p) { return p < e.strands ? p : p + 1; };
        for (int p = 0; p < 2 * e.strands; ++p)
            big[static_cast<std::size_t>(relabel(p))] = relabel(m[static_cast<std::size_t>(p)]);
        big[static_cast<std::size_t>(n - 1)] = 2 * n - 1;
        big[static_cast<std::size_t>(2 * n - 1)] = n - 1;
        out.terms.emplace(std::move(big), c);
    }
    return out;
}

namespace detail {

inline const TlElement& jones_wenzl_unlocked(int n, const ModularData& md,
                                             std::map<std::pair<int, int>, TlElement>& cache) {
    auto key = std::make_pair(md.r(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (n > md.r() - 2)
        throw DomainError("jones_wenzl: strand count exceeds the admissible color range");
    TlElement p;
    if (n == 0) {
        p.strands = 0;
        p.terms[{}] = CycNumber::from_int(md.root_order(), 1);
    } else if (n == 1) {
        p = identity(1, md);
    } else {
        const TlElement& prev = jones_wenzl_unlocked(n - 1, md, cache);
        TlElement wide = embed(prev);
        CycNumber coeff = md.qint(n - 1) * md.qint(n).inverse();
        TlElement mid = multiply(wide, generator(n, n - 2, md), md);
        mid = multiply(mid, wide, md);
        p = add(wide, scale(std::move(mid), coeff));
    }
    return cache.emplace(key, std::move(p)).first->second;
}

}  // namespace detail
}  // namespace tl

// Jones-Wenzl projector p_n in the diagram basis, via the Wenzl recursion
//   p_n = p_{n-1} + ([n-1]/[n]) p_{n-1} e_{n-1} p_{n-1}
// (sign convention matching loop value -[2]). Cached per level.
inline const TlElement& jones_wenzl(int n, const ModularData& md) {
    static std::map<std::pair<int, int>, TlElement> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return tl::detail::jones_wenzl_unlocked(n, md, cache);
}

}  // namespace tvrt
