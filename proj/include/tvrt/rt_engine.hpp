#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "tvrt/link.hpp"
#include "tvrt/skein.hpp"

namespace tvrt {

// Surgery invariant value. omega itself (the positive square root of the
// global dimension) is irrational in general and is never materialized; it
// is carried as an integer exponent, as is the unit anomaly phase
// Delta_L / omega. The reduced part lives in the cyclotomic field.
struct InvariantValue {
    CycNumber reduced;
    long omega_power = 0;    // exponent of omega
    long anomaly_power = 0;  // exponent of Delta_L * omega^{-1}
    std::complex<double> numeric;
};

inline std::complex<double> invariant_numeric(const CycNumber& reduced, long omega_power,
                                              long anomaly_power, const ModularData& md) {
    const double omega = std::sqrt(md.global_dim().to_complex().real());
    const std::complex<double> phase = md.delta_L().to_complex() / omega;
    std::complex<double> v = reduced.to_complex();
    v *= std::pow(omega, static_cast<double>(omega_power));
    v *= std::pow(phase, std::complex<double>(static_cast<double>(anomaly_power), 0.0));
    return v;
}

// tau(M) for M presented by surgery on the framed link:
//   tau = omega^{-N-1} (Delta_L omega^{-1})^{-sigma(L)}
//         sum_colorings prod_i qdim(c_i) <L(c)>
// calibrated so that tau(S^3) = omega^{-1} and a disjoint +-1 framed unknot
// (a blow-up) leaves the value unchanged.
inline InvariantValue rt_invariant(const FramedLink& link, const ModularData& md,
                                   std::uint64_t crossing_guard = 65536) {
    const int n = link.component_count();
    const LinkingData ld = linking_data(link);
    InvariantValue out;
    out.omega_power = -static_cast<long>(n) - 1;
    out.anomaly_power = -static_cast<long>(ld.signature);

    // The sum over colorings factorizes over split 0-crossing unknot
    // components: each contributes sum_c qdim(c)^2 twist(c)^f on its own.
    std::vector<bool> is_unknotted(static_cast<std::size_t>(n), false);
    for (int u : link.unknotted_components()) is_unknotted[static_cast<std::size_t>(u)] = true;
    std::vector<int> traced;
    for (int i = 0; i < n; ++i)
        if (!is_unknotted[static_cast<std::size_t>(i)]) traced.push_back(i);

    const int nc = md.color_count();
    CycNumber sum = CycNumber::from_int(md.root_order(), 1);
    for (int u : link.unknotted_components()) {
        CycNumber factor = CycNumber::zero(md.root_order());
        long f = link.framings()[static_cast<std::size_t>(u)];
        for (Color c = 0; c < nc; ++c)
            factor += md.qdim(c) * md.qdim(c) * md.twist(c).pow(f);
        sum *= factor;
    }

    if (!traced.empty()) {
        CycNumber traced_sum = CycNumber::zero(md.root_order());
        std::vector<Color> coloring(static_cast<std::size_t>(n), 0);
        std::vector<Color> odo(traced.size(), 0);
        bool running = true;
        while (running) {
            for (std::size_t k = 0; k < traced.size(); ++k)
                coloring[static_cast<std::size_t>(traced[k])] = odo[k];
            // evaluate with unknotted components colored 0 (they drop out)
            for (int i = 0; i < n; ++i)
                if (is_unknotted[static_cast<std::size_t>(i)]) coloring[static_cast<std::size_t>(i)] = 0;
            // color-0 unknotted components contribute a factor 1 here; their
            // true factor was split off above
            CycNumber term = colored_link_value(link, coloring, md, crossing_guard);
            for (int t : traced) term *= md.qdim(coloring[static_cast<std::size_t>(t)]);
            traced_sum += term;
            std::size_t pos = 0;
            while (pos < odo.size()) {
                if (++odo[pos] < nc) break;
                odo[pos] = 0;
                ++pos;
            }
            running = pos < odo.size();
        }
        sum *= traced_sum;
    }

    out.reduced = sum;
    out.numeric = invariant_numeric(out.reduced, out.omega_power, out.anomaly_power, md);
    return out;
}

// |tau|^2 in the cyclotomic field: the anomaly phase is exactly unimodular
// and omega powers pair into powers of the global dimension.
inline CycNumber modulus_squared(const InvariantValue& v, const ModularData& md) {
    CycNumber out = v.reduced * v.reduced.conjugate();
    if (v.omega_power >= 0)
        out *= md.global_dim().pow(v.omega_power);
    else
        out *= md.global_dim().inverse().pow(-v.omega_power);
    return out;
}

// exact equality of invariant values across different exponent bookkeeping
inline bool invariant_equal(const InvariantValue& a, const InvariantValue& b,
                            const ModularData& md) {
    // value = u * omega^k with u = reduced * Delta_L^{anomaly}, k = omega - anomaly
    auto normalize = [&](const InvariantValue& v) {
        CycNumber u = v.reduced;
        if (v.anomaly_power >= 0)
            u *= md.delta_L().pow(v.anomaly_power);
        else
            u *= md.delta_L().inverse().pow(-v.anomaly_power);
        return std::make_pair(u, v.omega_power - v.anomaly_power);
    };
    auto [ua, ka] = normalize(a);
    auto [ub, kb] = normalize(b);
    if (ua.is_zero() || ub.is_zero()) return ua.is_zero() && ub.is_zero();
    long diff = ka - kb;
    if (diff % 2 == 0) {
        CycNumber lhs = ua;
        if (diff >= 0)
            lhs *= md.global_dim().pow(diff / 2);
        else
            lhs *= md.global_dim().inverse().pow(-diff / 2);
        return lhs == ub;
    }
    // odd omega-power difference: compare squares plus a numeric sign check
    CycNumber lhs = ua * ua;
    long d2 = diff;  // lhs * omega^{2*ka} vs rhs * omega^{2*kb}
    if (d2 >= 0)
        lhs *= md.global_dim().pow(d2);
    else
        lhs *= md.global_dim().inverse().pow(-d2);
    if (!(lhs == ub * ub)) return false;
    return std::abs(invariant_numeric(a.reduced, a.omega_power, a.anomaly_power, md) -
                    invariant_numeric(b.reduced, b.omega_power, b.anomaly_power, md)) < 1e-8;
}

// blow-up: a disjoint unknot with framing +-1 appended to the surgery link
inline FramedLink with_blowup(const FramedLink& link, int sign) {
    std::vector<std::array<int, 4>> pd;
    for (const auto& c : link.crossings()) pd.push_back(c.arcs);
    std::vector<long> framings = link.framings();
    framings.push_back(sign);
    std::vector<int> unknotted = link.unknotted_components();
    unknotted.push_back(link.component_count());
    return FramedLink::from_pd(link.component_count() + 1, pd, framings, unknotted);
}

}  // namespace tvrt
