#pragma once

#include <string>
#include <vector>

#include "tvrt/census.hpp"
#include "tvrt/rt_engine.hpp"
#include "tvrt/tv_engine.hpp"

namespace tvrt {

// A closed manifold given both ways: as a triangulation and as a surgery
// presentation. The homology field ties the two descriptions together.
struct ManifoldPair {
    std::string name;
    Triangulation triangulation;
    FramedLink surgery;
    AbelianGroup expected_h1;
};

struct VerificationReport {
    std::string name;
    int level = 0;
    CycNumber tv_value;
    CycNumber rt_modsq;
    bool equal = false;
    double numeric_residual = 0.0;
    double tv_seconds = 0.0;
    double rt_seconds = 0.0;
};

inline FramedLink framed_unknot(long f) { return FramedLink::from_pd(1, {}, {f}, {0}); }

// the bundled verification targets: both descriptions of each manifold
inline std::vector<ManifoldPair> bundled_pairs() {
    std::vector<ManifoldPair> out;
    out.push_back({"S3", census_entry("S3_2tet"), FramedLink::from_pd(0, {}, {}),
                   AbelianGroup::free(0)});
    out.push_back({"RP3", census_entry("RP3"), framed_unknot(2), AbelianGroup::cyclic(2)});
    out.push_back({"L3_1", census_entry("L3_1"), framed_unknot(3), AbelianGroup::cyclic(3)});
    out.push_back({"L4_1", census_entry("L4_1"), framed_unknot(4), AbelianGroup::cyclic(4)});
    out.push_back({"L5_1", census_entry("L5_1"), framed_unknot(5), AbelianGroup::cyclic(5)});
    out.push_back({"S2xS1", census_entry("S2xS1"), framed_unknot(0), AbelianGroup::cyclic(0)});
    return out;
}

// Check Z_TV(M) = |tau(M)|^2 exactly for one pair at one level. The pair's
// homology consistency is validated first; the comparison itself is exact
// equality in the cyclotomic field, the numeric residual is diagnostic only.
inline VerificationReport verify_pair(const ManifoldPair& pair, const ModularData& md,
                                      const TvOptions& opts = {}) {
    if (homology_h1(pair.triangulation) != pair.expected_h1)
        throw ValidationError("verify_pair: triangulation homology of " + pair.name +
                              " is " + homology_h1(pair.triangulation).to_string() +
                              ", expected " + pair.expected_h1.to_string());
    if (surgery_h1(pair.surgery) != pair.expected_h1)
        throw ValidationError("verify_pair: surgery homology of " + pair.name + " is " +
                              surgery_h1(pair.surgery).to_string() + ", expected " +
                              pair.expected_h1.to_string());
    VerificationReport rep;
    rep.name = pair.name;
    rep.level = md.r();
    StateSumResult tv = tv_state_sum(pair.triangulation, md, opts);
    rep.tv_value = tv.value;
    rep.tv_seconds = tv.wall_seconds;
    auto t0 = std::chrono::steady_clock::now();
    InvariantValue tau = rt_invariant(pair.surgery, md);
    rep.rt_modsq = modulus_squared(tau, md);
    rep.rt_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.equal = rep.tv_value == rep.rt_modsq;
    rep.numeric_residual = std::abs(rep.tv_value.to_complex() - rep.rt_modsq.to_complex());
    return rep;
}

inline std::vector<VerificationReport> verify_suite(const std::vector<int>& levels,
                                                    const TvOptions& opts = {}) {
    std::vector<VerificationReport> out;
    auto pairs = bundled_pairs();
    for (int r : levels) {
        ModularData md(r);
        for (const auto& p : pairs) out.push_back(verify_pair(p, md, opts));
    }
    return out;
}

}  // namespace tvrt
