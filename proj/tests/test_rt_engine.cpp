#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <memory>

#include "tvrt/rt_engine.hpp"

using namespace tvrt;

namespace {
const ModularData& data(int r) {
    static std::map<int, std::unique_ptr<ModularData>> cache;
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, std::make_unique<ModularData>(r)).first;
    return *it->second;
}

FramedLink empty_link() { return FramedLink::from_pd(0, {}, {}); }
FramedLink unknot(long f) { return FramedLink::from_pd(1, {}, {f}, {0}); }
FramedLink hopf(long f1, long f2) {
    return FramedLink::from_pd(2, {{1, 3, 2, 4}, {3, 1, 4, 2}}, {f1, f2});
}
}  // namespace

TEST_CASE("sphere normalization") {
    for (int r : {3, 4, 5, 6}) {
        CAPTURE(r);
        const auto& md = data(r);
        InvariantValue tau = rt_invariant(empty_link(), md);
        CHECK(tau.reduced == CycNumber::from_int(md.root_order(), 1));
        CHECK(tau.omega_power == -1);
        CHECK(tau.anomaly_power == 0);
        CHECK(modulus_squared(tau, md) == md.global_dim().inverse());
    }
}

TEST_CASE("blow-ups of the empty link reproduce the sphere") {
    for (int r : {3, 4, 5, 6}) {
        CAPTURE(r);
        const auto& md = data(r);
        InvariantValue base = rt_invariant(empty_link(), md);
        for (int sign : {+1, -1}) {
            InvariantValue tau = rt_invariant(unknot(sign), md);
            CHECK(invariant_equal(tau, base, md));
            CHECK(modulus_squared(tau, md) == md.global_dim().inverse());
        }
    }
}

TEST_CASE("product of sphere and circle") {
    for (int r : {3, 4, 5, 6}) {
        CAPTURE(r);
        const auto& md = data(r);
        InvariantValue tau = rt_invariant(unknot(0), md);
        CHECK(tau.reduced == md.global_dim());
        CHECK(tau.omega_power == -2);
        CHECK(tau.anomaly_power == 0);
        CHECK(modulus_squared(tau, md) == CycNumber::from_int(md.root_order(), 1));
    }
}

TEST_CASE("kirby move I leaves the invariant exactly unchanged") {
    std::vector<FramedLink> bases;
    bases.push_back(empty_link());
    bases.push_back(unknot(0));
    bases.push_back(unknot(3));
    bases.push_back(hopf(0, 0));
    bases.push_back(hopf(5, 1));
    for (int r : {3, 4, 5, 6}) {
        CAPTURE(r);
        const auto& md = data(r);
        for (std::size_t i = 0; i < bases.size(); ++i) {
            CAPTURE(i);
            InvariantValue tau = rt_invariant(bases[i], md);
            for (int sign : {+1, -1}) {
                InvariantValue blown = rt_invariant(with_blowup(bases[i], sign), md);
                CHECK(invariant_equal(blown, tau, md));
                CHECK(modulus_squared(blown, md) == modulus_squared(tau, md));
            }
        }
    }
}

TEST_CASE("kirby move II spot check: two chain presentations of a lens space") {
    // unknot with framing 4 and the (5,1)-framed hopf chain both give L(4,1)
    for (int r : {3, 4, 5, 6}) {
        CAPTURE(r);
        const auto& md = data(r);
        InvariantValue a = rt_invariant(unknot(4), md);
        InvariantValue b = rt_invariant(hopf(5, 1), md);
        CHECK(surgery_h1(unknot(4)) == surgery_h1(hopf(5, 1)));
        CHECK(modulus_squared(a, md) == modulus_squared(b, md));
    }
}

TEST_CASE("numeric embedding of invariant values") {
    for (int r : {3, 5}) {
        const auto& md = data(r);
        for (long f : {0L, 2L, 5L}) {
            InvariantValue tau = rt_invariant(unknot(f), md);
            auto direct =
                invariant_numeric(tau.reduced, tau.omega_power, tau.anomaly_power, md);
            CHECK(std::abs(tau.numeric - direct) < 1e-12);
            // |tau|^2 matches the exact modulus squared
            double m2 = modulus_squared(tau, md).to_complex().real();
            CHECK(std::abs(std::norm(tau.numeric) - m2) < 1e-8);
        }
    }
}

TEST_CASE("modulus squared is real nonnegative and conjugation fixed") {
    for (int r : {3, 4, 5}) {
        const auto& md = data(r);
        for (long f : {-3L, 0L, 1L, 4L, 5L}) {
            InvariantValue tau = rt_invariant(unknot(f), md);
            CycNumber m2 = modulus_squared(tau, md);
            CHECK(m2.conjugate() == m2);
            CHECK(m2.to_complex().real() >= -1e-12);
            CHECK(std::abs(m2.to_complex().imag()) < 1e-10);
        }
    }
}

TEST_CASE("anomaly exponent bookkeeping") {
    const auto& md = data(5);
    InvariantValue tau = rt_invariant(unknot(7), md);
    CHECK(tau.omega_power == -2);
    CHECK(tau.anomaly_power == -1);  // signature +1
    InvariantValue taun = rt_invariant(unknot(-7), md);
    CHECK(taun.anomaly_power == 1);
    // modulus squared ignores anomaly shifts entirely
    InvariantValue shifted = tau;
    shifted.anomaly_power += 2;
    CHECK(modulus_squared(shifted, md) == modulus_squared(tau, md));
}
