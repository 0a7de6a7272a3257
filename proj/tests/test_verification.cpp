#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "tvrt/verification.hpp"

using namespace tvrt;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("bundled data files match the census constructions") {
    for (const auto& e : census()) {
        CAPTURE(e.name);
        Triangulation t = Triangulation::parse(slurp("data/" + e.name + ".tri"));
        CHECK(t == e.triangulation);
    }
    Triangulation cs = Triangulation::parse(slurp("data/RP3_RP3.tri"));
    CHECK(cs == rp3_connected_sum_rp3());
    // link files
    CHECK(FramedLink::parse(slurp("data/empty.lnk")).component_count() == 0);
    for (int p = 0; p <= 5; ++p) {
        FramedLink u = FramedLink::parse(slurp("data/unknot_" + std::to_string(p) + ".lnk"));
        CHECK(u.component_count() == 1);
        CHECK(u.framings()[0] == p);
    }
    FramedLink h = FramedLink::parse(slurp("data/hopf.lnk"));
    CHECK(h.component_count() == 2);
    CHECK(linking_data(h).matrix == std::vector<std::vector<long>>{{0, 1}, {1, 0}});
    FramedLink chain = FramedLink::parse(slurp("data/L4_1_chain.lnk"));
    CHECK(surgery_h1(chain) == AbelianGroup::cyclic(4));
}

TEST_CASE("state sum equals modulus squared on every bundled pair") {
    // the closed-manifold identity Z_TV(M) = |tau(M)|^2, checked exactly
    for (int r : {3, 4, 5, 6}) {
        ModularData md(r);
        for (const auto& pair : bundled_pairs()) {
            CAPTURE(r);
            CAPTURE(pair.name);
            VerificationReport rep = verify_pair(pair, md);
            CHECK(rep.equal);
            CHECK(rep.numeric_residual < 1e-10);
            // the common value is real and nonnegative
            CHECK(rep.tv_value.conjugate() == rep.tv_value);
            CHECK(rep.tv_value.to_complex().real() >= -1e-12);
        }
    }
}

TEST_CASE("spot values") {
    {
        ModularData md(4);
        auto pairs = bundled_pairs();
        VerificationReport rep = verify_pair(pairs[0], md);  // S3 at r=4
        CHECK(rep.tv_value == CycNumber::from_rational(16, Rational(1, 4)));
        CHECK(rep.rt_modsq == CycNumber::from_rational(16, Rational(1, 4)));
    }
    {
        ModularData md(5);
        for (const auto& p : bundled_pairs())
            if (p.name == "S2xS1") {
                VerificationReport rep = verify_pair(p, md);
                CHECK(rep.tv_value == CycNumber::from_int(20, 1));
            }
    }
}

TEST_CASE("suite runner") {
    auto reports = verify_suite({3, 4});
    CHECK(reports.size() == 12);
    for (const auto& rep : reports) {
        CAPTURE(rep.name);
        CAPTURE(rep.level);
        CHECK(rep.equal);
    }
    CHECK(verify_suite({}).empty());
}

TEST_CASE("the engines distinguish lens spaces with equal homology") {
    // L(5,1) and L(5,2) have the same homology but are not homeomorphic;
    // both sides of the identity tell them apart at r=5
    Triangulation l51 = lens_space(5, 1), l52 = lens_space(5, 2);
    CHECK(homology_h1(l52) == AbelianGroup::cyclic(5));
    // surgery chain with framings (3,2): continued fraction 3 - 1/2 = 5/2
    FramedLink chain = FramedLink::from_pd(2, {{1, 3, 2, 4}, {3, 1, 4, 2}}, {3, 2});
    CHECK(surgery_h1(chain) == AbelianGroup::cyclic(5));
    for (int r : {3, 4, 5, 6}) {
        CAPTURE(r);
        ModularData md(r);
        CycNumber z52 = tv_state_sum(l52, md).value;
        CycNumber m2 = modulus_squared(rt_invariant(chain, md), md);
        CHECK(z52 == m2);  // the identity on a pair outside the bundled suite
        CycNumber z51 = tv_state_sum(l51, md).value;
        if (r == 5) {
            CHECK(z51 == CycNumber::from_rational(20, Rational(1, 2)));
            CHECK(z52.is_zero());
        } else {
            CHECK(z51 == z52);
        }
    }
}

TEST_CASE("identity continues to hold above the required levels") {
    for (int r : {7, 8}) {
        ModularData md(r);
        for (const auto& pair : bundled_pairs()) {
            if (pair.name != "S3" && pair.name != "RP3" && pair.name != "S2xS1") continue;
            CAPTURE(r);
            CAPTURE(pair.name);
            CHECK(verify_pair(pair, md).equal);
        }
    }
}

TEST_CASE("homology consistency is enforced") {
    ManifoldPair bad{"bad", census_entry("L3_1"), framed_unknot(7), AbelianGroup::cyclic(3)};
    ModularData md(3);
    CHECK_THROWS_AS(verify_pair(bad, md), ValidationError);
    ManifoldPair bad2{"bad2", census_entry("L3_1"), framed_unknot(3), AbelianGroup::cyclic(5)};
    CHECK_THROWS_AS(verify_pair(bad2, md), ValidationError);
}

TEST_CASE("reports are deterministic across worker counts") {
    ModularData md(5);
    auto pairs = bundled_pairs();
    TvOptions one, many;
    many.threads = 3;
    for (const auto& p : pairs) {
        auto a = verify_pair(p, md, one);
        auto b = verify_pair(p, md, many);
        CHECK(a.tv_value == b.tv_value);
        CHECK(a.rt_modsq == b.rt_modsq);
    }
}
