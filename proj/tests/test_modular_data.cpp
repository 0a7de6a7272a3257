#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <memory>

#include "tvrt/modular_data.hpp"
#include "tvrt/selftest_algebra.hpp"

using namespace tvrt;

namespace {
constexpr double kPi = 3.141592653589793238462643383279;

const ModularData& data(int r) {
    static std::map<int, std::unique_ptr<ModularData>> cache;
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, std::make_unique<ModularData>(r)).first;
    return *it->second;
}
}  // namespace

TEST_CASE("quantum integers") {
    Level l4(4);
    CHECK(quantum_integer(0, l4).is_zero());
    CHECK(quantum_integer(1, l4) == CycNumber::from_int(16, 1));
    CHECK(quantum_integer(2, l4).to_complex().real() ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    for (int r : {3, 4, 5, 6, 7}) {
        Level l(r);
        for (int n = 0; n <= r; ++n) {
            CHECK(quantum_integer(n, l) == quantum_integer(r - n, l));
            CHECK(quantum_integer(n + r, l) == -quantum_integer(n, l));
        }
    }
    CHECK_THROWS_AS(Level(2), DomainError);
}

TEST_CASE("quantum dimensions") {
    const auto& md5 = data(5);
    CHECK(md5.qdim(0) == CycNumber::from_int(20, 1));
    CHECK(md5.qdim(1).to_complex().real() ==
          doctest::Approx(-(1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));

    // total dimension: omega^2 = sum qdim^2 = r / (2 sin^2(pi/r))
    for (int r = 3; r <= 12; ++r) {
        ModularData md(r, false);
        double want = r / (2.0 * std::pow(std::sin(kPi / r), 2));
        CHECK(md.global_dim().to_complex().real() == doctest::Approx(want).epsilon(1e-10));
        CHECK(std::abs(md.global_dim().to_complex().imag()) < 1e-10);
        CycNumber acc = CycNumber::zero(md.root_order());
        for (Color c = 0; c < md.color_count(); ++c) acc += md.qdim(c) * md.qdim(c);
        CHECK(acc == md.global_dim());
    }
    // r=4: 1 + 2 + 1 = 4 exactly
    CHECK(data(4).global_dim() == CycNumber::from_int(16, 4));
}

TEST_CASE("admissibility") {
    const auto& md5 = data(5);
    for (Color j = 0; j < md5.color_count(); ++j) CHECK(md5.admissible(0, j, j));
    CHECK_FALSE(md5.admissible(0, 0, 1));
    // boundary case a+b+c = 2(r-2)
    CHECK(md5.admissible(2, 2, 2));            // 6 <= 6 at r=5
    CHECK(data(7).admissible(2, 2, 2));        // 6 <= 10
    CHECK_FALSE(data(4).admissible(2, 2, 2));  // 6 > 4
    CHECK_FALSE(md5.admissible(1, 1, 3));      // triangle violated
    CHECK_FALSE(md5.admissible(3, 3, 4));      // 10 > 6
}

TEST_CASE("twists") {
    const auto& md3 = data(3);
    CHECK(md3.twist(0) == CycNumber::from_int(12, 1));
    // twist(1) at r=3 is -A^3 = -i
    auto t1 = md3.twist(1).to_complex();
    CHECK(t1.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(t1.imag() == doctest::Approx(-1.0).epsilon(1e-12));
    // unit modulus, exactly
    for (int r = 3; r <= 8; ++r) {
        ModularData md(r, false);
        for (Color c = 0; c < md.color_count(); ++c) {
            CHECK(md.twist(c).conjugate() * md.twist(c) ==
                  CycNumber::from_int(md.root_order(), 1));
            CHECK(std::abs(std::abs(md.twist(c).to_complex()) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("anomaly constants") {
    const auto& md3 = data(3);
    // Delta_L at r=3 is 1 - i
    CycNumber want = CycNumber::from_int(12, 1) - CycNumber::zeta_power(12, 3);
    CHECK(md3.delta_L() == want);
    CHECK(md3.delta_L() * md3.delta_R() == CycNumber::from_int(12, 2));
    for (int r = 3; r <= 10; ++r) {
        ModularData md(r, false);
        auto [dl, dr] = md.anomaly_constants();
        CHECK(dr == dl.conjugate());
        CHECK(dl * dr == md.global_dim());
        CHECK(std::abs(dl.to_complex()) ==
              doctest::Approx(std::sqrt(md.global_dim().to_complex().real())).epsilon(1e-10));
    }
}

TEST_CASE("fusion matrices") {
    const auto& md4 = data(4);
    auto n0 = md4.fusion_matrix(0);
    for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) CHECK(n0[b][c] == (b == c ? 1 : 0));
    auto n1 = md4.fusion_matrix(1);
    std::vector<std::vector<int>> tri{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    CHECK(n1 == tri);
    auto n2 = md4.fusion_matrix(2);
    std::vector<std::vector<int>> anti{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    CHECK(n2 == anti);
    for (int r : {3, 4, 5, 6}) {
        const auto& md = data(r);
        for (Color a = 0; a < md.color_count(); ++a)
            for (Color b = 0; b < md.color_count(); ++b)
                for (Color c = 0; c < md.color_count(); ++c) {
                    CHECK(md.admissible(a, b, c) == md.admissible(b, a, c));
                    CHECK(md.admissible(a, b, c) == md.admissible(c, b, a));
                }
    }
}

TEST_CASE("verlinde dimensions") {
    for (int r : {3, 4, 5}) {
        const auto& md = data(r);
        BigInt nc(md.color_count());
        CHECK(md.verlinde_dim(1) == nc * nc);
    }
    CHECK(data(4).handlebody_dim(2) == BigInt(10));
    CHECK(data(4).verlinde_dim(2) == BigInt(100));
    CHECK_THROWS_AS(data(4).verlinde_dim(0), DomainError);
}

TEST_CASE("theta nets") {
    const auto& md5 = data(5);
    // theta(a,a,0) is the loop value qdim(a)
    for (Color a = 0; a < md5.color_count(); ++a) CHECK(md5.theta(a, a, 0) == md5.qdim(a));
    for (Color a = 0; a < md5.color_count(); ++a)
        for (Color b = 0; b < md5.color_count(); ++b)
            for (Color c = 0; c < md5.color_count(); ++c) {
                if (!md5.admissible(a, b, c)) continue;
                CHECK(md5.theta(a, b, c) == md5.theta(b, c, a));
                CHECK(md5.theta(a, b, c) == md5.theta(b, a, c));
            }
    CHECK(md5.theta(0, 0, 1).is_zero());
}

TEST_CASE("tet symbol basics") {
    const auto& md5 = data(5);
    CHECK(md5.tet_symbol(0, 0, 0, 0, 0, 0) == CycNumber::from_int(20, 1));
    // degenerate tet with a zero edge collapses to a theta net
    CHECK(md5.tet_symbol(1, 1, 0, 1, 1, 0) == md5.theta(1, 1, 0));
    CHECK(md5.tet_symbol(1, 1, 0, 2, 2, 1) == md5.theta(1, 2, 1));
    CHECK(md5.tet_symbol(2, 2, 0, 2, 2, 2) == md5.theta(2, 2, 2));
}

TEST_CASE("six_j support and normalization") {
    const auto& md5 = data(5);
    CHECK(md5.six_j(0, 0, 0, 0, 0, 0) == CycNumber::from_int(20, 1));
    CHECK(md5.six_j(0, 0, 1, 0, 0, 0).is_zero());  // inadmissible face
    CHECK(md5.six_j(1, 1, 1, 1, 1, 1).is_zero());  // odd faces
    // r=3 spot value: S(1,1,0,1,1,0) = theta(1,1,0)^{-3} = (-[2])^{-3} = -1 at r=3
    const auto& md3 = data(3);
    CHECK(md3.six_j(1, 1, 0, 1, 1, 0) == CycNumber::from_int(12, -1));
}

TEST_CASE("tetrahedral symmetry exact") {
    for (int r : {3, 4, 5, 6}) {
        CAPTURE(r);
        CHECK(selftest::check_tetrahedral_symmetry(data(r)) == 0);
    }
}

TEST_CASE("pentagon and orthogonality contracts") {
    for (int r : {3, 4, 5}) {
        CAPTURE(r);
        auto rep = selftest::check_move_contracts(data(r), 120, 42);
        CHECK(rep.pentagon_checked > 0);
        CHECK(rep.orthogonality_checked > 0);
        CHECK(rep.pentagon_violations == 0);
        CHECK(rep.orthogonality_violations == 0);
    }
    // 500 random admissible boundary configurations at r=5
    auto rep = selftest::check_move_contracts(data(5), 500, 7);
    CHECK(rep.pentagon_checked == 500);
    CHECK(rep.pentagon_violations == 0);
}
