// Command-line front end: exact Turaev-Viro and Reshetikhin-Turaev
// invariants of closed oriented 3-manifolds at SU_q(2) roots of unity.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tvrt/census.hpp"
#include "tvrt/rt_engine.hpp"
#include "tvrt/selftest.hpp"
#include "tvrt/tv_engine.hpp"
#include "tvrt/verification.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tvrt;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json cyc_json(const CycNumber& v) {
    ordered_json j;
    j["order"] = v.valid() ? v.order() : 0;
    auto coeffs = ordered_json::array();
    if (v.valid())
        for (const auto& c : v.coeff_vector()) coeffs.push_back(c.to_string());
    j["coeffs"] = coeffs;
    j["string"] = v.valid() ? v.to_string() : "0";
    auto z = v.valid() ? v.to_complex() : std::complex<double>{};
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

void print_cyc(const std::string& label, const CycNumber& v) {
    auto z = v.to_complex();
    std::printf("%s = %s\n", label.c_str(), v.to_string().c_str());
    if (std::abs(z.imag()) < 1e-12)
        std::printf("%*s ~ %.12g\n", static_cast<int>(label.size()), "", z.real());
    else
        std::printf("%*s ~ %.12g %+.12gi\n", static_cast<int>(label.size()), "", z.real(),
                    z.imag());
}

int cmd_data(int level, bool as_json) {
    ModularData md(level, false);
    if (as_json) {
        ordered_json j;
        j["level"] = level;
        j["root_order"] = md.root_order();
        j["colors"] = md.color_count();
        auto qd = ordered_json::array(), tw = ordered_json::array();
        for (Color c = 0; c < md.color_count(); ++c) {
            qd.push_back(cyc_json(md.qdim(c)));
            tw.push_back(cyc_json(md.twist(c)));
        }
        j["qdims"] = qd;
        j["twists"] = tw;
        auto fusion = ordered_json::array();
        for (Color a = 0; a < md.color_count(); ++a) fusion.push_back(md.fusion_matrix(a));
        j["fusion"] = fusion;
        j["global_dim"] = cyc_json(md.global_dim());
        j["delta_L"] = cyc_json(md.delta_L());
        j["delta_R"] = cyc_json(md.delta_R());
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::printf("level r = %d  (root order %d, %d colors)\n", level, md.root_order(),
                md.color_count());
    for (Color c = 0; c < md.color_count(); ++c)
        print_cyc("qdim(" + std::to_string(c) + ")", md.qdim(c));
    for (Color c = 0; c < md.color_count(); ++c)
        print_cyc("twist(" + std::to_string(c) + ")", md.twist(c));
    print_cyc("omega^2", md.global_dim());
    print_cyc("Delta_L", md.delta_L());
    print_cyc("Delta_R", md.delta_R());
    std::printf("admissible triples:\n");
    for (Color a = 0; a < md.color_count(); ++a)
        for (Color b = a; b < md.color_count(); ++b)
            for (Color c = b; c < md.color_count(); ++c)
                if (md.admissible(a, b, c)) std::printf("  (%d,%d,%d)\n", a, b, c);
    return kExitOk;
}

ordered_json state_sum_json(const StateSumResult& res) {
    ordered_json j;
    j["value"] = cyc_json(res.value);
    j["numeric_re"] = res.numeric.real();
    j["numeric_im"] = res.numeric.imag();
    j["colorings_total"] = res.colorings_total;
    j["colorings_admissible"] = res.colorings_admissible;
    j["wall_seconds"] = res.wall_seconds;
    return j;
}

int cmd_tv(int level, const std::string& tri_path, const std::string& method, int threads,
           std::uint64_t ceiling, bool as_json) {
    Triangulation tri = Triangulation::parse(read_file(tri_path));
    ModularData md(level);
    TvOptions opts;
    opts.method = method == "brute" ? TvMethod::kBrute : TvMethod::kPruned;
    opts.threads = threads;
    opts.ceiling = ceiling;
    StateSumResult res = tv_state_sum(tri, md, opts);
    if (as_json) {
        ordered_json j = state_sum_json(res);
        j["level"] = level;
        j["tetrahedra"] = tri.tet_count();
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("triangulation: %d tetrahedra, %ld edges, method %s\n", tri.tet_count(),
                    tri.edge_count(), method.c_str());
        print_cyc("Z", res.value);
        std::printf("colorings: %llu total, %llu admissible, %.3fs\n",
                    static_cast<unsigned long long>(res.colorings_total),
                    static_cast<unsigned long long>(res.colorings_admissible), res.wall_seconds);
    }
    return kExitOk;
}

ordered_json invariant_json(const InvariantValue& tau) {
    ordered_json j;
    j["reduced"] = cyc_json(tau.reduced);
    j["omega_power"] = tau.omega_power;
    j["anomaly_power"] = tau.anomaly_power;
    j["numeric_re"] = tau.numeric.real();
    j["numeric_im"] = tau.numeric.imag();
    return j;
}

int cmd_rt(int level, const std::string& link_path, bool as_json) {
    FramedLink link = FramedLink::parse(read_file(link_path));
    ModularData md(level);
    InvariantValue tau = rt_invariant(link, md);
    CycNumber m2 = modulus_squared(tau, md);
    if (as_json) {
        ordered_json j = invariant_json(tau);
        j["level"] = level;
        j["components"] = link.component_count();
        j["signature"] = linking_data(link).signature;
        j["modulus_squared"] = cyc_json(m2);
        std::cout << j.dump(2) << "\n";
    } else {
        auto ld = linking_data(link);
        std::printf("link: %d components, %zu crossings, signature %d\n", link.component_count(),
                    link.crossings().size(), ld.signature);
        print_cyc("reduced", tau.reduced);
        std::printf("omega_power = %ld, anomaly_power = %ld\n", tau.omega_power,
                    tau.anomaly_power);
        std::printf("tau ~ %.12g %+.12gi\n", tau.numeric.real(), tau.numeric.imag());
        print_cyc("|tau|^2", m2);
    }
    return kExitOk;
}

ordered_json report_json(const VerificationReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["level"] = rep.level;
    j["tv_value"] = cyc_json(rep.tv_value);
    j["rt_modulus_squared"] = cyc_json(rep.rt_modsq);
    j["equal"] = rep.equal;
    j["numeric_residual"] = rep.numeric_residual;
    j["tv_seconds"] = rep.tv_seconds;
    j["rt_seconds"] = rep.rt_seconds;
    return j;
}

int cmd_verify(int level, const std::string& tri_path, const std::string& link_path, bool suite,
               int threads, std::uint64_t ceiling, bool as_json) {
    TvOptions opts;
    opts.threads = threads;
    opts.ceiling = ceiling;
    std::vector<VerificationReport> reports;
    ModularData md(level);
    if (suite) {
        for (const auto& p : bundled_pairs()) reports.push_back(verify_pair(p, md, opts));
    } else {
        Triangulation tri = Triangulation::parse(read_file(tri_path));
        FramedLink link = FramedLink::parse(read_file(link_path));
        AbelianGroup h1 = homology_h1(tri);
        if (surgery_h1(link) != h1)
            throw ValidationError("verify: the triangulation has H1 = " + h1.to_string() +
                                  " but the surgery link gives H1 = " +
                                  surgery_h1(link).to_string() +
                                  "; these do not present the same manifold");
        ManifoldPair pair{"input", tri, link, h1};
        reports.push_back(verify_pair(pair, md, opts));
    }
    bool all_ok = true;
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& rep : reports) {
            arr.push_back(report_json(rep));
            all_ok = all_ok && rep.equal;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& rep : reports) {
            all_ok = all_ok && rep.equal;
            std::printf("%s %-6s r=%d  Z_TV = %s  |tau|^2 = %s  residual %.2e\n",
                        rep.equal ? "PASS" : "FAIL", rep.name.c_str(), rep.level,
                        rep.tv_value.to_string().c_str(), rep.rt_modsq.to_string().c_str(),
                        rep.numeric_residual);
        }
    }
    return all_ok ? kExitOk : kExitFail;
}

int cmd_selftest(int max_level) {
    bool all_ok = true;
    for (const auto& res : selftest::run_selftests(max_level)) {
        all_ok = all_ok && res.passed;
        std::printf("%s %-24s %ld checks in %.2fs%s%s\n", res.passed ? "PASS" : "FAIL",
                    res.name.c_str(), res.checks, res.seconds, res.detail.empty() ? "" : "  -- ",
                    res.detail.c_str());
    }
    return all_ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Turaev-Viro / Reshetikhin-Turaev invariants at SU_q(2) roots of unity"};
    app.require_subcommand(1);

    int level = 5;
    std::string tri_path, link_path, method = "pruned";
    int threads = 1;
    std::uint64_t ceiling = 100000000;
    bool as_json = false, suite = false;
    int max_level = 6;

    auto add_level = [&](CLI::App* cmd) {
        cmd->add_option("--level", level, "root order r (>= 3)")->check(CLI::Range(3, 64));
    };

    CLI::App* data = app.add_subcommand("data", "dump the modular data of a level");
    add_level(data);
    data->add_flag("--json", as_json, "machine-readable output");

    CLI::App* tv = app.add_subcommand("tv", "Turaev-Viro state sum of a triangulation");
    add_level(tv);
    tv->add_option("--tri", tri_path, "triangulation file (.tri)")->required();
    tv->add_option("--method", method, "brute or pruned")
        ->check(CLI::IsMember({"brute", "pruned"}));
    tv->add_option("--threads", threads, "worker count")->check(CLI::Range(1, 64));
    tv->add_option("--ceiling", ceiling, "coloring visit ceiling");
    tv->add_flag("--json", as_json, "machine-readable output");

    CLI::App* rt = app.add_subcommand("rt", "surgery invariant of a framed link");
    add_level(rt);
    rt->add_option("--link", link_path, "framed link file (.lnk)")->required();
    rt->add_flag("--json", as_json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "check Z_TV = |tau|^2");
    add_level(verify);
    verify->add_option("--tri", tri_path, "triangulation file (.tri)");
    verify->add_option("--link", link_path, "framed link file (.lnk)");
    verify->add_flag("--suite", suite, "run the bundled manifold pairs");
    verify->add_option("--threads", threads, "worker count")->check(CLI::Range(1, 64));
    verify->add_option("--ceiling", ceiling, "coloring visit ceiling");
    verify->add_flag("--json", as_json, "machine-readable output");

    CLI::App* selftest = app.add_subcommand("selftest", "algebraic and move-invariance suites");
    selftest->add_option("--max-level", max_level, "largest root order to exercise")
        ->check(CLI::Range(3, 12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (data->parsed()) return cmd_data(level, as_json);
        if (tv->parsed()) return cmd_tv(level, tri_path, method, threads, ceiling, as_json);
        if (rt->parsed()) return cmd_rt(level, link_path, as_json);
        if (verify->parsed()) {
            if (!suite && (tri_path.empty() || link_path.empty())) {
                std::fprintf(stderr, "verify: need either --suite or both --tri and --link\n");
                return kExitUsage;
            }
            return cmd_verify(level, tri_path, link_path, suite, threads, ceiling, as_json);
        }
        if (selftest->parsed()) return cmd_selftest(max_level);
    } catch (const ResourceLimitError& e) {
        std::fprintf(stderr, "resource limit: %s\n", e.what());
        return kExitResource;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
