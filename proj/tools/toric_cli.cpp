// Command-line surface over the toric kernel: exact cohomology, positivity
// tests, klt checks, MMP runs, resolutions, and the randomized verification
// harness. All numeric output is exact (rationals as p/q, never decimals).
//
// Exit codes: 0 success / verification passed, 1 verification FAIL,
// 2 usage or parse error.

#include "toric/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct SceneArgs {
    std::string fan_file;
    std::string divisor_name;
    std::string boundary_name;
};

toric::SceneFile load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return toric::parse_scene(buf.str());
}

toric::TDivisor named_divisor(const toric::SceneFile& scene, const std::string& name) {
    auto it = scene.divisors.find(name);
    if (it == scene.divisors.end())
        throw std::runtime_error("no divisor named '" + name + "' in scene");
    return toric::TDivisor(scene.fan(), it->second);
}

std::string kappa_str(int k) { return k < 0 ? "-inf" : std::to_string(k); }

void print_summary(const toric::VerificationSummary& s, bool with_kappa) {
    std::cout << "trials=" << s.attempted << "\n"
              << "rejected=" << s.rejected << "\n"
              << "passes=" << s.passes << "\n";
    if (with_kappa)
        std::cout << "kappa0=" << s.kappa_histogram[0] << " kappa1=" << s.kappa_histogram[1]
                  << " kappa2=" << s.kappa_histogram[2] << "\n";
    std::cout << "failures=" << s.failures << "\n";
    for (const auto& dump : s.failure_dumps) std::cout << dump << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric surface kernel"};
    app.require_subcommand(1);

    SceneArgs args;
    toric::HarnessParams params;
    std::uint64_t prop_seed = 1;
    long prop_fans = 200;

    auto add_fan_divisor = [&](CLI::App* cmd) {
        cmd->add_option("--fan", args.fan_file, "scene file")->required();
        cmd->add_option("--divisor", args.divisor_name, "divisor name")->required();
    };
    auto add_verify_opts = [&](CLI::App* cmd) {
        cmd->add_option("--trials", params.trials);
        cmd->add_option("--seed", params.seed);
        cmd->add_option("--max-rays", params.max_rays);
        cmd->add_option("--coord-bound", params.coord_bound);
        cmd->add_option("--max-denominator", params.max_denominator);
    };

    auto* cohom = app.add_subcommand("cohom", "cohomology table of an integral divisor");
    add_fan_divisor(cohom);
    auto* kappa = app.add_subcommand("kappa", "Iitaka dimension of a divisor");
    add_fan_divisor(kappa);
    auto* nef = app.add_subcommand("nef", "nef test (both routes)");
    add_fan_divisor(nef);
    auto* ample = app.add_subcommand("ample", "ample test (both routes)");
    add_fan_divisor(ample);
    auto* big = app.add_subcommand("big", "bigness test");
    add_fan_divisor(big);
    auto* klt = app.add_subcommand("klt", "klt check of a pair boundary");
    klt->add_option("--fan", args.fan_file, "scene file")->required();
    klt->add_option("--boundary", args.boundary_name, "boundary name")->required();
    auto* mmp = app.add_subcommand("mmp", "run the D-minimal-model program");
    add_fan_divisor(mmp);
    bool check_cohomology = false;
    mmp->add_flag("--check-cohomology", check_cohomology,
                  "assert cohomology preservation at every contraction");
    auto* resolve = app.add_subcommand("resolve", "minimal resolution of the fan");
    resolve->add_option("--fan", args.fan_file, "scene file")->required();
    auto* verify_a = app.add_subcommand("verify-a", "randomized Kawamata-Viehweg runs");
    add_verify_opts(verify_a);
    auto* verify_b = app.add_subcommand("verify-b", "randomized round-up vanishing runs");
    add_verify_opts(verify_b);
    auto* properties = app.add_subcommand("properties", "cross-module invariant sweep");
    properties->add_option("--seed", prop_seed);
    properties->add_option("--fans", prop_fans);
    auto* example = app.add_subcommand("example-1-3", "counterexample on P1 x P1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cohom->parsed()) {
            auto scene = load_scene(args.fan_file);
            auto d = named_divisor(scene, args.divisor_name);
            auto t = toric::cohomology(d.fan, d);
            std::cout << "h0=" << t.h0 << " h1=" << t.h1 << " h2=" << t.h2
                      << " chi=" << t.euler() << "\n";
        } else if (kappa->parsed()) {
            auto scene = load_scene(args.fan_file);
            auto d = named_divisor(scene, args.divisor_name);
            std::cout << "kappa=" << kappa_str(toric::iitaka_dimension(d)) << "\n";
        } else if (nef->parsed()) {
            auto scene = load_scene(args.fan_file);
            auto d = named_divisor(scene, args.divisor_name);
            std::cout << "nef=" << (toric::is_nef(d) ? "true" : "false") << "\n";
        } else if (ample->parsed()) {
            auto scene = load_scene(args.fan_file);
            auto d = named_divisor(scene, args.divisor_name);
            std::cout << "ample=" << (toric::is_ample(d) ? "true" : "false") << "\n";
        } else if (big->parsed()) {
            auto scene = load_scene(args.fan_file);
            auto d = named_divisor(scene, args.divisor_name);
            std::cout << "big=" << (toric::is_big(d) ? "true" : "false") << "\n";
        } else if (klt->parsed()) {
            auto scene = load_scene(args.fan_file);
            auto it = scene.boundaries.find(args.boundary_name);
            if (it == scene.boundaries.end())
                throw std::runtime_error("no boundary named '" + args.boundary_name + "'");
            toric::PairBoundary pair(scene.fan(), it->second);
            std::cout << "klt_combinatorial="
                      << (toric::is_klt_combinatorial(pair) ? "true" : "false") << "\n";
            std::cout << "klt_resolution="
                      << (toric::is_klt_via_resolution(pair) ? "true" : "false") << "\n";
            auto [resolved, inserted] = pair.fan.minimal_resolution();
            (void)resolved;
            for (const auto& ins : inserted)
                std::cout << "exceptional " << ins.ray.str() << " log_discrepancy="
                          << toric::format_rat(toric::log_discrepancy(pair, ins.ray))
                          << "\n";
        } else if (mmp->parsed()) {
            auto scene = load_scene(args.fan_file);
            auto d = named_divisor(scene, args.divisor_name);
            auto trace = toric::run_mmp(d.fan, d, check_cohomology);
            for (std::size_t k = 0; k < trace.steps.size(); ++k) {
                const auto& s = trace.steps[k];
                std::cout << "step " << k + 1 << ": contract ray " << s.ray.str()
                          << ", D·E=" << toric::format_rat(s.d_dot_e)
                          << ", E^2=" << toric::format_rat(s.e_squared) << "\n";
            }
            switch (trace.outcome.kind) {
                case toric::MMPOutcome::Kind::MinimalModel:
                    std::cout << "outcome: minimal-model (D nef)\n";
                    break;
                case toric::MMPOutcome::Kind::MoriFiberSpace:
                    std::cout << "outcome: mori-fiber-space (fiber wall +-"
                              << trace.outcome.fiber_wall.str() << ", fiber curve ray "
                              << trace.final_fan.ray(trace.outcome.fiber_curve_index).str()
                              << ")\n";
                    break;
                case toric::MMPOutcome::Kind::RankOne:
                    std::cout << "outcome: rank-one (-D "
                              << (trace.outcome.minus_d_ample ? "ample" : "not ample")
                              << ")\n";
                    break;
            }
        } else if (resolve->parsed()) {
            auto scene = load_scene(args.fan_file);
            auto fan = scene.fan();
            auto [resolved, inserted] = fan.minimal_resolution();
            std::cout << "rays\n";
            for (const auto& r : resolved.rays())
                std::cout << r.x << " " << r.y << "\n";
            for (const auto& ins : inserted)
                std::cout << "# inserted " << ins.ray.str() << " in cone "
                          << ins.cone << "\n";
            std::cout << "# smooth=" << (resolved.is_smooth() ? "true" : "false") << "\n";
        } else if (verify_a->parsed()) {
            auto s = toric::verify_theorem_a(params);
            print_summary(s, false);
            return s.failures == 0 ? 0 : 1;
        } else if (verify_b->parsed()) {
            auto s = toric::verify_theorem_b(params);
            print_summary(s, true);
            return s.failures == 0 ? 0 : 1;
        } else if (properties->parsed()) {
            auto rep = toric::property_suite(prop_seed, prop_fans);
            std::cout << "checks=" << rep.total_checks() << "\n"
                      << "serre=" << rep.serre_checks << " euler=" << rep.euler_checks
                      << " h0_oracle=" << rep.h0_oracle_checks
                      << " nef_routes=" << rep.nef_route_checks << " box=" << rep.box_checks
                      << " shift=" << rep.shift_checks << " klt=" << rep.klt_checks
                      << " resolution=" << rep.resolution_checks
                      << " anticanonical=" << rep.anticanonical_checks
                      << " dbig=" << rep.dbig_checks
                      << " intersection_oracle=" << rep.intersection_oracle_checks
                      << " mmp=" << rep.mmp_runs << "\n"
                      << "failures=" << rep.failures.size() << "\n";
            for (const auto& f : rep.failures) std::cout << "FAIL: " << f << "\n";
            return rep.failures.empty() ? 0 : 1;
        } else if (example->parsed()) {
            auto rep = toric::example_1_3();
            std::cout << "kappa=" << rep.kappa << "\n"
                      << "h0=" << rep.h0 << "\n"
                      << "table: h0=" << rep.table.h0 << " h1=" << rep.table.h1
                      << " h2=" << rep.table.h2 << " chi=" << rep.table.euler() << "\n"
                      << "shift_tables_equal="
                      << (rep.shift_tables_equal ? "true" : "false") << "\n"
                      << "counterexample=" << (rep.counterexample ? "true" : "false")
                      << "\n";
            return rep.kappa == 1 && rep.h0 == 4 && rep.shift_tables_equal &&
                           rep.counterexample
                       ? 0
                       : 1;
        }
    } catch (const toric::SceneError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
