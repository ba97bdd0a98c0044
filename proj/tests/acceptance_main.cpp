// Acceptance gate: runs every acceptance criterion at its pinned parameters
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include "toric/harness.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " - "
              << what << "\n";
    if (!ok) ++failures;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    using toric::HarnessParams;

    // 1. Counterexample reproduction on the product surface.
    {
        auto t0 = clock::now();
        toric::Example13Report rep = toric::example_1_3();
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        bool ok = rep.kappa == 1 && rep.h0 == 4 && rep.shift_tables_equal &&
                  rep.counterexample && secs < 1.0;
        std::ostringstream what;
        what << "counterexample: kappa=" << rep.kappa << " h0=" << rep.h0 << " ("
             << secs << "s)";
        report(1, ok, what.str());
    }

    HarnessParams p;
    p.trials = 500;
    p.seed = 1;
    p.max_rays = 10;
    p.coord_bound = 5;
    p.max_denominator = 6;

    // 2. Adjoint vanishing at desk scale: 500 trials, zero failures,
    //    at least 200 asserted (non-rejected) trials, under 5 minutes.
    {
        toric::VerificationSummary s = toric::verify_theorem_a(p);
        bool ok = s.failures == 0 && s.attempted == 500 &&
                  (s.attempted - s.rejected) >= 200 && s.wall_seconds < 300.0;
        std::ostringstream what;
        what << "vanishing A: trials=" << s.attempted << " rejected=" << s.rejected
             << " passes=" << s.passes << " failures=" << s.failures << " ("
             << s.wall_seconds << "s)";
        report(2, ok, what.str());
        for (const auto& d : s.failure_dumps) std::cout << d << "\n";
    }

    // 3. Round-up vanishing at desk scale with full Kodaira-dimension
    //    coverage.
    {
        toric::VerificationSummary s = toric::verify_theorem_b(p);
        bool ok = s.failures == 0 && s.attempted == 500 && s.kappa_histogram[0] > 0 &&
                  s.kappa_histogram[1] > 0 && s.kappa_histogram[2] > 0 &&
                  s.wall_seconds < 300.0;
        std::ostringstream what;
        what << "vanishing B: trials=" << s.attempted << " rejected=" << s.rejected
             << " kappa histogram=" << s.kappa_histogram[0] << "/"
             << s.kappa_histogram[1] << "/" << s.kappa_histogram[2]
             << " failures=" << s.failures << " (" << s.wall_seconds << "s)";
        report(3, ok, what.str());
        for (const auto& d : s.failure_dumps) std::cout << d << "\n";
    }

    // Criteria 4-7 all come from one exhaustive property sweep. A failure
    // message is attributed to the criterion whose checks produced it.
    toric::PropertyReport rep = toric::property_suite(1, 200);
    auto count_failures = [&](std::initializer_list<const char*> keys) {
        long n = 0;
        for (const auto& f : rep.failures)
            for (const char* k : keys)
                if (f.find(k) != std::string::npos) { ++n; break; }
        return n;
    };

    // 4. Oracle equivalences on >= 1000 instances.
    {
        long oracle_checks = rep.serre_checks + rep.euler_checks + rep.h0_oracle_checks +
                             rep.nef_route_checks + rep.box_checks + rep.shift_checks +
                             rep.intersection_oracle_checks;
        long bad = count_failures({"Serre", "Euler", "h0 lattice", "nef routes", "box",
                                   "shift", "intersection vs"});
        bool ok = oracle_checks >= 1000 && bad == 0;
        std::ostringstream what;
        what << "oracle equivalences: " << oracle_checks << " checks, " << bad
             << " violations";
        report(4, ok, what.str());
    }

    // 5. Checked MMP runs: >= 100, every contraction preserving the table
    //    (run_mmp throws otherwise, surfacing as an exception failure),
    //    step bound respected, zero flips (structural on surfaces).
    {
        long bad = count_failures({"MMP", "exception"});
        bool ok = rep.mmp_runs >= 100 && bad == 0;
        std::ostringstream what;
        what << "MMP contract: " << rep.mmp_runs << " checked runs, " << bad
             << " violations";
        report(5, ok, what.str());
    }

    // 6. klt agreement on >= 500 pairs; resolutions smooth in 100% of cases.
    {
        long bad = count_failures({"klt", "resolution"});
        bool ok = rep.klt_checks >= 500 && rep.resolution_checks >= 100 && bad == 0;
        std::ostringstream what;
        what << "klt agreement: " << rep.klt_checks << " pairs, "
             << rep.resolution_checks << " resolutions, " << bad << " violations";
        report(6, ok, what.str());
    }

    // 7. Bigness properties: kappa(-K) = 2 on every fan; the adjoint-nef
    //    implication kappa(D) = 2 with zero exceptions.
    {
        long bad = count_failures({"anticanonical", "bigness lemma", "nef vanishing"});
        bool ok = rep.anticanonical_checks >= 200 && rep.dbig_checks >= 200 && bad == 0;
        std::ostringstream what;
        what << "bigness properties: " << rep.anticanonical_checks << " anticanonical + "
             << rep.dbig_checks << " adjoint-nef checks, " << bad << " violations";
        report(7, ok, what.str());
    }
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";

    // 8. Large-scale reproductions: none exist at desk scale.
    std::cout << "criterion 8: PASS - not applicable (no large-scale experiments)\n";

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}
