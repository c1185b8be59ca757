#include "concbound/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "concbound/lambda_opt.hpp"
#include "concbound/rng.hpp"

namespace concbound {

namespace {

constexpr std::uint64_t kStateSeed = 0x5eedfeedull;

std::string fmt(double x, int prec = 6) {
    std::ostringstream os;
    os << std::setprecision(prec) << x;
    return os.str();
}

// 1. m=2 isotropic states: witness bound at alpha=1/2 reproduces the exact
//    two-qubit concurrence 2f-1
CheckResult check_isotropic_exactness() {
    CheckResult r{"isotropic-exactness", true, ""};
    Witness w = iso_witness(2, 1);
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        double f = 0.5 + 0.05 * i;
        DensityOperator rho = isotropic_state(2, f);
        double bound = witness_bound_signed(rho, w, 0.5);
        double exact = wootters(rho);
        worst = std::max({worst, std::abs(bound - exact), std::abs(bound - (2 * f - 1))});
    }
    r.pass = worst <= 1e-9;
    r.detail = "max deviation from 2f-1 and wootters: " + fmt(worst, 3);
    return r;
}

// 2. optimizer anchors with analytically known scales
CheckResult check_lambda_anchors() {
    CheckResult r{"lambda-anchors", true, ""};
    OptimizerConfig cfg;
    std::ostringstream detail;
    for (Index m : {2, 3}) {
        double lam = lambda_estimate(flip_witness(m), cfg).lambda_hat;
        if (std::abs(lam - 1.0) > 1e-3) {
            r.pass = false;
            detail << "flip m=" << m << " gave " << fmt(lam) << "; ";
        }
    }
    for (Index m : {2, 3, 4}) {
        double lam = lambda_estimate(iso_witness(m, 1), cfg).lambda_hat;
        if (std::abs(lam - 1.0 / double(m)) > 1e-3) {
            r.pass = false;
            detail << "iso m=" << m << " gave " << fmt(lam) << "; ";
        }
    }
    for (double u : {0.3, 0.5, 0.8}) {
        double lam = lambda_estimate(tang_witness(u), cfg).lambda_hat;
        if (lam < 1.0 || lam > 2.0 + 1e-3) {
            r.pass = false;
            detail << "tang u=" << u << " gave " << fmt(lam) << " outside [1, 2.001]"
                   << " (true min is -sqrt(4+u^2) = " << fmt(-std::sqrt(4 + u * u))
                   << ", certified by an explicit frame pair; the published scale 2"
                   << " understates it); ";
        }
    }
    r.detail = r.pass ? "flip, iso and tang estimates all in expected ranges"
                      : detail.str();
    return r;
}

// 3. conjectured C_{d,k} table, d = 3..5
CheckResult check_cdk_table() {
    CheckResult r{"cdk-table", true, ""};
    OptimizerConfig cfg;
    double worst = 0.0;
    std::ostringstream rows;
    for (Index d = 3; d <= 5; ++d)
        for (Index k = 1; k <= d - 2; ++k) {
            CdkReport rep = verify_cdk(d, k, cfg);
            worst = std::max(worst, rep.abs_gap);
            rows << "(" << d << "," << k << ") gap " << fmt(rep.abs_gap, 2) << "; ";
        }
    r.pass = worst <= 5e-3;
    r.detail = rows.str() + "max " + fmt(worst, 3);
    return r;
}

// 4. epsilon-family curve equals its closed form and is dominated by caf
CheckResult check_epsilon_curves() {
    CheckResult r{"epsilon-curves", true, ""};
    Witness w1 = choi_witness(1), w2 = choi_witness(2);
    double worst_cf = 0.0, worst_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 50; ++i) {
        double eps = std::pow(10.0, -1.0 + 2.0 * i / 49.0);
        DensityOperator rho = epsilon_state(eps);
        double val = witness_bound_signed(rho, eps < 1 ? w1 : w2, 1.0);
        double cf = eps < 1 ? -(eps * (eps - 1.0)) / (1.0 + eps + eps * eps) / std::sqrt(3.0)
                            : -(1.0 - eps) / (1.0 + eps + eps * eps) / std::sqrt(3.0);
        worst_cf = std::max(worst_cf, std::abs(val - cf));
        worst_margin = std::min(worst_margin, caf_bound(rho) - val);
    }
    r.pass = worst_cf <= 1e-12 && worst_margin >= 0.0;
    r.detail = "closed-form err " + fmt(worst_cf, 3) + ", min caf margin " + fmt(worst_margin, 3);
    return r;
}

// 5. 3x3 PPT family: transcription oracle, PPT, realignment above 1
CheckResult check_horodecki_3x3() {
    CheckResult r{"horodecki-3x3", true, ""};
    double worst_tr = 0.0, worst_eig = 0.0, worst_re = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 9; ++i) {
        double a = 0.1 * i;
        DensityOperator rho = horodecki_3x3(a);
        double tr = (sixia_yu_v(a) * rho.matrix).trace().real();
        double closed = 2.0 * (2.0 + 33.0 * a + 145.0 * a * a + 63.0 * a * a * a) / (1.0 + 8.0 * a);
        worst_tr = std::max(worst_tr, std::abs(tr - closed));
        Spectrum s = hermitian_spectrum(partial_transpose(rho.matrix, rho.dims));
        worst_eig = std::min(worst_eig, s.eigenvalues.minCoeff());
        worst_re = std::min(worst_re, trace_norm(realign(rho.matrix, rho.dims)));
    }
    r.pass = worst_tr <= 1e-10 && worst_eig >= -1e-9 && worst_re > 1.0;
    r.detail = "oracle err " + fmt(worst_tr, 3) + ", min PT eig " + fmt(worst_eig, 3) +
               ", min ||R|| " + fmt(worst_re, 8);
    return r;
}

// 6. tang detection window against the sign of the trace
CheckResult check_tang_detection() {
    CheckResult r{"tang-detection", true, ""};
    double worst_cf = 0.0, worst_root = 0.0;
    int disagreements = 0;
    auto trace_at = [](const DensityOperator& rho, double u) {
        return expectation(tang_witness(u), rho);
    };
    for (int bi = 0; bi < 21; ++bi) {
        double b = 0.05 + 0.9 * bi / 20.0;
        DensityOperator rho = horodecki_2x4(b);
        auto [u1, u2] = tang_detection_range(b);
        for (int ui = 0; ui <= 20; ++ui) {
            double u = ui / 20.0;
            double tr = trace_at(rho, u);
            double closed = (3 - 3 * b - 6 * u * std::sqrt(1 - b * b) + 3 * u * u + 2 * b * u * u) /
                            (6 + 42 * b);
            worst_cf = std::max(worst_cf, std::abs(tr - closed));
            if (std::abs(tr) <= 1e-9) continue;           // boundary-consistent
            bool detected = tr < 0.0;
            bool inside = u >= u1 - 1e-9 && u <= u2 + 1e-9;
            bool outside = u <= u1 + 1e-9 || u >= u2 - 1e-9;
            if (detected ? !inside : !outside) ++disagreements;
        }
        worst_root = std::max(worst_root, std::abs(trace_at(rho, u1)));
        if (b >= 12.0 / 37.0)                              // u2 = 1 cap is not a root
            worst_root = std::max(worst_root, std::abs(trace_at(rho, u2)));
        else if (trace_at(rho, 1.0) >= 0.0)
            ++disagreements;                               // capped window must still detect at u=1
    }
    r.pass = disagreements == 0 && worst_root <= 1e-9 && worst_cf <= 1e-10;
    r.detail = "closed-form err " + fmt(worst_cf, 3) + ", root residual " + fmt(worst_root, 3) +
               ", sign disagreements " + std::to_string(disagreements);
    return r;
}

// 7. gamma family curves and their monotonicity in d and k
CheckResult check_gamma_family() {
    CheckResult r{"gamma-family", true, ""};
    double worst_cf = 0.0;
    bool mono_d = true, mono_k = true;
    auto bound = [](Index d, Index k, double g) {
        DensityOperator rho = gamma_state(d, g);
        Witness w = wdk_witness(d, k);
        return witness_bound_signed(rho, w, *w.known_lambda);
    };
    for (Index d = 3; d <= 5; ++d)
        for (Index k = 1; k <= d - 2; ++k)
            for (int i = 1; i <= 20; ++i) {
                double g = double(i) / 21.0;
                double val = bound(d, k, g);
                double N = double(d * d) - 2.0 + g * g + 1.0 / (g * g);
                double cf = std::sqrt(2.0 / double(d * (d - 1))) * (1.0 - g * g) /
                            (N * cdk_conjecture(d, k));
                worst_cf = std::max(worst_cf, std::abs(val - cf));
            }
    for (int i = 1; i <= 20; ++i) {
        double g = double(i) / 21.0;
        if (!(bound(3, 1, g) >= bound(4, 2, g) && bound(4, 2, g) >= bound(5, 3, g)))
            mono_d = false;
        if (!(bound(5, 1, g) <= bound(5, 2, g) && bound(5, 2, g) <= bound(5, 3, g)))
            mono_k = false;
    }
    r.pass = worst_cf <= 1e-12 && mono_d && mono_k;
    r.detail = "closed-form err " + fmt(worst_cf, 3) + (mono_d ? "" : ", d-monotonicity broken") +
               (mono_k ? "" : ", k-monotonicity broken");
    return r;
}

// 8. agreement of the three pure-state routes; ou vs wootters on mixed states
CheckResult check_route_agreement() {
    CheckResult r{"route-agreement", true, ""};
    double worst_pure = 0.0, worst_mixed = 0.0;
    int which = 0;
    for (BipartiteDims dims : {BipartiteDims(2, 2), BipartiteDims(2, 4), BipartiteDims(3, 3)}) {
        for (int i = 0; i < 100; ++i) {
            PureState psi = random_pure(dims, derive_seed(kStateSeed, 1000 * ++which + i));
            double c1 = concurrence_pure(psi);
            double c2 = concurrence_pure_schmidt(schmidt(psi));
            double c3 = concurrence_pure_twocopy(psi);
            worst_pure = std::max({worst_pure, std::abs(c1 - c2), std::abs(c1 - c3)});
        }
    }
    for (int i = 0; i < 50; ++i) {
        DensityOperator rho = random_density(BipartiteDims(2, 2), 1 + i % 4,
                                             derive_seed(kStateSeed, 90000 + i));
        worst_mixed = std::max(worst_mixed, std::abs(ou_bound(rho) - wootters(rho)));
    }
    r.pass = worst_pure <= 1e-10 && worst_mixed <= 1e-9;
    r.detail = "pure-route spread " + fmt(worst_pure, 3) + ", |ou - wootters| " + fmt(worst_mixed, 3);
    return r;
}

// 9. lower-bound property against the exact two-qubit value
CheckResult check_two_qubit_soundness() {
    CheckResult r{"two-qubit-soundness", true, ""};
    Witness w = iso_witness(2, 1);
    Matrix P = max_entangled_projector(2);
    double worst_resc = -std::numeric_limits<double>::infinity();
    double worst_caf = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 50; ++i) {
        DensityOperator rho = random_density(BipartiteDims(2, 2), 1 + i % 4,
                                             derive_seed(kStateSeed, 50000 + i));
        double fid = (P * rho.matrix).trace().real();
        if (fid <= 0.5) {
            // mix toward the Bell projector until the witness detects it
            CounterRng rng(derive_seed(kStateSeed, 60000 + i));
            double target = 0.55 + 0.4 * rng.uniform();
            double s = (target - fid) / (1.0 - fid);
            rho = DensityOperator((1.0 - s) * rho.matrix + s * P, rho.dims);
        }
        double exact = wootters(rho);
        worst_resc = std::max(worst_resc, breuer_bound(rho, w, *w.known_lambda) - exact);
        worst_caf = std::max(worst_caf, caf_bound(rho) - exact);
    }
    r.pass = worst_resc <= 1e-6 && worst_caf <= 1e-6;
    r.detail = "max rescaled excess " + fmt(worst_resc, 3) + ", max caf excess " + fmt(worst_caf, 3);
    return r;
}

// 10. sanity monitor on the sixia-yu family: the bound overshoots the pure
//     maximum sqrt(4/3) and must be flagged, not rescaled
CheckResult check_sixia_yu_monitor() {
    CheckResult r{"sixia-yu-monitor", true, ""};
    double pure_max = max_concurrence(BipartiteDims(3, 3));
    int fired = 0, wrong = 0;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int i = 1; i <= 9; ++i) {
        double a = 0.1 * i;
        DensityOperator rho = horodecki_3x3(a);
        BoundEntry e = witness_entry(rho, sixia_yu_witness(a), 1.0);
        bool flagged = e.params.count("exceeds_pure_max") > 0;
        if (flagged != (e.value > pure_max + 1e-12)) ++wrong;
        if (flagged) ++fired;
        lo = std::min(lo, e.value);
        hi = std::max(hi, e.value);
    }
    r.pass = wrong == 0 && fired == 9;   // published scale overshoots on the whole grid
    r.detail = "flag fired " + std::to_string(fired) + "/9, values in [" + fmt(lo, 4) + ", " +
               fmt(hi, 4) + "] vs pure max " + fmt(pure_max, 4);
    return r;
}

} // namespace

std::vector<CheckResult> run_acceptance_checks() {
    return {
        check_isotropic_exactness(),
        check_lambda_anchors(),
        check_cdk_table(),
        check_epsilon_curves(),
        check_horodecki_3x3(),
        check_tang_detection(),
        check_gamma_family(),
        check_route_agreement(),
        check_two_qubit_soundness(),
        check_sixia_yu_monitor(),
    };
}

int run_selftest(std::ostream& os) {
    int failures = 0;
    for (const CheckResult& c : run_acceptance_checks()) {
        os << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": " << c.detail << "\n";
        if (!c.pass) ++failures;
    }
    return failures;
}

} // namespace concbound
