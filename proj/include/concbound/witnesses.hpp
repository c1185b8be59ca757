#pragma once

// Entanglement witness families and detection helpers.

#include <cstdint>
#include <optional>
#include <utility>

#include "concbound/states.hpp"

namespace concbound {

struct Witness {
    Matrix matrix;
    BipartiteDims dims;
    // scale lambda such that W/lambda satisfies the rescaled-bound condition,
    // when a published/analytic value exists for the family
    std::optional<double> known_lambda;

    Witness(Matrix m, BipartiteDims d, std::optional<double> lambda = std::nullopt);
};

// Re Tr(rho W); throws if dims mismatch or the imaginary residual exceeds 1e-10
double expectation(const Witness& w, const DensityOperator& rho);

inline bool detects(const Witness& w, const DensityOperator& rho) {
    return expectation(w, rho) < 0.0;
}

// smallest <a (x) b| W |a (x) b> over n seeded random product vectors;
// >= -1e-9 for a genuine witness (block positivity probe)
double min_product_expectation(const Witness& w, int samples, std::uint64_t seed);

// ---------- families ----------

// flip operator as a witness; lambda = 1
Witness flip_witness(Index m);

// W_k^iso = (k/m) I - P_m^+, 1 <= k <= m-1; lambda = 1/m
Witness iso_witness(Index m, Index k);

// the two 9x9 Choi-map witnesses (variant 1 or 2); lambda = 1
Witness choi_witness(int variant);

// W_{d,k} = sum_ij |i><j| (x) X_ij on C^d (x) C^d, 1 <= k <= d-2;
// lambda = conjectured C_{d,k}
Witness wdk_witness(Index d, Index k);

// conjectured scale C_{d,k} for wdk_witness
double cdk_conjecture(Index d, Index k);

// W(a) = I - f(a) V(a) on C^3 (x) C^3, targeting horodecki_3x3(a).
// f(a) and V(a) are kept exactly as published even though the resulting
// scale overshoots; see sixia_yu_f and the bound sanity flag.
Witness sixia_yu_witness(double a);
Matrix sixia_yu_v(double a);
double sixia_yu_f(double a);

// 8x8 witness on C^2 (x) C^4 targeting horodecki_2x4; lambda = 2 (published
// value; lambda_estimate finds sqrt(4+u^2), see tests)
Witness tang_witness(double u);

// [u1, u2] such that tang_witness(u) detects horodecki_2x4(b) iff u1 <= u <= u2
// (u2 is capped at 1 for b < 12/37)
std::pair<double, double> tang_detection_range(double b);

} // namespace concbound
