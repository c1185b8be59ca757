#pragma once

// Estimation of the optimal rescaling lambda for a witness W:
// lambda = -min Re <a1 (x) b1| W |a2 (x) b2> over pairs of orthonormal
// 2-frames (a1,a2) in C^dA and (b1,b2) in C^dB. Multi-start derivative-free
// refinement; the returned value is a certified lower estimate of lambda.

#include <cstdint>

#include "concbound/bounds.hpp"

namespace concbound {

struct FramePair {
    Matrix frame_a;   // dA x 2, orthonormal columns
    Matrix frame_b;   // dB x 2, orthonormal columns
};

struct OptimizerConfig {
    int restarts = 64;
    int iters = 2000;          // per restart
    double step0 = 0.3;
    double step_tol = 1e-7;    // stop refining below this step size
    std::uint64_t seed = 1;
    double margin = 1.0;       // multiplier applied to estimated lambda
    int patience = 8;          // consecutive rejections before halving the step
    int window = 16;           // restarts without improvement to call it converged
};

struct LambdaEstimate {
    double lambda_hat = 0.0;
    FramePair certificate;     // attains -lambda_hat
    int restarts_used = 0;
    bool converged = false;
};

// A_kl = Re <a_k (x) b_k| W |a_l (x) b_l> for full orthonormal bases
// (columns of basis_a, basis_b); throws on non-orthonormal input
Eigen::MatrixXd a_matrix(const Witness& w, const Matrix& basis_a, const Matrix& basis_b);

// the optimizer objective, Re <a1 (x) b1| W |a2 (x) b2>
double pair_value(const Witness& w, const FramePair& fp);

LambdaEstimate lambda_estimate(const Witness& w, const OptimizerConfig& cfg = {});

// witness report entry with alpha resolved from known_lambda when present,
// otherwise margin * lambda_estimate (flagged heuristic)
BoundEntry rescaled_bound(const DensityOperator& rho, const Witness& w,
                          const OptimizerConfig& cfg = {});

struct CdkReport {
    Index d = 0;
    Index k = 0;
    double lambda_hat = 0.0;
    double conjectured = 0.0;
    double abs_gap = 0.0;
    bool converged = false;
};

CdkReport verify_cdk(Index d, Index k, const OptimizerConfig& cfg = {});

} // namespace concbound
