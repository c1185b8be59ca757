#include "concbound/lambda_opt.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "concbound/rng.hpp"

namespace concbound {

namespace {

// modified Gram-Schmidt on two columns; keeps continuity for small changes
Matrix orthonormalize2(Matrix F, CounterRng& rng) {
    for (Index c = 0; c < 2; ++c) {
        if (c == 1) F.col(1) -= F.col(0) * (F.col(0).adjoint() * F.col(1))(0);
        double n = F.col(c).norm();
        while (n < 1e-12) {   // degenerate draw; replace and redo
            for (Index i = 0; i < F.rows(); ++i) F(i, c) = rng.complex_gaussian();
            if (c == 1) F.col(1) -= F.col(0) * (F.col(0).adjoint() * F.col(1))(0);
            n = F.col(c).norm();
        }
        F.col(c) /= n;
    }
    return F;
}

Matrix random_frame(Index d, CounterRng& rng) {
    Matrix F(d, 2);
    for (Index i = 0; i < d; ++i)
        for (Index c = 0; c < 2; ++c) F(i, c) = rng.complex_gaussian();
    return orthonormalize2(std::move(F), rng);
}

// remove the Hermitian part of F^dag G so F + t G stays first-order on the
// frame manifold (rotations inside the span are kept)
Matrix tangent_project(const Matrix& F, Matrix G) {
    Matrix M = F.adjoint() * G;
    G -= F * ((M + M.adjoint()) * 0.5);
    return G;
}

Matrix gaussian_like(const Matrix& F, CounterRng& rng) {
    Matrix G(F.rows(), F.cols());
    for (Index i = 0; i < G.rows(); ++i)
        for (Index j = 0; j < G.cols(); ++j) G(i, j) = rng.complex_gaussian();
    return G;
}

double objective(const Matrix& W, const BipartiteDims& dims,
                 const FramePair& fp, Vector& v1, Vector& v2) {
    for (Index i = 0; i < dims.dA; ++i) {
        v1.segment(i * dims.dB, dims.dB) = fp.frame_a(i, 0) * fp.frame_b.col(0);
        v2.segment(i * dims.dB, dims.dB) = fp.frame_a(i, 1) * fp.frame_b.col(1);
    }
    return (v1.adjoint() * W * v2)(0).real();
}

} // namespace

double pair_value(const Witness& w, const FramePair& fp) {
    if (fp.frame_a.rows() != w.dims.dA || fp.frame_b.rows() != w.dims.dB ||
        fp.frame_a.cols() != 2 || fp.frame_b.cols() != 2)
        throw std::invalid_argument("pair_value: frame shapes do not match witness dims");
    Matrix I2 = Matrix::Identity(2, 2);
    if ((fp.frame_a.adjoint() * fp.frame_a - I2).cwiseAbs().maxCoeff() > 1e-8 ||
        (fp.frame_b.adjoint() * fp.frame_b - I2).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("pair_value: frame columns are not orthonormal");
    Vector v1(w.dims.total()), v2(w.dims.total());
    return objective(w.matrix, w.dims, fp, v1, v2);
}

Eigen::MatrixXd a_matrix(const Witness& w, const Matrix& basis_a, const Matrix& basis_b) {
    if (basis_a.rows() != w.dims.dA || basis_a.cols() != w.dims.dA ||
        basis_b.rows() != w.dims.dB || basis_b.cols() != w.dims.dB)
        throw std::invalid_argument("a_matrix: bases must be square and match witness dims");
    double devA = (basis_a.adjoint() * basis_a - Matrix::Identity(basis_a.cols(), basis_a.cols()))
                      .cwiseAbs().maxCoeff();
    double devB = (basis_b.adjoint() * basis_b - Matrix::Identity(basis_b.cols(), basis_b.cols()))
                      .cwiseAbs().maxCoeff();
    if (devA > 1e-8 || devB > 1e-8)
        throw std::invalid_argument("a_matrix: bases are not orthonormal");

    const Index m = w.dims.m();
    Eigen::MatrixXd A(m, m);
    for (Index k = 0; k < m; ++k)
        for (Index l = 0; l < m; ++l) {
            Vector vk = kron_vec(basis_a.col(k), basis_b.col(k));
            Vector vl = kron_vec(basis_a.col(l), basis_b.col(l));
            A(k, l) = (vk.adjoint() * w.matrix * vl)(0).real();
        }
    return A;
}

LambdaEstimate lambda_estimate(const Witness& w, const OptimizerConfig& cfg) {
    if (cfg.restarts < 1 || cfg.iters < 1)
        throw std::invalid_argument("lambda_estimate: restarts and iters must be >= 1");
    const Matrix& W = w.matrix;
    Vector v1(w.dims.total()), v2(w.dims.total());

    LambdaEstimate out;
    double best_overall = std::numeric_limits<double>::infinity();
    int last_improve = 0;

    for (int r = 0; r < cfg.restarts; ++r) {
        // per-restart stream: results do not depend on the total restart count
        CounterRng rng(derive_seed(cfg.seed, std::uint64_t(r)));
        FramePair fp{random_frame(w.dims.dA, rng), random_frame(w.dims.dB, rng)};
        double best = objective(W, w.dims, fp, v1, v2);
        double step = cfg.step0;
        int rejected = 0;

        for (int it = 0; it < cfg.iters && step >= cfg.step_tol; ++it) {
            FramePair cand{
                orthonormalize2(fp.frame_a + step * tangent_project(fp.frame_a, gaussian_like(fp.frame_a, rng)), rng),
                orthonormalize2(fp.frame_b + step * tangent_project(fp.frame_b, gaussian_like(fp.frame_b, rng)), rng)};
            double v = objective(W, w.dims, cand, v1, v2);
            if (v < best) {
                fp = std::move(cand);
                best = v;
                rejected = 0;
            } else if (++rejected >= cfg.patience) {
                step *= 0.5;
                rejected = 0;
            }
        }

        if (best < best_overall) {
            if (best < best_overall - 1e-8) last_improve = r;
            best_overall = best;
            out.certificate = fp;
        }
        out.restarts_used = r + 1;
    }
    out.lambda_hat = -best_overall;
    out.converged = (out.restarts_used - 1 - last_improve) >= cfg.window;
    return out;
}

BoundEntry rescaled_bound(const DensityOperator& rho, const Witness& w,
                          const OptimizerConfig& cfg) {
    char buf[40];
    double alpha;
    BoundEntry e;
    if (w.known_lambda) {
        alpha = *w.known_lambda;
        e = witness_entry(rho, w, alpha);
        e.params["alpha_source"] = "known";
    } else {
        LambdaEstimate est = lambda_estimate(w, cfg);
        alpha = cfg.margin * est.lambda_hat;
        e = witness_entry(rho, w, alpha);
        e.params["alpha_source"] = "estimate";
        e.params["heuristic"] = "true";   // lambda_hat is a lower estimate of lambda
        std::snprintf(buf, sizeof buf, "%.17g", est.lambda_hat);
        e.params["lambda_hat"] = buf;
        std::snprintf(buf, sizeof buf, "%.17g", cfg.margin);
        e.params["margin"] = buf;
        e.params["converged"] = est.converged ? "true" : "false";
    }
    return e;
}

CdkReport verify_cdk(Index d, Index k, const OptimizerConfig& cfg) {
    CdkReport rep;
    rep.d = d;
    rep.k = k;
    rep.conjectured = cdk_conjecture(d, k);
    LambdaEstimate est = lambda_estimate(wdk_witness(d, k), cfg);
    rep.lambda_hat = est.lambda_hat;
    rep.abs_gap = std::abs(est.lambda_hat - rep.conjectured);
    rep.converged = est.converged;
    return rep;
}

} // namespace concbound
