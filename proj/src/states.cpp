#include "concbound/states.hpp"

#include <cmath>

#include "concbound/rng.hpp"

namespace concbound {

PureState::PureState(Vector amp, BipartiteDims d) : amplitudes(std::move(amp)), dims(d) {
    if (amplitudes.size() != dims.total())
        throw std::invalid_argument("PureState: amplitude length does not match dims");
    if (std::abs(amplitudes.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("PureState: amplitudes are not normalized");
}

DensityOperator::DensityOperator(Matrix m, BipartiteDims d) : matrix(std::move(m)), dims(d) {
    check_square(matrix, dims, "DensityOperator");
    if (!is_hermitian(matrix, 1e-9))
        throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
    if (std::abs(matrix.trace().real() - 1.0) > 1e-10 || std::abs(matrix.trace().imag()) > 1e-10)
        throw std::invalid_argument("DensityOperator: trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(matrix, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
        throw std::invalid_argument("DensityOperator: matrix is not positive semidefinite");
}

DensityOperator pure_density(const PureState& psi) {
    Matrix m = psi.amplitudes * psi.amplitudes.adjoint();
    return DensityOperator(std::move(m), psi.dims);
}

SchmidtForm schmidt(const PureState& psi) {
    // amplitudes reshaped to dA x dB: Psi(i,j) = amplitudes(i*dB + j)
    Matrix Psi(psi.dims.dA, psi.dims.dB);
    for (Index i = 0; i < psi.dims.dA; ++i)
        for (Index j = 0; j < psi.dims.dB; ++j)
            Psi(i, j) = psi.amplitudes(i * psi.dims.dB + j);
    Eigen::JacobiSVD<Matrix> svd(Psi, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SchmidtForm sf;
    sf.mu = svd.singularValues().array().square();   // already descending
    sf.basis_a = svd.matrixU();
    sf.basis_b = svd.matrixV().conjugate();
    return sf;
}

PureState reconstruct(const SchmidtForm& sf, const BipartiteDims& dims) {
    Vector amp = Vector::Zero(dims.total());
    for (Index k = 0; k < sf.mu.size(); ++k)
        amp += std::sqrt(std::max(0.0, sf.mu(k))) *
               kron_vec(sf.basis_a.col(k), sf.basis_b.col(k));
    return PureState(std::move(amp), dims);
}

// ---------- families ----------

DensityOperator isotropic_state(Index m, double f) {
    if (f < 0.0 || f > 1.0) throw std::invalid_argument("isotropic_state: f must be in [0,1]");
    Matrix P = max_entangled_projector(m);
    Matrix rho = (1.0 - f) / double(m * m - 1) * (Matrix::Identity(m * m, m * m) - P) + f * P;
    return DensityOperator(std::move(rho), BipartiteDims(m, m));
}

DensityOperator epsilon_state(double eps) {
    if (eps <= 0.0) throw std::invalid_argument("epsilon_state: eps must be > 0");
    double N = 1.0 / (1.0 + eps + 1.0 / eps);
    Matrix rho = max_entangled_projector(3);
    for (Index i = 0; i < 3; ++i) {
        rho(i * 3 + (i + 1) % 3, i * 3 + (i + 1) % 3) += eps / 3.0;        // d_{i,i+1}
        rho(i * 3 + (i + 2) % 3, i * 3 + (i + 2) % 3) += 1.0 / (3.0 * eps); // d_{i,i+2}
    }
    return DensityOperator(N * rho, BipartiteDims(3, 3));
}

DensityOperator horodecki_3x3(double a) {
    if (a <= 0.0 || a >= 1.0) throw std::invalid_argument("horodecki_3x3: a must be in (0,1)");
    Matrix M = Matrix::Zero(9, 9);
    for (Index p = 0; p < 6; ++p) M(p, p) = a;
    M(7, 7) = a;
    M(0, 4) = M(4, 0) = M(0, 8) = M(8, 0) = M(4, 8) = M(8, 4) = a;
    M(6, 6) = M(8, 8) = (1.0 + a) / 2.0;
    M(6, 8) = M(8, 6) = std::sqrt(1.0 - a * a) / 2.0;
    return DensityOperator(M / (8.0 * a + 1.0), BipartiteDims(3, 3));
}

DensityOperator horodecki_2x4(double b) {
    if (b <= 0.0 || b >= 1.0) throw std::invalid_argument("horodecki_2x4: b must be in (0,1)");
    Matrix M = Matrix::Zero(8, 8);
    for (Index i = 0; i < 3; ++i)
        M(i, i) = M(i, i + 5) = M(i + 5, i) = M(i + 5, i + 5) = b;
    M(3, 3) = b;
    M(4, 4) = M(7, 7) = (1.0 + b) / 2.0;
    M(4, 7) = M(7, 4) = std::sqrt(1.0 - b * b) / 2.0;
    return DensityOperator(M / (7.0 * b + 1.0), BipartiteDims(2, 4));
}

DensityOperator gamma_state(Index d, double gamma) {
    if (d < 3) throw std::invalid_argument("gamma_state: d must be >= 3");
    if (gamma <= 0.0) throw std::invalid_argument("gamma_state: gamma must be > 0");
    double g2 = gamma * gamma;
    double a_g = (g2 + double(d) - 1.0) / double(d);
    double b_g = (1.0 / g2 + double(d) - 1.0) / double(d);
    double N = double(d * d) - 2.0 + g2 + 1.0 / g2;

    // A_11 is diagonal (1, a_g, 1, ..., 1, b_g); A_jj is its cyclic shift
    RealVector diag1(d);
    diag1(0) = 1.0;
    diag1(1) = a_g;
    for (Index l = 2; l < d - 1; ++l) diag1(l) = 1.0;
    diag1(d - 1) = b_g;

    Matrix rho = Matrix::Zero(d * d, d * d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
            if (i == j) {
                for (Index p = 0; p < d; ++p)
                    rho(i * d + (i + p) % d, i * d + (i + p) % d) = diag1(p);
            } else {
                rho(i * d + i, j * d + j) = 1.0;
            }
        }
    return DensityOperator(rho / N, BipartiteDims(d, d));
}

// ---------- random states ----------

PureState random_pure(const BipartiteDims& dims, std::uint64_t seed) {
    CounterRng rng(seed);
    Vector v(dims.total());
    for (Index i = 0; i < v.size(); ++i) v(i) = rng.complex_gaussian();
    v /= v.norm();
    return PureState(std::move(v), dims);
}

DensityOperator random_density(const BipartiteDims& dims, Index rank, std::uint64_t seed) {
    if (rank < 1 || rank > dims.total())
        throw std::invalid_argument("random_density: rank must be in [1, dA*dB]");
    CounterRng rng(seed);
    Matrix G(dims.total(), rank);
    for (Index i = 0; i < G.rows(); ++i)
        for (Index j = 0; j < G.cols(); ++j)
            G(i, j) = rng.complex_gaussian();
    Matrix rho = G * G.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(std::move(rho), dims);
}

} // namespace concbound
