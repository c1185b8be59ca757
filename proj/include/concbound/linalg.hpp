#pragma once

// Dense bipartite linear algebra on C^dA (x) C^dB.
// Composite indices are row-major throughout: (i,j) -> i*dB + j with the
// A index major. Everything here assumes small operators (dims <= ~25).

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace concbound {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using Vector  = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index   = Eigen::Index;

struct BipartiteDims {
    Index dA = 2;
    Index dB = 2;

    BipartiteDims() = default;
    BipartiteDims(Index a, Index b) : dA(a), dB(b) {
        if (a < 2 || b < 2)
            throw std::invalid_argument("BipartiteDims: both local dimensions must be >= 2");
    }
    Index total() const { return dA * dB; }
    Index m() const { return dA < dB ? dA : dB; }
    bool operator==(const BipartiteDims& o) const { return dA == o.dA && dB == o.dB; }
};

// ---------- predicates ----------

inline bool is_hermitian(const Matrix& M, double tol = 1e-9) {
    if (M.rows() != M.cols()) return false;
    double scale = M.cwiseAbs().maxCoeff();
    if (scale == 0.0) return true;
    return (M - M.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

inline bool is_psd(const Matrix& M, double tol = 1e-9) {
    if (!is_hermitian(M, tol)) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(M, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

// ---------- products ----------

inline Matrix kron(const Matrix& A, const Matrix& B) {
    return Eigen::kroneckerProduct(A, B).eval();
}

inline Vector kron_vec(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

// ---------- index reshuffles ----------

inline void check_square(const Matrix& rho, const BipartiteDims& dims, const char* who) {
    if (rho.rows() != dims.total() || rho.cols() != dims.total())
        throw std::invalid_argument(std::string(who) + ": operator shape does not match dims");
}

// transpose on the A factor: block (i,j) of the output is block (j,i) of the input
inline Matrix partial_transpose(const Matrix& rho, const BipartiteDims& dims) {
    check_square(rho, dims, "partial_transpose");
    Matrix out(rho.rows(), rho.cols());
    for (Index i = 0; i < dims.dA; ++i)
        for (Index j = 0; j < dims.dA; ++j)
            out.block(i * dims.dB, j * dims.dB, dims.dB, dims.dB) =
                rho.block(j * dims.dB, i * dims.dB, dims.dB, dims.dB);
    return out;
}

// realignment R(rho)[(i,k),(j,l)] = rho[(i,j),(k,l)]; output is dA^2 x dB^2
inline Matrix realign(const Matrix& rho, const BipartiteDims& dims) {
    check_square(rho, dims, "realign");
    Matrix out(dims.dA * dims.dA, dims.dB * dims.dB);
    for (Index i = 0; i < dims.dA; ++i)
        for (Index k = 0; k < dims.dA; ++k)
            for (Index j = 0; j < dims.dB; ++j)
                for (Index l = 0; l < dims.dB; ++l)
                    out(i * dims.dA + k, j * dims.dB + l) = rho(i * dims.dB + j, k * dims.dB + l);
    return out;
}

enum class Subsystem { A, B };

inline Matrix partial_trace(const Matrix& rho, const BipartiteDims& dims, Subsystem keep) {
    check_square(rho, dims, "partial_trace");
    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(dims.dA, dims.dA);
        for (Index i = 0; i < dims.dA; ++i)
            for (Index j = 0; j < dims.dA; ++j)
                for (Index k = 0; k < dims.dB; ++k)
                    out(i, j) += rho(i * dims.dB + k, j * dims.dB + k);
        return out;
    }
    Matrix out = Matrix::Zero(dims.dB, dims.dB);
    for (Index i = 0; i < dims.dB; ++i)
        for (Index j = 0; j < dims.dB; ++j)
            for (Index k = 0; k < dims.dA; ++k)
                out(i, j) += rho(k * dims.dB + i, k * dims.dB + j);
    return out;
}

// ---------- norms, spectra ----------

inline RealVector singular_values(const Matrix& M) {
    Eigen::JacobiSVD<Matrix> svd(M);
    return svd.singularValues();    // descending
}

inline double trace_norm(const Matrix& M) {
    return singular_values(M).sum();
}

struct Spectrum {
    RealVector eigenvalues;   // descending
    Matrix eigenvectors;      // column k belongs to eigenvalues(k)
};

inline Spectrum hermitian_spectrum(const Matrix& M, double tol = 1e-9) {
    if (!is_hermitian(M, tol))
        throw std::invalid_argument("hermitian_spectrum: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(M);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hermitian_spectrum: eigensolver failed");
    Spectrum s;
    s.eigenvalues = es.eigenvalues().reverse();
    s.eigenvectors = es.eigenvectors().rowwise().reverse();
    return s;
}

// ---------- standard operators ----------

// flip F = sum_{ij} |i><j| (x) |j><i| on C^m (x) C^m
inline Matrix flip_operator(Index m) {
    if (m < 2) throw std::invalid_argument("flip_operator: m must be >= 2");
    Matrix F = Matrix::Zero(m * m, m * m);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j)
            F(i * m + j, j * m + i) = 1.0;
    return F;
}

inline Vector max_entangled_ket(Index m) {
    if (m < 2) throw std::invalid_argument("max_entangled_ket: m must be >= 2");
    Vector v = Vector::Zero(m * m);
    for (Index i = 0; i < m; ++i) v(i * m + i) = 1.0 / std::sqrt(double(m));
    return v;
}

// P_m^+ = |psi_m^+><psi_m^+|; equals flip^{T_A} / m
inline Matrix max_entangled_projector(Index m) {
    Vector v = max_entangled_ket(m);
    return v * v.adjoint();
}

} // namespace concbound
