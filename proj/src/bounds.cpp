#include "concbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace concbound {

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double scale_factor(const BipartiteDims& dims) {
    Index m = dims.m();
    return std::sqrt(2.0 / double(m * (m - 1)));
}

} // namespace

double max_concurrence(const BipartiteDims& dims) {
    Index m = dims.m();
    return std::sqrt(2.0 * double(m - 1) / double(m));
}

double concurrence_pure(const PureState& psi) {
    Matrix rhoA = partial_trace(pure_density(psi).matrix, psi.dims, Subsystem::A);
    double purity = (rhoA * rhoA).trace().real();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double concurrence_pure_schmidt(const SchmidtForm& sf) {
    double s = sf.mu.sum();
    if (std::abs(s - 1.0) > 1e-8)
        throw std::invalid_argument("concurrence_pure_schmidt: weights do not sum to 1");
    double cross = 0.0;   // sum over unordered pairs, so 2 sum_{k != l} = 4 cross
    for (Index k = 0; k < sf.mu.size(); ++k)
        for (Index l = k + 1; l < sf.mu.size(); ++l)
            cross += sf.mu(k) * sf.mu(l);
    return std::sqrt(std::max(0.0, 4.0 * cross));
}

double concurrence_pure_twocopy(const PureState& psi) {
    const Index dA = psi.dims.dA, dB = psi.dims.dB;
    auto at = [&](Index i, Index j) { return psi.amplitudes(i * dB + j); };

    // two-copy tensor T[i,j,k,l] = psi(i,j) psi(k,l); apply the antisymmetric
    // projectors across the A copies (i<->k) and the B copies (j<->l), then
    // <Phi|P_A P_B|Phi> = ||P_A P_B Phi||^2 since both are projectors
    std::vector<Complex> T(dA * dB * dA * dB);
    auto idx = [&](Index i, Index j, Index k, Index l) {
        return ((i * dB + j) * dA + k) * dB + l;
    };
    for (Index i = 0; i < dA; ++i)
        for (Index j = 0; j < dB; ++j)
            for (Index k = 0; k < dA; ++k)
                for (Index l = 0; l < dB; ++l)
                    T[idx(i, j, k, l)] = at(i, j) * at(k, l);
    std::vector<Complex> U(T.size());
    for (Index i = 0; i < dA; ++i)
        for (Index j = 0; j < dB; ++j)
            for (Index k = 0; k < dA; ++k)
                for (Index l = 0; l < dB; ++l)
                    U[idx(i, j, k, l)] = 0.5 * (T[idx(i, j, k, l)] - T[idx(k, j, i, l)]);
    double norm2 = 0.0;
    for (Index i = 0; i < dA; ++i)
        for (Index j = 0; j < dB; ++j)
            for (Index k = 0; k < dA; ++k)
                for (Index l = 0; l < dB; ++l) {
                    Complex v = 0.5 * (U[idx(i, j, k, l)] - U[idx(i, l, k, j)]);
                    norm2 += std::norm(v);
                }
    return 2.0 * std::sqrt(norm2);
}

namespace {

// columns scaled by sqrt(eigenvalue); zero modes contribute nothing
Matrix subnormalized_eigenvectors(const DensityOperator& rho) {
    Spectrum s = hermitian_spectrum(rho.matrix);
    Matrix sub = s.eigenvectors;
    for (Index k = 0; k < sub.cols(); ++k)
        sub.col(k) *= std::sqrt(std::max(0.0, s.eigenvalues(k)));
    return sub;
}

double wootters_term(const Matrix& T) {
    RealVector sv = singular_values(T);
    double t = sv(0);
    for (Index i = 1; i < std::min<Index>(4, sv.size()); ++i) t -= sv(i);
    return std::max(0.0, t);
}

} // namespace

double wootters(const DensityOperator& rho) {
    if (rho.dims.dA != 2 || rho.dims.dB != 2)
        throw std::invalid_argument("wootters: defined for 2x2 only");
    Matrix sy(2, 2);
    sy << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
    Matrix Y = kron(sy, sy);
    Matrix sub = subnormalized_eigenvectors(rho);
    Matrix T = sub.adjoint() * Y * sub.conjugate();
    return wootters_term(T);
}

std::vector<Matrix> so_generators(Index m) {
    if (m < 2) throw std::invalid_argument("so_generators: m must be >= 2");
    std::vector<Matrix> out;
    out.reserve(m * (m - 1) / 2);
    for (Index j = 0; j < m; ++j)
        for (Index k = j + 1; k < m; ++k) {
            Matrix L = Matrix::Zero(m, m);
            L(j, k) = 1.0;
            L(k, j) = -1.0;
            out.push_back(std::move(L));
        }
    return out;
}

double ou_bound(const DensityOperator& rho) {
    const Index m = rho.dims.m();
    auto embed = [](const Matrix& L, Index d) {
        Matrix E = Matrix::Zero(d, d);
        E.topLeftCorner(L.rows(), L.cols()) = L;
        return E;
    };
    std::vector<Matrix> gens = so_generators(m);
    Matrix sub = subnormalized_eigenvectors(rho);
    Matrix subc = sub.conjugate();
    double total = 0.0;
    for (const Matrix& Lk : gens)
        for (const Matrix& Ll : gens) {
            Matrix O = kron(embed(Lk, rho.dims.dA), embed(Ll, rho.dims.dB));
            double t = wootters_term(sub.adjoint() * O * subc);
            total += t * t;
        }
    return std::sqrt(total);
}

double caf_bound(const DensityOperator& rho) {
    double npt = trace_norm(partial_transpose(rho.matrix, rho.dims));
    double nre = trace_norm(realign(rho.matrix, rho.dims));
    return scale_factor(rho.dims) * (std::max(npt, nre) - 1.0);
}

double witness_bound_signed(const DensityOperator& rho, const Witness& w, double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("witness bound: alpha must be positive");
    return scale_factor(rho.dims) * (-expectation(w, rho)) / alpha;
}

double breuer_bound(const DensityOperator& rho, const Witness& w, double alpha) {
    double tr = expectation(w, rho);
    if (tr >= 0.0)
        throw std::invalid_argument("breuer_bound: witness does not detect the state, bound is vacuous");
    if (alpha <= 0.0) throw std::invalid_argument("breuer_bound: alpha must be positive");
    return scale_factor(rho.dims) * std::abs(tr) / alpha;
}

// ---------- reports ----------

BoundEntry witness_entry(const DensityOperator& rho, const Witness& w, double alpha) {
    BoundEntry e;
    e.method = "witness";
    e.value = witness_bound_signed(rho, w, alpha);
    e.params["alpha"] = fmt_double(alpha);
    e.params["detected"] = e.value > 0.0 ? "true" : "false";
    if (e.value > max_concurrence(rho.dims) + 1e-12)
        e.params["exceeds_pure_max"] = "true";
    return e;
}

double recompute_best(const std::vector<BoundEntry>& entries) {
    double best = 0.0;
    for (const auto& e : entries) best = std::max(best, e.value);
    return best;
}

BoundReport full_report(const DensityOperator& rho,
                        const std::vector<std::pair<Witness, double>>& witnesses,
                        const std::string& label) {
    BoundReport rep;
    rep.state_label = label;
    for (const auto& [w, alpha] : witnesses)
        rep.bounds.push_back(witness_entry(rho, w, alpha));
    BoundEntry caf;
    caf.method = "caf";
    caf.value = caf_bound(rho);
    rep.bounds.push_back(std::move(caf));
    if (rho.dims.dA == rho.dims.dB) {
        BoundEntry ou;
        ou.method = "ou";
        ou.value = ou_bound(rho);
        rep.bounds.push_back(std::move(ou));
    }
    if (rho.dims.dA == 2 && rho.dims.dB == 2) {
        BoundEntry wo;
        wo.method = "wootters";
        wo.value = wootters(rho);
        wo.params["exact"] = "true";
        rep.bounds.push_back(std::move(wo));
    }
    rep.best = recompute_best(rep.bounds);
    return rep;
}

} // namespace concbound
