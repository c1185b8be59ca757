#include "concbound/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "concbound/rng.hpp"

namespace concbound {

Witness::Witness(Matrix m, BipartiteDims d, std::optional<double> lambda)
    : matrix(std::move(m)), dims(d), known_lambda(lambda) {
    check_square(matrix, dims, "Witness");
    if (!is_hermitian(matrix, 1e-9))
        throw std::invalid_argument("Witness: matrix is not Hermitian");
    if (known_lambda && *known_lambda <= 0.0)
        throw std::invalid_argument("Witness: known_lambda must be positive");
}

double expectation(const Witness& w, const DensityOperator& rho) {
    if (!(w.dims == rho.dims))
        throw std::invalid_argument("expectation: witness and state dims differ");
    Complex tr = (rho.matrix * w.matrix).trace();
    if (std::abs(tr.imag()) > 1e-10)
        throw std::runtime_error("expectation: imaginary residual exceeds tolerance");
    return tr.real();
}

double min_product_expectation(const Witness& w, int samples, std::uint64_t seed) {
    double best = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        CounterRng rng(derive_seed(seed, std::uint64_t(s)));
        Vector a(w.dims.dA), b(w.dims.dB);
        for (Index i = 0; i < a.size(); ++i) a(i) = rng.complex_gaussian();
        for (Index i = 0; i < b.size(); ++i) b(i) = rng.complex_gaussian();
        a /= a.norm();
        b /= b.norm();
        Vector v = kron_vec(a, b);
        best = std::min(best, (v.adjoint() * w.matrix * v)(0).real());
    }
    return best;
}

// ---------- families ----------

Witness flip_witness(Index m) {
    return Witness(flip_operator(m), BipartiteDims(m, m), 1.0);
}

Witness iso_witness(Index m, Index k) {
    if (k < 1 || k > m - 1)
        throw std::invalid_argument("iso_witness: k must satisfy 1 <= k <= m-1");
    Matrix W = double(k) / double(m) * Matrix::Identity(m * m, m * m) - max_entangled_projector(m);
    return Witness(std::move(W), BipartiteDims(m, m), 1.0 / double(m));
}

Witness choi_witness(int variant) {
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("choi_witness: variant must be 1 or 2");
    Matrix W = Matrix::Zero(9, 9);
    const double d1[9] = {1, 1, 0, 0, 1, 1, 1, 0, 1};
    const double d2[9] = {1, 0, 1, 1, 1, 0, 0, 1, 1};
    for (Index i = 0; i < 9; ++i) W(i, i) = (variant == 1 ? d1[i] : d2[i]);
    W(0, 4) = W(4, 0) = W(0, 8) = W(8, 0) = W(4, 8) = W(8, 4) = -1.0;
    return Witness(std::move(W), BipartiteDims(3, 3), 1.0);
}

Witness wdk_witness(Index d, Index k) {
    if (d < 3) throw std::invalid_argument("wdk_witness: d must be >= 3");
    if (k < 1 || k > d - 2)
        throw std::invalid_argument("wdk_witness: k must satisfy 1 <= k <= d-2");
    Matrix W = Matrix::Zero(d * d, d * d);
    for (Index i = 0; i < d; ++i) {
        // X_ii = (d-k-1)|i><i| + sum_{l=1}^k |i+l><i+l|
        W(i * d + i, i * d + i) = double(d - k - 1);
        for (Index l = 1; l <= k; ++l) {
            Index p = (i + l) % d;
            W(i * d + p, i * d + p) += 1.0;
        }
        // X_ij = -|i><j| for i != j
        for (Index j = 0; j < d; ++j)
            if (j != i) W(i * d + i, j * d + j) = -1.0;
    }
    return Witness(std::move(W), BipartiteDims(d, d), cdk_conjecture(d, k));
}

double cdk_conjecture(Index d, Index k) {
    if (d < 3 || k < 1 || k > d - 2)
        throw std::invalid_argument("cdk_conjecture: need d >= 3, 1 <= k <= d-2");
    if (k == d - 2) return 1.0;
    if (d - 2 >= 2 * k) return double(d - k) / 2.0;
    return double(d - k) / 2.0 - 0.25;
}

double sixia_yu_f(double a) {
    double t = 1.0 + 8.0 * a;
    return 2.0 * std::sqrt((a + 2.0) * (t * t + a * a * (1.0 - a)));
}

Matrix sixia_yu_v(double a) {
    if (a <= 0.0 || a >= 1.0) throw std::invalid_argument("sixia_yu_v: a must be in (0,1)");
    double s = std::sqrt(1.0 - a * a);
    double t = 1.0 + 8.0 * a;
    Matrix V = Matrix::Zero(9, 9);
    auto put = [&V](Index i, Index j, double v) { V(i - 1, j - 1) = v; V(j - 1, i - 1) = v; };
    put(1, 1, -(1 + a) * t);        put(6, 6, -(1 + a) * t);
    put(1, 3, -(1 + 7 * a) * s);    put(4, 6, -(1 + 7 * a) * s);
    put(1, 5, 2 * (2 + a) * t);     put(5, 9, 2 * (2 + a) * t);
    put(1, 7, -(1 + 9 * a) * s);    put(3, 9, -(1 + 9 * a) * s);
    put(1, 9, 3 * (1 + a) * t);
    put(2, 2, 2 + 19 * a + 15 * a * a);
    put(5, 5, 2 + 19 * a + 15 * a * a);
    put(2, 8, (2 + 15 * a) * s);
    put(3, 3, (3 + a) * t);         put(4, 4, (3 + a) * t);
    put(3, 7, -(1 - a) * t);
    put(7, 7, 2 + 17 * a + 17 * a * a);
    put(9, 9, 2 + 17 * a + 17 * a * a);
    put(7, 9, (2 + 17 * a) * s);
    put(8, 8, -2 * a * t);
    return V;
}

Witness sixia_yu_witness(double a) {
    Matrix W = Matrix::Identity(9, 9) - sixia_yu_f(a) * sixia_yu_v(a);
    return Witness(std::move(W), BipartiteDims(3, 3), std::nullopt);
}

Witness tang_witness(double u) {
    Matrix W = Matrix::Zero(8, 8);
    const double diag[8] = {1.0 - u * u / 6.0, 1, 2, 1, u * u, 2, 2, 1};
    for (Index i = 0; i < 8; ++i) W(i, i) = diag[i];
    auto put = [&W](Index i, Index j, double v) { W(i - 1, j - 1) = v; W(j - 1, i - 1) = v; };
    put(1, 6, -1);
    put(2, 7, -2);
    put(3, 5, u);
    put(3, 8, -2);
    put(5, 8, -u);
    return Witness(std::move(W), BipartiteDims(2, 4), 2.0);
}

std::pair<double, double> tang_detection_range(double b) {
    if (b <= 0.0 || b >= 1.0)
        throw std::invalid_argument("tang_detection_range: b must be in (0,1)");
    double root = std::sqrt(3.0 * b * (1.0 - b));
    double den = 3.0 + 2.0 * b;
    double u1 = (3.0 * std::sqrt(1.0 - b * b) - root) / den;
    double u2 = b < 12.0 / 37.0 ? 1.0 : (3.0 * std::sqrt(1.0 - b * b) + root) / den;
    return {u1, u2};
}

} // namespace concbound
