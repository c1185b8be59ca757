#include <doctest.h>

#include "concbound/linalg.hpp"
#include "concbound/rng.hpp"

using namespace concbound;

namespace {

Matrix random_hermitian(Index n, std::uint64_t seed) {
    CounterRng rng(seed);
    Matrix G(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) G(i, j) = rng.complex_gaussian();
    return Matrix((G + G.adjoint()) / 2.0);
}

} // namespace

TEST_CASE("bipartite dims validate local dimensions") {
    CHECK_THROWS_AS(BipartiteDims(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteDims(2, 0), std::invalid_argument);
    CHECK(BipartiteDims(2, 4).total() == 8);
    CHECK(BipartiteDims(2, 4).m() == 2);
}

TEST_CASE("partial transpose of the Bell projector has the flip spectrum") {
    BipartiteDims dims(2, 2);
    Matrix pt = partial_transpose(max_entangled_projector(2), dims);
    Spectrum s = hermitian_spectrum(pt);
    CHECK(s.eigenvalues(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.eigenvalues(2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.eigenvalues(3) == doctest::Approx(-0.5).epsilon(1e-12));
    // PT is an involution
    CHECK((partial_transpose(pt, dims) - max_entangled_projector(2)).norm() < 1e-14);
}

TEST_CASE("realignment of the maximally entangled projector has trace norm m") {
    for (Index m : {2, 3, 4}) {
        Matrix R = realign(max_entangled_projector(m), BipartiteDims(m, m));
        CHECK(trace_norm(R) == doctest::Approx(double(m)).epsilon(1e-12));
    }
}

TEST_CASE("realignment is an involution for square local dimensions") {
    BipartiteDims dims(3, 3);
    Matrix H = random_hermitian(9, 11);
    CHECK((realign(realign(H, dims), dims) - H).norm() < 1e-14);
}

TEST_CASE("realignment shape for unequal local dimensions") {
    Matrix H = random_hermitian(8, 12);
    Matrix R = realign(H, BipartiteDims(2, 4));
    CHECK(R.rows() == 4);
    CHECK(R.cols() == 16);
}

TEST_CASE("partial trace of a product operator recovers the factors") {
    Matrix A = random_hermitian(2, 21);
    Matrix B = random_hermitian(3, 22);
    B /= B.trace().real();          // unit trace so the A marginal is exact
    A /= A.trace().real();
    Matrix rho = kron(A, B);
    BipartiteDims dims(2, 3);
    CHECK((partial_trace(rho, dims, Subsystem::A) - A).norm() < 1e-13);
    CHECK((partial_trace(rho, dims, Subsystem::B) - B).norm() < 1e-13);
}

TEST_CASE("kron_vec agrees with the operator kron") {
    CounterRng rng(33);
    Vector a(2), b(3);
    for (Index i = 0; i < 2; ++i) a(i) = rng.complex_gaussian();
    for (Index i = 0; i < 3; ++i) b(i) = rng.complex_gaussian();
    Matrix outer = kron(Matrix(a * a.adjoint()), Matrix(b * b.adjoint()));
    Vector v = kron_vec(a, b);
    CHECK((Matrix(v * v.adjoint()) - outer).norm() < 1e-12);
}

TEST_CASE("flip operator swaps product vectors") {
    CounterRng rng(44);
    Index m = 3;
    Vector a(m), b(m);
    for (Index i = 0; i < m; ++i) {
        a(i) = rng.complex_gaussian();
        b(i) = rng.complex_gaussian();
    }
    CHECK((flip_operator(m) * kron_vec(a, b) - kron_vec(b, a)).norm() < 1e-13);
}

TEST_CASE("hermitian_spectrum sorts descending and rejects non-hermitian input") {
    Matrix H = random_hermitian(5, 55);
    Spectrum s = hermitian_spectrum(H);
    for (Index i = 0; i + 1 < 5; ++i) CHECK(s.eigenvalues(i) >= s.eigenvalues(i + 1));
    // eigen-decomposition reconstructs the matrix
    Matrix rec = s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.adjoint();
    CHECK((rec - H).norm() < 1e-12);
    Matrix bad = H;
    bad(0, 1) += Complex(0.5, 0.5);
    CHECK_THROWS_AS(hermitian_spectrum(bad), std::invalid_argument);
}

TEST_CASE("trace norm equals the sum of singular values of a known matrix") {
    Matrix M = Matrix::Zero(2, 2);
    M(0, 0) = 3.0;
    M(1, 1) = -4.0;
    CHECK(trace_norm(M) == doctest::Approx(7.0).epsilon(1e-14));
}
