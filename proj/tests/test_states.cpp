#include <doctest.h>

#include "concbound/bounds.hpp"
#include "concbound/rng.hpp"
#include "concbound/states.hpp"
#include "concbound/witnesses.hpp"

using namespace concbound;

TEST_CASE("schmidt decomposition reconstructs the state") {
    BipartiteDims dims(3, 4);
    PureState psi = random_pure(dims, 7);
    SchmidtForm sf = schmidt(psi);
    CHECK(sf.mu.sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (Index i = 0; i + 1 < sf.mu.size(); ++i) CHECK(sf.mu(i) >= sf.mu(i + 1));
    CHECK((Matrix(sf.basis_a.adjoint() * sf.basis_a) - Matrix::Identity(3, 3)).norm() < 1e-12);
    CHECK((Matrix(sf.basis_b.adjoint() * sf.basis_b) - Matrix::Identity(3, 3)).norm() < 1e-12);
    PureState back = reconstruct(sf, dims);
    // global phase is fixed by the SVD, amplitudes must match exactly
    CHECK((back.amplitudes - psi.amplitudes).norm() < 1e-12);
}

TEST_CASE("density operator constructor enforces its invariants") {
    BipartiteDims dims(2, 2);
    Matrix ok = Matrix::Identity(4, 4) / 4.0;
    CHECK_NOTHROW(DensityOperator(ok, dims));

    Matrix bad_trace = Matrix::Identity(4, 4);
    CHECK_THROWS_AS(DensityOperator(bad_trace, dims), std::invalid_argument);

    Matrix not_herm = ok;
    not_herm(0, 1) = Complex(0.1, 0.2);
    CHECK_THROWS_AS(DensityOperator(not_herm, dims), std::invalid_argument);

    Matrix not_psd = Matrix::Zero(4, 4);
    not_psd(0, 0) = 1.5;
    not_psd(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityOperator(not_psd, dims), std::invalid_argument);
}

TEST_CASE("isotropic state has the requested entangled fraction") {
    Matrix P = max_entangled_projector(3);
    for (double f : {0.0, 0.37, 1.0}) {
        DensityOperator rho = isotropic_state(3, f);
        CHECK((P * rho.matrix).trace().real() == doctest::Approx(f).epsilon(1e-12));
    }
    CHECK_THROWS_AS(isotropic_state(3, 1.2), std::invalid_argument);
}

TEST_CASE("epsilon family is entangled on both sides of epsilon = 1") {
    // realignment crosses 1 exactly where the family is entangled
    CHECK(caf_bound(epsilon_state(2.0)) == doctest::Approx(0.09049285356784022).epsilon(1e-12));
    CHECK(caf_bound(epsilon_state(0.5)) > 0.0);
    CHECK_THROWS_AS(epsilon_state(0.0), std::invalid_argument);
}

TEST_CASE("3x3 family is PPT yet caught by realignment") {
    DensityOperator rho = horodecki_3x3(0.5);
    Spectrum s = hermitian_spectrum(partial_transpose(rho.matrix, rho.dims));
    CHECK(s.eigenvalues.minCoeff() >= -1e-9);
    CHECK(trace_norm(realign(rho.matrix, rho.dims)) ==
          doctest::Approx(1.0023272046579454).epsilon(1e-12));
}

TEST_CASE("2x4 family matches the witness trace closed form") {
    double b = 0.4, u = 0.6;
    DensityOperator rho = horodecki_2x4(b);
    double closed = (3 - 3 * b - 6 * u * std::sqrt(1 - b * b) + 3 * u * u + 2 * b * u * u) /
                    (6 + 42 * b);
    CHECK(expectation(tang_witness(u), rho) == doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("gamma family satisfies the k-independent witness trace identity") {
    Index d = 4;
    double g = 0.7;
    DensityOperator rho = gamma_state(d, g);
    double N = double(d * d) - 2.0 + g * g + 1.0 / (g * g);
    for (Index k = 1; k <= d - 2; ++k)
        CHECK(expectation(wdk_witness(d, k), rho) ==
              doctest::Approx((g * g - 1.0) / N).epsilon(1e-12));
}

TEST_CASE("random densities honour rank and seed") {
    BipartiteDims dims(2, 3);
    DensityOperator r2 = random_density(dims, 2, 99);
    Spectrum s = hermitian_spectrum(r2.matrix);
    int nonzero = 0;
    for (Index i = 0; i < s.eigenvalues.size(); ++i)
        if (s.eigenvalues(i) > 1e-12) ++nonzero;
    CHECK(nonzero == 2);
    DensityOperator again = random_density(dims, 2, 99);
    CHECK((again.matrix - r2.matrix).norm() == 0.0);
    DensityOperator other = random_density(dims, 2, 100);
    CHECK((other.matrix - r2.matrix).norm() > 1e-3);
}
