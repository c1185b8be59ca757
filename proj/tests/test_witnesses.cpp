#include <doctest.h>

#include <cmath>

#include "concbound/states.hpp"
#include "concbound/witnesses.hpp"

using namespace concbound;

namespace {

DensityOperator singlet() {
    Vector v = Vector::Zero(4);
    v(1) = 1.0 / std::sqrt(2.0);
    v(2) = -1.0 / std::sqrt(2.0);
    return pure_density(PureState(v, BipartiteDims(2, 2)));
}

} // namespace

TEST_CASE("flip expectation is -1 on the singlet and nonnegative on products") {
    Witness f = flip_witness(2);
    CHECK(expectation(f, singlet()) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(min_product_expectation(f, 300, 5) >= -1e-10);
}

TEST_CASE("iso witness detects the maximally entangled state") {
    Witness w = iso_witness(2, 1);
    CHECK(*w.known_lambda == doctest::Approx(0.5).epsilon(1e-15));
    Vector bell = max_entangled_ket(2);
    DensityOperator rho = pure_density(PureState(bell, BipartiteDims(2, 2)));
    CHECK(detects(w, rho));
    CHECK(expectation(w, rho) == doctest::Approx(-0.5).epsilon(1e-12));
    DensityOperator mixed(Matrix::Identity(4, 4) / 4.0, BipartiteDims(2, 2));
    CHECK_FALSE(detects(w, mixed));
}

TEST_CASE("expectation rejects dimension mismatch") {
    DensityOperator mixed(Matrix::Identity(4, 4) / 4.0, BipartiteDims(2, 2));
    CHECK_THROWS_AS(expectation(flip_witness(3), mixed), std::invalid_argument);
}

TEST_CASE("structural witness coincides with the first decomposable 3x3 one at k=1") {
    CHECK((wdk_witness(3, 1).matrix - choi_witness(1).matrix).norm() == 0.0);
}

TEST_CASE("conjectured scale table") {
    CHECK(cdk_conjecture(3, 1) == 1.0);
    CHECK(cdk_conjecture(4, 1) == 1.5);
    CHECK(cdk_conjecture(4, 2) == 1.0);        // k = d-2 takes precedence
    CHECK(cdk_conjecture(5, 1) == 2.0);
    CHECK(cdk_conjecture(5, 2) == 1.25);
    CHECK(cdk_conjecture(5, 3) == 1.0);
    CHECK(cdk_conjecture(6, 2) == 2.0);
    CHECK(cdk_conjecture(6, 3) == 1.25);
    CHECK_THROWS_AS(wdk_witness(3, 2), std::invalid_argument);
}

TEST_CASE("block positivity of the parametric witnesses on sampled products") {
    for (double u : {0.1, 0.5, 1.0})
        CHECK(min_product_expectation(tang_witness(u), 300, 9) >= -1e-9);
    for (Index d = 3; d <= 5; ++d)
        for (Index k = 1; k <= d - 2; ++k)
            CHECK(min_product_expectation(wdk_witness(d, k), 200, 9) >= -1e-9);
}

TEST_CASE("tang detection range brackets the sign change") {
    double b = 0.4;
    DensityOperator rho = horodecki_2x4(b);
    auto [u1, u2] = tang_detection_range(b);
    CHECK(u1 > 0.0);
    CHECK(u2 <= 1.0);
    CHECK(expectation(tang_witness(u1), rho) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(expectation(tang_witness(u1 - 0.05), rho) > 0.0);
    CHECK(expectation(tang_witness(0.5 * (u1 + u2)), rho) < 0.0);
}

TEST_CASE("known scales carried by constructors") {
    CHECK(*flip_witness(4).known_lambda == 1.0);
    CHECK(*iso_witness(4, 1).known_lambda == 0.25);
    CHECK(*choi_witness(2).known_lambda == 1.0);
    CHECK(*wdk_witness(5, 2).known_lambda == 1.25);
    CHECK(*tang_witness(0.5).known_lambda == 2.0);
    CHECK_FALSE(sixia_yu_witness(0.5).known_lambda.has_value());
}

TEST_CASE("published normalization of the 3x3 structural factor") {
    CHECK(sixia_yu_f(0.5) == doctest::Approx(15.850867484147358).epsilon(1e-12));
    double a = 0.5;
    DensityOperator rho = horodecki_3x3(a);
    double closed = 2.0 * (2.0 + 33 * a + 145 * a * a + 63 * a * a * a) / (1.0 + 8.0 * a);
    CHECK((sixia_yu_v(a) * rho.matrix).trace().real() ==
          doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("witness constructor validates hermiticity and scale") {
    Matrix bad = Matrix::Zero(4, 4);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(Witness(bad, BipartiteDims(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(Witness(Matrix::Identity(4, 4), BipartiteDims(2, 2), -1.0),
                    std::invalid_argument);
}
