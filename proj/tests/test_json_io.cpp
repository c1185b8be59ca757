#include <doctest.h>

#include <fstream>

#include "concbound/json_io.hpp"

using namespace concbound;

TEST_CASE("density operators survive a serialization round trip") {
    DensityOperator rho = random_density(BipartiteDims(2, 3), 3, 41);
    DensityOperator back = density_from_json(density_to_json(rho));
    CHECK(back.dims == rho.dims);
    CHECK((back.matrix - rho.matrix).norm() < 1e-12);
}

TEST_CASE("witness serialization keeps the optional scale") {
    nlohmann::json with = witness_to_json(iso_witness(3, 1));
    CHECK(with.contains("lambda"));
    Witness w = witness_from_json(with);
    CHECK(*w.known_lambda == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    nlohmann::json without = witness_to_json(sixia_yu_witness(0.5));
    CHECK_FALSE(without.contains("lambda"));
    CHECK_FALSE(witness_from_json(without).known_lambda.has_value());
}

TEST_CASE("malformed matrices are rejected") {
    nlohmann::json ragged = {{"re", {{1.0, 0.0}, {0.0}}}};
    CHECK_THROWS(matrix_from_json(ragged));

    nlohmann::json mismatched = {{"re", {{1.0, 0.0}, {0.0, 0.0}}},
                                 {"im", {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}}};
    CHECK_THROWS(matrix_from_json(mismatched));

    // valid matrix, invalid state: constructor invariants still apply
    nlohmann::json not_a_state = {{"dims", {2, 2}},
                                  {"re", {{1.0, 0, 0, 0}, {0, 1.0, 0, 0},
                                          {0, 0, 0, 0}, {0, 0, 0, 0}}}};
    CHECK_THROWS_AS(density_from_json(not_a_state), std::invalid_argument);
}

TEST_CASE("report serialization exposes methods, params and best") {
    DensityOperator bell = pure_density(PureState(max_entangled_ket(2), BipartiteDims(2, 2)));
    Witness w = iso_witness(2, 1);
    nlohmann::json j = report_to_json(full_report(bell, {{w, *w.known_lambda}}, "bell"));
    CHECK(j["state"] == "bell");
    CHECK(j["bounds"].size() == 4);
    CHECK(j["bounds"][0]["method"] == "witness");
    CHECK(j["bounds"][0]["params"]["detected"] == "true");
    CHECK(j["best"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("lambda estimate serialization carries the certificate frames") {
    OptimizerConfig cfg;
    cfg.restarts = 4;
    cfg.iters = 300;
    LambdaEstimate est = lambda_estimate(iso_witness(2, 1), cfg);
    nlohmann::json j = lambda_estimate_to_json(est);
    CHECK(j["lambda_hat"].get<double>() == est.lambda_hat);
    CHECK(j["converged"].is_boolean());
    CHECK(j["certificate"]["frame_a"]["re"].size() == 2);   // dA rows
}

TEST_CASE("fixture file loads into the expected state") {
    DensityOperator bell = load_density(std::string(TEST_FIXTURE_DIR) + "/bell.json");
    CHECK(bell.dims == BipartiteDims(2, 2));
    CHECK(bell.matrix(0, 3).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS(load_density(std::string(TEST_FIXTURE_DIR) + "/no_such_file.json"));
}
