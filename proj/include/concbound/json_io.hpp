#pragma once

// JSON (de)serialization. Matrices are {"re": [[...]], "im": [[...]]} with
// row-major nested arrays; doubles round-trip losslessly.

#include <string>

#include <json.hpp>

#include "concbound/lambda_opt.hpp"

namespace concbound {

nlohmann::json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const nlohmann::json& j);

// {"dims": [dA, dB], "re": ..., "im": ...}
nlohmann::json density_to_json(const DensityOperator& rho);
DensityOperator density_from_json(const nlohmann::json& j);

// density schema plus optional "lambda"
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

// {"state": ..., "bounds": [{"method","value","params"}...], "best": ...}
nlohmann::json report_to_json(const BoundReport& rep);

nlohmann::json lambda_estimate_to_json(const LambdaEstimate& est);

nlohmann::json cdk_report_to_json(const CdkReport& rep);

// file helpers used by the CLI
nlohmann::json load_json_file(const std::string& path);
DensityOperator load_density(const std::string& path);
Witness load_witness(const std::string& path);

} // namespace concbound
