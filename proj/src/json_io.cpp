#include "concbound/json_io.hpp"

#include <fstream>

namespace concbound {

using nlohmann::json;

json matrix_to_json(const Matrix& M) {
    json re = json::array(), im = json::array();
    for (Index i = 0; i < M.rows(); ++i) {
        json rre = json::array(), rim = json::array();
        for (Index j = 0; j < M.cols(); ++j) {
            rre.push_back(M(i, j).real());
            rim.push_back(M(i, j).imag());
        }
        re.push_back(std::move(rre));
        im.push_back(std::move(rim));
    }
    return {{"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const json& j) {
    const auto& re = j.at("re");
    if (!re.is_array() || re.empty() || !re[0].is_array())
        throw std::invalid_argument("matrix_from_json: \"re\" must be a 2-d array");
    const Index rows = Index(re.size());
    const Index cols = Index(re[0].size());
    const json* im = j.contains("im") ? &j.at("im") : nullptr;
    if (im && (Index((*im).size()) != rows))
        throw std::invalid_argument("matrix_from_json: \"im\" shape mismatch");
    Matrix M(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        if (Index(re[i].size()) != cols || (im && Index((*im)[i].size()) != cols))
            throw std::invalid_argument("matrix_from_json: ragged rows");
        for (Index jj = 0; jj < cols; ++jj)
            M(i, jj) = Complex(re[i][jj].get<double>(),
                               im ? (*im)[i][jj].get<double>() : 0.0);
    }
    return M;
}

namespace {

BipartiteDims dims_from_json(const json& j) {
    const auto& d = j.at("dims");
    if (!d.is_array() || d.size() != 2)
        throw std::invalid_argument("dims must be [dA, dB]");
    return BipartiteDims(d[0].get<Index>(), d[1].get<Index>());
}

} // namespace

json density_to_json(const DensityOperator& rho) {
    json j = matrix_to_json(rho.matrix);
    j["dims"] = {rho.dims.dA, rho.dims.dB};
    return j;
}

DensityOperator density_from_json(const json& j) {
    return DensityOperator(matrix_from_json(j), dims_from_json(j));
}

json witness_to_json(const Witness& w) {
    json j = matrix_to_json(w.matrix);
    j["dims"] = {w.dims.dA, w.dims.dB};
    if (w.known_lambda) j["lambda"] = *w.known_lambda;
    return j;
}

Witness witness_from_json(const json& j) {
    std::optional<double> lambda;
    if (j.contains("lambda")) lambda = j.at("lambda").get<double>();
    return Witness(matrix_from_json(j), dims_from_json(j), lambda);
}

json report_to_json(const BoundReport& rep) {
    json bounds = json::array();
    for (const auto& e : rep.bounds) {
        json params = json::object();
        for (const auto& [k, v] : e.params) params[k] = v;
        bounds.push_back({{"method", e.method}, {"value", e.value}, {"params", std::move(params)}});
    }
    return {{"state", rep.state_label}, {"bounds", std::move(bounds)}, {"best", rep.best}};
}

json lambda_estimate_to_json(const LambdaEstimate& est) {
    return {{"lambda_hat", est.lambda_hat},
            {"restarts_used", est.restarts_used},
            {"converged", est.converged},
            {"certificate",
             {{"frame_a", matrix_to_json(est.certificate.frame_a)},
              {"frame_b", matrix_to_json(est.certificate.frame_b)}}}};
}

json cdk_report_to_json(const CdkReport& rep) {
    return {{"d", rep.d},
            {"k", rep.k},
            {"lambda_hat", rep.lambda_hat},
            {"conjectured", rep.conjectured},
            {"abs_gap", rep.abs_gap},
            {"converged", rep.converged}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

DensityOperator load_density(const std::string& path) {
    return density_from_json(load_json_file(path));
}

Witness load_witness(const std::string& path) {
    return witness_from_json(load_json_file(path));
}

} // namespace concbound
