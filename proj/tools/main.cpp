// concbound: lower bounds on bipartite concurrence from entanglement
// witnesses, partial transposition and realignment.
//
// Exit codes: 0 success, 2 input error, 3 internal invariant violation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "concbound/json_io.hpp"
#include "concbound/selftest.hpp"

using namespace concbound;

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << text;
}

// selector grammar: flip, iso:k, choi1, choi2, wdk:d,k, tang:u, sixiayu:a.
// flip and iso take their dimension from dims (state or --dims).
Witness make_witness(const std::string& sel, const std::optional<BipartiteDims>& dims) {
    std::string head = sel, tail;
    if (auto pos = sel.find(':'); pos != std::string::npos) {
        head = sel.substr(0, pos);
        tail = sel.substr(pos + 1);
    }
    auto nums = [&](std::size_t want) {
        std::vector<double> out;
        for (const std::string& item : split(tail, ',')) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(item, &used);
            } catch (const std::exception&) {
                used = std::string::npos;
            }
            if (used != item.size())
                throw std::invalid_argument("bad number '" + item + "' in witness selector " + sel);
            out.push_back(v);
        }
        if (out.size() != want)
            throw std::invalid_argument("witness selector " + sel + " takes " +
                                        std::to_string(want) + " argument(s)");
        return out;
    };
    auto need_m = [&]() {
        if (!dims)
            throw std::invalid_argument("witness '" + sel + "' needs a dimension (--dims or a state)");
        if (dims->dA != dims->dB)
            throw std::invalid_argument("witness '" + sel + "' needs equal local dimensions");
        return dims->dA;
    };
    if (head == "flip") return flip_witness(need_m());
    if (head == "iso") return iso_witness(need_m(), Index(nums(1)[0]));
    if (head == "choi1") return choi_witness(1);
    if (head == "choi2") return choi_witness(2);
    if (head == "wdk") {
        auto a = nums(2);
        return wdk_witness(Index(a[0]), Index(a[1]));
    }
    if (head == "tang") return tang_witness(nums(1)[0]);
    if (head == "sixiayu") return sixia_yu_witness(nums(1)[0]);
    throw std::invalid_argument("unknown witness selector '" + sel +
                                "' (flip, iso:k, choi1, choi2, wdk:d,k, tang:u, sixiayu:a)");
}

DensityOperator make_family_state(const std::string& family, double p, Index m) {
    if (family == "isotropic") return isotropic_state(m, p);
    if (family == "epsilon") return epsilon_state(p);
    if (family == "horodecki3x3") return horodecki_3x3(p);
    if (family == "horodecki2x4") return horodecki_2x4(p);
    if (family == "gamma") return gamma_state(m, p);
    throw std::invalid_argument("unknown family '" + family + "'");
}

BipartiteDims family_dims(const std::string& family, Index m) {
    if (family == "isotropic" || family == "gamma") return BipartiteDims(m, m);
    if (family == "epsilon" || family == "horodecki3x3") return BipartiteDims(3, 3);
    if (family == "horodecki2x4") return BipartiteDims(2, 4);
    throw std::invalid_argument("unknown family '" + family + "'");
}

struct AlphaChoice {
    enum Mode { Auto, Known, Estimate, Explicit } mode = Auto;
    double value = 0.0;
};

AlphaChoice parse_alpha(const std::string& s) {
    if (s == "auto") return {AlphaChoice::Auto, 0.0};
    if (s == "known") return {AlphaChoice::Known, 0.0};
    if (s == "estimate") return {AlphaChoice::Estimate, 0.0};
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != s.size() || v <= 0.0)
        throw std::invalid_argument("--alpha must be known, estimate, auto or a positive number");
    return {AlphaChoice::Explicit, v};
}

// numeric alpha for the sweep command, where one value serves the whole grid
double resolve_alpha(const Witness& w, const AlphaChoice& a, const OptimizerConfig& cfg) {
    switch (a.mode) {
        case AlphaChoice::Explicit: return a.value;
        case AlphaChoice::Known:
            if (!w.known_lambda)
                throw std::invalid_argument("witness has no known scale, use --alpha estimate");
            return *w.known_lambda;
        case AlphaChoice::Estimate:
            return cfg.margin * lambda_estimate(w, cfg).lambda_hat;
        case AlphaChoice::Auto:
        default:
            return w.known_lambda ? *w.known_lambda
                                  : cfg.margin * lambda_estimate(w, cfg).lambda_hat;
    }
}

BoundEntry resolve_entry(const DensityOperator& rho, const Witness& w, const AlphaChoice& a,
                         const OptimizerConfig& cfg) {
    switch (a.mode) {
        case AlphaChoice::Explicit: {
            BoundEntry e = witness_entry(rho, w, a.value);
            e.params["alpha_source"] = "explicit";
            return e;
        }
        case AlphaChoice::Known:
            if (!w.known_lambda)
                throw std::invalid_argument("witness has no known scale, use --alpha estimate");
            return rescaled_bound(rho, w, cfg);
        case AlphaChoice::Estimate:
            return rescaled_bound(rho, Witness(w.matrix, w.dims), cfg);
        case AlphaChoice::Auto:
        default:
            return rescaled_bound(rho, w, cfg);
    }
}

void add_optimizer_flags(CLI::App* sub, OptimizerConfig& cfg) {
    sub->add_option("--seed", cfg.seed, "rng seed");
    sub->add_option("--restarts", cfg.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
    sub->add_option("--iters", cfg.iters, "iterations per restart")->check(CLI::PositiveNumber);
    sub->add_option("--step0", cfg.step0, "initial step size")->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.step_tol, "step size stopping tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--margin", cfg.margin, "multiplier on the estimated scale")
        ->check(CLI::PositiveNumber);
}

struct BoundOpts {
    std::string family, state_file, label, alpha = "auto", out;
    std::vector<std::string> witnesses, witness_files;
    double param = 0.0;
    Index m = 3;
    OptimizerConfig cfg;
};

int run_bound(const BoundOpts& o) {
    DensityOperator rho = o.state_file.empty() ? make_family_state(o.family, o.param, o.m)
                                               : load_density(o.state_file);
    AlphaChoice alpha = parse_alpha(o.alpha);
    std::vector<BoundEntry> wentries;
    for (const std::string& sel : o.witnesses)
        wentries.push_back(resolve_entry(rho, make_witness(sel, rho.dims), alpha, o.cfg));
    for (const std::string& path : o.witness_files)
        wentries.push_back(resolve_entry(rho, load_witness(path), alpha, o.cfg));
    std::string label = o.label;
    if (label.empty())
        label = o.state_file.empty() ? o.family + "(" + fmt17(o.param) + ")" : o.state_file;
    BoundReport rep = full_report(rho, {}, label);
    rep.bounds.insert(rep.bounds.begin(), wentries.begin(), wentries.end());
    rep.best = recompute_best(rep.bounds);
    emit(report_to_json(rep).dump(2) + "\n", o.out);
    return 0;
}

struct SweepOpts {
    std::string family, witness, alpha = "auto", methods = "witness,caf", out;
    double start = 0.0, stop = 0.0;
    int points = 50;
    bool log = false, clamp = false;
    Index m = 3;
    OptimizerConfig cfg;
};

int run_sweep(const SweepOpts& o) {
    std::vector<std::string> methods = split(o.methods, ',');
    if (methods.empty()) throw std::invalid_argument("--methods must name at least one method");
    BipartiteDims dims = family_dims(o.family, o.m);
    std::optional<Witness> w;
    double alpha = 0.0;
    for (const std::string& mth : methods) {
        if (mth == "witness") {
            if (o.witness.empty())
                throw std::invalid_argument("--methods includes witness, pass --witness");
            w = make_witness(o.witness, dims);
            alpha = resolve_alpha(*w, parse_alpha(o.alpha), o.cfg);
        } else if (mth == "ou") {
            if (dims.dA != dims.dB)
                throw std::invalid_argument("ou needs equal local dimensions");
        } else if (mth == "wootters") {
            if (!(dims == BipartiteDims(2, 2)))
                throw std::invalid_argument("wootters needs a two-qubit family");
        } else if (mth != "caf") {
            throw std::invalid_argument("unknown method '" + mth +
                                        "' (witness, caf, ou, wootters)");
        }
    }
    if (o.points < 2) throw std::invalid_argument("--points must be at least 2");
    if (o.log && (o.start <= 0.0 || o.stop <= 0.0))
        throw std::invalid_argument("--log needs positive grid endpoints");
    std::ostringstream csv;
    csv << "param";
    for (const std::string& mth : methods) csv << "," << mth;
    csv << "\n";
    for (int i = 0; i < o.points; ++i) {
        double t = double(i) / (o.points - 1);
        double p = o.log ? std::exp(std::log(o.start) + t * (std::log(o.stop) - std::log(o.start)))
                         : o.start + t * (o.stop - o.start);
        DensityOperator rho = make_family_state(o.family, p, o.m);
        csv << fmt17(p);
        for (const std::string& mth : methods) {
            double v = 0.0;
            if (mth == "witness") v = witness_bound_signed(rho, *w, alpha);
            else if (mth == "caf") v = caf_bound(rho);
            else if (mth == "ou") v = ou_bound(rho);
            else v = wootters(rho);
            if (o.clamp) v = std::max(0.0, v);
            csv << "," << fmt17(v);
        }
        csv << "\n";
    }
    emit(csv.str(), o.out);
    return 0;
}

struct LambdaOpts {
    std::string witness, witness_file, out;
    std::vector<Index> dims;
    OptimizerConfig cfg;
};

int run_lambda(const LambdaOpts& o) {
    std::optional<BipartiteDims> dims;
    if (o.dims.size() == 1) dims = BipartiteDims(o.dims[0], o.dims[0]);
    else if (o.dims.size() == 2) dims = BipartiteDims(o.dims[0], o.dims[1]);
    Witness w = o.witness_file.empty() ? make_witness(o.witness, dims)
                                       : load_witness(o.witness_file);
    LambdaEstimate est = lambda_estimate(w, o.cfg);
    emit(lambda_estimate_to_json(est).dump(2) + "\n", o.out);
    return 0;
}

struct CdkOpts {
    Index dmin = 3, dmax = 5;
    std::string format = "csv", out;
    OptimizerConfig cfg;
};

int run_verify_cdk(const CdkOpts& o) {
    if (o.dmin < 3 || o.dmax > 6 || o.dmin > o.dmax)
        throw std::invalid_argument("d range must satisfy 3 <= dmin <= dmax <= 6");
    std::vector<CdkReport> rows;
    for (Index d = o.dmin; d <= o.dmax; ++d)
        for (Index k = 1; k <= d - 2; ++k) rows.push_back(verify_cdk(d, k, o.cfg));
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const CdkReport& r : rows) arr.push_back(cdk_report_to_json(r));
        emit(arr.dump(2) + "\n", o.out);
    } else {
        std::ostringstream csv;
        csv << "d,k,lambda_hat,conjectured,gap,converged\n";
        for (const CdkReport& r : rows)
            csv << r.d << "," << r.k << "," << fmt17(r.lambda_hat) << ","
                << fmt17(r.conjectured) << "," << fmt17(r.abs_gap) << ","
                << (r.converged ? "true" : "false") << "\n";
        emit(csv.str(), o.out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lower bounds on bipartite concurrence from entanglement witnesses,\n"
                 "partial transposition and realignment"};
    app.require_subcommand(1);

    const std::vector<std::string> families = {"isotropic", "epsilon", "horodecki3x3",
                                               "horodecki2x4", "gamma"};

    BoundOpts bo;
    CLI::App* bound = app.add_subcommand("bound", "bound report for one state (JSON)");
    auto* bo_family = bound->add_option("--family", bo.family, "named state family")
                          ->check(CLI::IsMember(families));
    auto* bo_param = bound->add_option("--param", bo.param, "family parameter");
    auto* bo_state = bound->add_option("--state", bo.state_file, "density operator JSON file")
                         ->check(CLI::ExistingFile);
    bound->add_option("--dims", bo.m, "local dimension for isotropic/gamma")->check(CLI::Range(2, 16));
    bound->add_option("--witness", bo.witnesses, "witness selector, repeatable");
    bound->add_option("--witness-file", bo.witness_files, "witness JSON file, repeatable")
        ->check(CLI::ExistingFile);
    bound->add_option("--alpha", bo.alpha, "known | estimate | auto | positive value");
    bound->add_option("--label", bo.label, "state label in the report");
    bound->add_option("--out", bo.out, "write to file instead of stdout");
    add_optimizer_flags(bound, bo.cfg);
    bo_state->excludes(bo_family);
    bo_family->needs(bo_param);

    SweepOpts so;
    CLI::App* sweep = app.add_subcommand("sweep", "bounds along a family parameter grid (CSV)");
    sweep->add_option("--family", so.family, "named state family")
        ->required()
        ->check(CLI::IsMember(families));
    sweep->add_option("--start", so.start, "grid start")->required();
    sweep->add_option("--stop", so.stop, "grid stop")->required();
    sweep->add_option("--points", so.points, "grid points")->check(CLI::Range(2, 100000));
    sweep->add_flag("--log", so.log, "logarithmic grid");
    sweep->add_option("--dims", so.m, "local dimension for isotropic/gamma")->check(CLI::Range(2, 16));
    sweep->add_option("--witness", so.witness, "witness selector");
    sweep->add_option("--alpha", so.alpha, "known | estimate | auto | positive value");
    sweep->add_option("--methods", so.methods, "comma list of witness,caf,ou,wootters");
    sweep->add_flag("--clamp", so.clamp, "clamp emitted values at 0");
    sweep->add_option("--out", so.out, "write to file instead of stdout");
    add_optimizer_flags(sweep, so.cfg);

    LambdaOpts lo;
    CLI::App* lambda = app.add_subcommand("lambda", "estimate the optimal witness scale (JSON)");
    auto* lo_sel = lambda->add_option("--witness", lo.witness, "witness selector");
    auto* lo_file = lambda->add_option("--witness-file", lo.witness_file, "witness JSON file")
                        ->check(CLI::ExistingFile);
    lambda->add_option("--dims", lo.dims, "local dimensions dA [dB] for flip/iso")
        ->expected(1, 2)
        ->check(CLI::Range(2, 16));
    lambda->add_option("--out", lo.out, "write to file instead of stdout");
    add_optimizer_flags(lambda, lo.cfg);
    lo_sel->excludes(lo_file);

    CdkOpts co;
    CLI::App* cdk = app.add_subcommand("verify-cdk", "estimated vs conjectured witness scales");
    cdk->add_option("--dmin", co.dmin, "smallest dimension");
    cdk->add_option("--dmax", co.dmax, "largest dimension (at most 6)");
    cdk->add_option("--format", co.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cdk->add_option("--out", co.out, "write to file instead of stdout");
    add_optimizer_flags(cdk, co.cfg);

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*bound) {
            if (bo.family.empty() && bo.state_file.empty())
                throw std::invalid_argument("bound needs --family or --state");
            return run_bound(bo);
        }
        if (*sweep) return run_sweep(so);
        if (*lambda) {
            if (lo.witness.empty() && lo.witness_file.empty())
                throw std::invalid_argument("lambda needs --witness or --witness-file");
            return run_lambda(lo);
        }
        if (*cdk) return run_verify_cdk(co);
        if (*selftest) return run_selftest(std::cout) == 0 ? 0 : 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
