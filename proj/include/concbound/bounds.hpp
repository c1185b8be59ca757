#pragma once

// Concurrence: exact values where available, lower bounds otherwise.

#include <map>
#include <string>
#include <vector>

#include "concbound/witnesses.hpp"

namespace concbound {

// C(psi) = sqrt(2 (1 - Tr rho_A^2))
double concurrence_pure(const PureState& psi);

// same value from Schmidt weights: sqrt(2 sum_{k != l} mu_k mu_l)
double concurrence_pure_schmidt(const SchmidtForm& sf);

// same value as 2 sqrt(<psi (x) psi| P_-^{AA'} (x) P_-^{BB'} |psi (x) psi>)
double concurrence_pure_twocopy(const PureState& psi);

// exact two-qubit concurrence, max{0, l1 - l2 - l3 - l4}
double wootters(const DensityOperator& rho);

// real antisymmetric generators L^{(jk)} = |j><k| - |k><j|, j < k lexicographic
std::vector<Matrix> so_generators(Index m);

// sum over generator pairs of squared Wootters-style terms; for dA != dB the
// min(dA,dB) generators are zero-padded into the larger side
double ou_bound(const DensityOperator& rho);

// sqrt(2/(m(m-1))) (max{ ||rho^{T_A}||_1, ||R(rho)||_1 } - 1); can be negative
double caf_bound(const DensityOperator& rho);

// sqrt(2/(m(m-1))) |Tr(rho W)| / alpha; throws unless W detects rho
double breuer_bound(const DensityOperator& rho, const Witness& w, double alpha);

// signed variant used for sweeps: positive iff detecting, no precondition
double witness_bound_signed(const DensityOperator& rho, const Witness& w, double alpha);

// largest concurrence a state on C^dA (x) C^dB can have
double max_concurrence(const BipartiteDims& dims);

// ---------- reports ----------

struct BoundEntry {
    std::string method;                         // "witness", "caf", "ou", "wootters"
    double value = 0.0;                         // unclamped
    std::map<std::string, std::string> params;  // alpha, provenance, flags
};

struct BoundReport {
    std::string state_label;
    std::vector<BoundEntry> bounds;
    double best = 0.0;                          // max of values, clamped at 0
};

BoundEntry witness_entry(const DensityOperator& rho, const Witness& w, double alpha);

// caf always; ou when dA == dB; wootters when 2x2; one witness entry per
// detecting witness (non-detecting ones are reported with their signed value)
BoundReport full_report(const DensityOperator& rho,
                        const std::vector<std::pair<Witness, double>>& witnesses,
                        const std::string& label = "");

double recompute_best(const std::vector<BoundEntry>& entries);

} // namespace concbound
