#pragma once

// Bipartite pure and mixed states plus the benchmark families.

#include <cstdint>

#include "concbound/linalg.hpp"

namespace concbound {

struct PureState {
    Vector amplitudes;
    BipartiteDims dims;

    PureState(Vector amp, BipartiteDims d);
};

struct DensityOperator {
    Matrix matrix;
    BipartiteDims dims;

    // validates Hermiticity (1e-9 relative), unit trace (1e-10) and
    // positivity (min eigenvalue >= -1e-9)
    DensityOperator(Matrix m, BipartiteDims d);
};

struct SchmidtForm {
    RealVector mu;      // descending Schmidt weights, sum 1
    Matrix basis_a;     // column k is a_k in C^dA
    Matrix basis_b;     // column k is b_k in C^dB
};

DensityOperator pure_density(const PureState& psi);

SchmidtForm schmidt(const PureState& psi);
PureState reconstruct(const SchmidtForm& sf, const BipartiteDims& dims);

// ---------- families ----------

// rho_f = (1-f)/(m^2-1) (I - P_m^+) + f P_m^+ on C^m (x) C^m
DensityOperator isotropic_state(Index m, double f);

// two-qutrit family: N_e (P_3^+ + (1/3) sum_{i != j} d_ij |ij><ij|),
// d_{i,i+1} = eps, d_{i,i+2} = 1/eps (mod 3), N_e = 1/(1 + eps + 1/eps)
DensityOperator epsilon_state(double eps);

// 3x3 PPT-entangled family, parameter 0 < a < 1
DensityOperator horodecki_3x3(double a);

// 2x4 PPT-entangled family, parameter 0 < b < 1
DensityOperator horodecki_2x4(double b);

// d x d family rho_gamma = (1/N) sum_ij |i><j| (x) A_ij, gamma > 0
DensityOperator gamma_state(Index d, double gamma);

// ---------- random states ----------

PureState random_pure(const BipartiteDims& dims, std::uint64_t seed);
DensityOperator random_density(const BipartiteDims& dims, Index rank, std::uint64_t seed);

} // namespace concbound
