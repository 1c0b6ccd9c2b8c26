#pragma once

#include <array>
#include <span>
#include <vector>

#include "equiclone/qcore.hpp"

namespace equiclone {

struct FidelityReport {
    int N = 0;
    int M = 0;
    double closed_form = 0.0;
    double simulated = 0.0;
    double abs_error = 0.0;
    double grid_spread = 0.0;  // max - min of the simulated value over the angle grid
};

struct PTSpectrum {
    double lambda = 0.0;
    std::array<double, 4> eigenvalues{};  // ascending
    bool is_ppt = false;
};

/// PPT threshold: an eigenvalue above this counts as nonnegative. Sits
/// between numerical noise and the eigenvalue gap near the PPT point.
inline constexpr double kPptThreshold = -1e-10;

/// Simulation cap: full-space expansion grows as 2^M.
inline constexpr int kSimulationCap = 12;

/// Shrink factor eta(1,M) = sum_j alpha_j alpha_{M-1-j} C(M-1,j)/sqrt(C(M,j) C(M,j+1));
/// the single-copy fidelity is (1 + eta)/2.
double eta_1M(std::span<const double> alphas, int M);

/// Optimal 1->M fidelity: 1/2 + sqrt(M(M+2))/(4M) for even M,
/// 1/2 + (M+1)/(4M) for odd M.
double fidelity_closed_1toM(int M);

/// Optimal N->M fidelity from the even/odd offset closed forms; reduces to
/// fidelity_closed_1toM at N = 1.
double fidelity_closed_NtoM(int N, int M);

/// The M -> infinity limit 1/2 + 2^{-(N+1)} sum_j sqrt(C(N,j) C(N,j+1)),
/// the optimal phase-estimation fidelity.
double fidelity_asymptotic(int N);

/// Brute-force check of the closed form: expand the cloner output in the
/// full 2^M space, trace to one copy, and average the fidelity over a phase
/// grid. Requires M <= 12.
FidelityReport simulate_fidelity(int N, int M, int grid_points = 128);

/// The four closed-form eigenvalues of the partially transposed copy-pair
/// state; theta-independent.
PTSpectrum pt_spectrum_closed(double lambda);

/// Same spectrum measured from the simulated cloner output at a specific
/// input angle.
PTSpectrum pt_spectrum_numeric(double lambda, double theta);

/// The partially transposed copy-pair operator written out termwise
/// (alpha = cos theta, beta = sin theta).
DensityMatrix pt_matrix_printed(double lambda, double theta);

std::vector<PTSpectrum> separability_sweep(double lambda_min, double lambda_max, int steps);

/// Max elementwise deviation of the simulated copy and leftover-qubit
/// states from their closed forms
///   rho_copy = [2(1-l^2) rho_in + (1-2l+5l^2)/2 I] / (3-2l+3l^2)
///   rho_anc  = [(1+l)^2 rho_in^T + (1-l)^2 I] / (3-2l+3l^2).
double reduced_forms_check(double lambda, const EquatorialState& input);

}  // namespace equiclone
