#pragma once

#include <utility>
#include <vector>

#include "equiclone/qcore.hpp"

namespace equiclone {

/// The real symmetric matrix bounding the 1->M fidelity via F = 2 lambda_max.
/// Rows and columns are indexed by pairs (j, k) with j in {0,1}, k in 0..M,
/// flattened as j*(M+1) + k. Diagonal entries are 1/4; index (0,k) couples
/// to (1,k+1) with weight sqrt((M-k)(k+1))/(4M). The states (1,0) and (0,M)
/// have no partner and stay uncoupled.
struct AMatrix {
    int M = 0;
    std::vector<double> entries;  // row-major, dimension 2(M+1)

    std::size_t dim() const { return 2 * static_cast<std::size_t>(M + 1); }
    double at(int j, int k, int jp, int kp) const {
        return entries[(static_cast<std::size_t>(j) * (M + 1) + k) * dim() +
                       static_cast<std::size_t>(jp) * (M + 1) + kp];
    }
};

/// eta(1,M) recast as a quadratic form alpha^T G alpha, so its maximum over
/// unit vectors is the top eigenvalue of G.
struct EtaGram {
    int M = 0;
    std::vector<double> entries;  // row-major, M x M, symmetric
};

AMatrix build_A(int M);
EtaGram build_eta_gram(int M);

/// Eigenvalues {(1-c)/4, (1+c)/4} of the 2x2 block at k, c = sqrt((M-k)(k+1))/M.
std::pair<double, double> block_eigenvalues(int M, int k);

/// 2 * lambda_max(A), computed with the generic Hermitian eigensolver.
double optimal_fidelity_via_A(int M);

struct EtaMax {
    double eta_max = 0.0;
    std::vector<double> argmax;  // one representative unit vector
    int eigenspace_dim = 1;      // degeneracy of the top eigenvalue
};

/// Independent route to the optimum: top eigenpair of the eta Gram matrix.
/// For even M the maximizer is degenerate, so the eigenspace dimension is
/// reported alongside one representative.
EtaMax maximize_eta(int M);

}  // namespace equiclone
