#pragma once

#include <random>
#include <vector>

#include "equiclone/qcore.hpp"

namespace equiclone::test {

inline Ket random_ket(int n_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << n_qubits);
    for (cplx& a : amps) a = cplx{gauss(rng), gauss(rng)};
    return Ket(n_qubits, std::move(amps)).normalized();
}

// Convex mixture of a few random pure states: PSD, trace one.
inline DensityMatrix random_density(int n_qubits, std::mt19937_64& rng, int rank = 3) {
    const std::size_t d = std::size_t{1} << n_qubits;
    std::uniform_real_distribution<double> uni(0.1, 1.0);
    std::vector<double> w(rank);
    double total = 0.0;
    for (double& x : w) total += (x = uni(rng));
    std::vector<cplx> m(d * d, cplx{0.0, 0.0});
    for (int r = 0; r < rank; ++r) {
        const Ket psi = random_ket(n_qubits, rng);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m[i * d + j] += (w[r] / total) * psi.amps[i] * std::conj(psi.amps[j]);
    }
    return DensityMatrix(n_qubits, std::move(m));
}

inline double max_entry_deviation(const DensityMatrix& a, const DensityMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.m.size(); ++i)
        worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

}  // namespace equiclone::test
