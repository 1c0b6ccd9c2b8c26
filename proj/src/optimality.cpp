#include "equiclone/optimality.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace equiclone {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::vector<cplx> complexify(const std::vector<double>& real) {
    std::vector<cplx> out(real.size());
    for (std::size_t i = 0; i < real.size(); ++i) out[i] = real[i];
    return out;
}

}  // namespace

AMatrix build_A(int M) {
    if (M < 2) throw std::invalid_argument("need M >= 2");
    AMatrix a;
    a.M = M;
    const std::size_t dim = a.dim();
    a.entries.assign(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) a.entries[i * dim + i] = 0.25;
    for (int k = 0; k < M; ++k) {
        const double w = std::sqrt(static_cast<double>(M - k) * (k + 1)) / (4.0 * M);
        const std::size_t up = static_cast<std::size_t>(k);            // (0, k)
        const std::size_t down = static_cast<std::size_t>(M + 1) + k + 1;  // (1, k+1)
        a.entries[up * dim + down] = w;
        a.entries[down * dim + up] = w;
    }
    return a;
}

EtaGram build_eta_gram(int M) {
    if (M < 2) throw std::invalid_argument("need M >= 2");
    EtaGram g;
    g.M = M;
    g.entries.assign(static_cast<std::size_t>(M) * M, 0.0);
    for (int j = 0; j < M; ++j) {
        const double c = static_cast<double>(binomial(M - 1, j)) /
                         std::sqrt(static_cast<double>(binomial(M, j)) *
                                   static_cast<double>(binomial(M, j + 1)));
        const int p = j, q = M - 1 - j;
        g.entries[static_cast<std::size_t>(p) * M + q] += 0.5 * c;
        g.entries[static_cast<std::size_t>(q) * M + p] += 0.5 * c;
    }
    return g;
}

std::pair<double, double> block_eigenvalues(int M, int k) {
    if (M < 2) throw std::invalid_argument("need M >= 2");
    if (k < 0 || k > M - 1) throw std::invalid_argument("block index out of range");
    const double c = std::sqrt(static_cast<double>(M - k) * (k + 1)) / M;
    return {(1.0 - c) / 4.0, (1.0 + c) / 4.0};
}

double optimal_fidelity_via_A(int M) {
    const AMatrix a = build_A(M);
    const std::vector<double> eigs = hermitian_eigenvalues(complexify(a.entries), a.dim());
    return 2.0 * eigs.back();
}

EtaMax maximize_eta(int M) {
    const EtaGram g = build_eta_gram(M);
    const EigenSystem es =
        hermitian_eigensystem(complexify(g.entries), static_cast<std::size_t>(M));
    EtaMax out;
    out.eta_max = es.values.back();
    out.eigenspace_dim = 0;
    for (double v : es.values)
        if (out.eta_max - v < 1e-12) ++out.eigenspace_dim;
    out.argmax.resize(M);
    const std::size_t top = es.n - 1;
    for (int i = 0; i < M; ++i)
        out.argmax[i] = es.vectors[static_cast<std::size_t>(i) * es.n + top].real();
    // Fix the overall sign so the representative has a nonnegative leading
    // nonzero component.
    for (double v : out.argmax) {
        if (std::abs(v) > 1e-12) {
            if (v < 0.0)
                for (double& x : out.argmax) x = -x;
            break;
        }
    }
    return out;
}

}  // namespace equiclone
