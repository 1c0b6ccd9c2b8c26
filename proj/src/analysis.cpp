#include "equiclone/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "equiclone/cloners.hpp"

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

double binom(int n, int k) { return static_cast<double>(binomial(n, k)); }

void require_lambda(double lambda) {
    if (!std::isfinite(lambda)) throw std::invalid_argument("lambda must be finite");
    if (lambda == 1.0 || lambda == -1.0)
        throw std::invalid_argument("lambda = +/-1 is excluded");
}

PTSpectrum classify(double lambda, std::array<double, 4> eigs) {
    std::sort(eigs.begin(), eigs.end());
    PTSpectrum s;
    s.lambda = lambda;
    s.eigenvalues = eigs;
    s.is_ppt = eigs.front() >= kPptThreshold;
    return s;
}

}  // namespace

double eta_1M(std::span<const double> alphas, int M) {
    if (static_cast<int>(alphas.size()) != M)
        throw std::invalid_argument("expected M coefficients");
    double norm2 = 0.0;
    for (double a : alphas) norm2 += a * a;
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("coefficients must be normalized");
    double eta = 0.0;
    for (int j = 0; j < M; ++j)
        eta += alphas[j] * alphas[M - 1 - j] * binom(M - 1, j) /
               std::sqrt(binom(M, j) * binom(M, j + 1));
    return eta;
}

double fidelity_closed_1toM(int M) {
    if (M < 2) throw std::invalid_argument("need M >= 2");
    if (M % 2 == 0) return 0.5 + std::sqrt(static_cast<double>(M) * (M + 2)) / (4.0 * M);
    return 0.5 + (M + 1.0) / (4.0 * M);
}

double fidelity_closed_NtoM(int N, int M) {
    if (N < 1 || M <= N) throw std::invalid_argument("need M > N >= 1");
    const int diff = M - N;
    double sum = 0.0;
    if (diff % 2 == 0) {
        const int L = diff / 2;
        for (int j = 0; j < N; ++j)
            sum += std::sqrt(binom(N, j) * binom(N, j + 1)) *
                   std::sqrt(static_cast<double>(L + j + 1) * (N + L - j)) / (N + 2.0 * L);
        return 0.5 + sum / std::pow(2.0, N);
    }
    const int L = (diff - 1) / 2;
    for (int j = 0; j < N; ++j)
        sum += std::sqrt(binom(N, j) * binom(N, j + 1)) *
               (std::sqrt(static_cast<double>(L + j + 1) * (N + L - j + 1)) +
                std::sqrt(static_cast<double>(L + j + 2) * (N + L - j))) /
               (N + 2.0 * L + 1.0);
    return 0.5 + sum / std::pow(2.0, N + 1);
}

double fidelity_asymptotic(int N) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    double sum = 0.0;
    for (int j = 0; j < N; ++j) sum += std::sqrt(binom(N, j) * binom(N, j + 1));
    return 0.5 + sum / std::pow(2.0, N + 1);
}

FidelityReport simulate_fidelity(int N, int M, int grid_points) {
    if (M > kSimulationCap) throw std::invalid_argument("simulation capped at M = 12");
    if (grid_points < 2) throw std::invalid_argument("grid needs at least two points");
    const CloningMap map = n_to_m(N, M);
    double fid_min = 1.0, fid_max = 0.0, fid_sum = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double phi = 2.0 * std::numbers::pi * i / grid_points;
        const EquatorialState in(Equator::XY, phi);
        const CloneOutput out = map.apply(equatorial_power(in, N));
        const double f = fidelity_pure(ket_from_equatorial(in), copy_density(out));
        fid_min = std::min(fid_min, f);
        fid_max = std::max(fid_max, f);
        fid_sum += f;
    }
    FidelityReport r;
    r.N = N;
    r.M = M;
    r.closed_form = fidelity_closed_NtoM(N, M);
    r.simulated = fid_sum / grid_points;
    r.abs_error = std::abs(r.closed_form - r.simulated);
    r.grid_spread = fid_max - fid_min;
    return r;
}

PTSpectrum pt_spectrum_closed(double lambda) {
    require_lambda(lambda);
    const double l = lambda;
    const double denom = 3.0 - 2.0 * l + 3.0 * l * l;
    const double root = std::sqrt(5.0 + 6.0 * l + 5.0 * l * l);
    return classify(lambda, {
                                0.5 * (1.0 - 6.0 * l + l * l) / denom,
                                0.5 * (1.0 + 2.0 * l + l * l) / denom,
                                (1.0 + l * l + 0.5 * (1.0 - l) * root) / denom,
                                (1.0 + l * l - 0.5 * (1.0 - l) * root) / denom,
                            });
}

PTSpectrum pt_spectrum_numeric(double lambda, double theta) {
    const Ket out = clone_1to2_xz(lambda, EquatorialState(Equator::XZ, theta));
    const DensityMatrix pair = reduced_density(out, {0, 1});
    const DensityMatrix pt = partial_transpose(pair, Subsystem::Second);
    const std::vector<double> eigs = hermitian_eigenvalues(pt);
    return classify(lambda, {eigs[0], eigs[1], eigs[2], eigs[3]});
}

DensityMatrix pt_matrix_printed(double lambda, double theta) {
    require_lambda(lambda);
    const double l = lambda;
    const double a = std::cos(theta), b = std::sin(theta);
    const double denom = 3.0 - 2.0 * l + 3.0 * l * l;
    const double ab = a * b * (1.0 - l * l);
    const double corner = 0.5 * (1.0 - l) * (1.0 - l);
    std::vector<cplx> m{
        2.0 * (a * a + l * l * b * b), ab,      ab,      corner,
        ab,                            corner,  2.0 * l, ab,
        ab,                            2.0 * l, corner,  ab,
        corner,                        ab,      ab,      2.0 * (b * b + l * l * a * a),
    };
    for (cplx& e : m) e /= denom;
    return DensityMatrix(2, std::move(m));
}

std::vector<PTSpectrum> separability_sweep(double lambda_min, double lambda_max, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep needs at least two points");
    if (!(lambda_min < lambda_max)) throw std::invalid_argument("empty lambda range");
    std::vector<PTSpectrum> table;
    table.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double l = lambda_min + (lambda_max - lambda_min) * i / (steps - 1.0);
        if (l == 1.0 || l == -1.0) continue;
        table.push_back(pt_spectrum_closed(l));
    }
    return table;
}

double reduced_forms_check(double lambda, const EquatorialState& input) {
    require_lambda(lambda);
    const Ket out = input.equator == Equator::XZ ? clone_1to2_xz(lambda, input)
                                                 : clone_1to2_xy(lambda, input);
    const DensityMatrix rho_in = density_from_ket(ket_from_equatorial(input));
    const double l = lambda;
    const double denom = 3.0 - 2.0 * l + 3.0 * l * l;
    const double copy_scale = 2.0 * (1.0 - l * l) / denom;
    const double copy_iden = 0.5 * (1.0 - 2.0 * l + 5.0 * l * l) / denom;
    const double rest_scale = (1.0 + l) * (1.0 + l) / denom;
    const double rest_iden = (1.0 - l) * (1.0 - l) / denom;

    double worst = 0.0;
    for (int copy : {0, 1}) {
        const DensityMatrix rho = reduced_density(out, {copy});
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const cplx expect =
                    copy_scale * rho_in.at(i, j) + (i == j ? copy_iden : 0.0);
                worst = std::max(worst, std::abs(rho.at(i, j) - expect));
            }
    }
    const DensityMatrix rest = reduced_density(out, {2});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            // transposition taken in the computational basis
            const cplx expect = rest_scale * rho_in.at(j, i) + (i == j ? rest_iden : 0.0);
            worst = std::max(worst, std::abs(rest.at(i, j) - expect));
        }
    return worst;
}

}  // namespace equiclone
