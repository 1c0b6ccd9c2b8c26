#include "equiclone/cloners.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace equiclone {

namespace {

constexpr int kSymExpandCap = 14;

// Exact in 64-bit integers far beyond the desk-scale N, M used here.
std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

void require_equator(const EquatorialState& s, Equator expected) {
    if (s.equator != expected)
        throw std::invalid_argument("input state lies on the wrong equator");
}

}  // namespace

Lambda::Lambda(double v) : value(v) {
    if (!std::isfinite(v)) throw std::invalid_argument("lambda must be finite");
    if (v == 1.0 || v == -1.0) throw std::invalid_argument("lambda = +/-1 is excluded");
    const double denom = 3.0 - 2.0 * v + 3.0 * v * v;
    q = std::sqrt(2.0 / denom);
    y = (1.0 - v) / std::sqrt(2.0 * denom);
}

SymVector::SymVector(int n, std::vector<cplx> a) : N(n), amps(std::move(a)) {
    if (n < 0 || amps.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("symmetric vector needs N+1 amplitudes");
}

SymVector equatorial_power(const EquatorialState& s, int N) {
    if (N < 1) throw std::invalid_argument("need at least one input copy");
    std::vector<cplx> amps(static_cast<std::size_t>(N) + 1);
    if (s.equator == Equator::XZ) {
        const double c = std::cos(s.angle), d = std::sin(s.angle);
        for (int j = 0; j <= N; ++j)
            amps[j] = std::sqrt(static_cast<double>(binomial(N, j))) *
                      std::pow(c, N - j) * std::pow(d, j);
    } else {
        const double scale = std::pow(2.0, -0.5 * N);
        for (int j = 0; j <= N; ++j) {
            const cplx phase{std::cos(j * s.angle), std::sin(j * s.angle)};
            amps[j] = scale * std::sqrt(static_cast<double>(binomial(N, j))) * phase;
        }
    }
    return SymVector(N, std::move(amps));
}

Ket sym_to_full(const SymVector& s) {
    if (s.N > kSymExpandCap) throw std::invalid_argument("symmetric expansion capped at N = 14");
    const std::size_t d = std::size_t{1} << s.N;
    std::vector<cplx> amps(d, cplx{0.0, 0.0});
    std::vector<double> weight(static_cast<std::size_t>(s.N) + 1);
    for (int k = 0; k <= s.N; ++k)
        weight[k] = 1.0 / std::sqrt(static_cast<double>(binomial(s.N, k)));
    for (std::size_t x = 0; x < d; ++x) {
        const int k = std::popcount(x);  // down-spins are the 1 bits
        amps[x] = s.amps[k] * weight[k];
    }
    return Ket(s.N, std::move(amps));
}

CloneOutput CloningMap::apply(const SymVector& in) const {
    if (in.N != n_in) throw std::invalid_argument("input size does not match the map");
    CloneOutput out;
    out.m_out = m_out;
    out.ancilla_dim = ancilla_dim;
    out.amps.assign(static_cast<std::size_t>(m_out + 1) * ancilla_dim, cplx{0.0, 0.0});
    for (const CloningMapEntry& e : table) out.at(e.k_out, e.ancilla) += e.amp * in.amps[e.k_in];
    return out;
}

double isometry_check(const CloningMap& map) {
    const int d = map.n_in + 1;
    // Gram[j][j'] = sum over (k_out, ancilla) of conj(V[.,j]) V[.,j'].
    std::vector<cplx> gram(static_cast<std::size_t>(d) * d, cplx{0.0, 0.0});
    for (const CloningMapEntry& a : map.table)
        for (const CloningMapEntry& b : map.table) {
            if (a.k_out != b.k_out || a.ancilla != b.ancilla) continue;
            gram[static_cast<std::size_t>(a.k_in) * d + b.k_in] += std::conj(a.amp) * b.amp;
        }
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const cplx expect = i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            const double dev = std::abs(gram[static_cast<std::size_t>(i) * d + j] - expect);
            if (dev > worst) worst = dev;
        }
    return worst;
}

CloningMap xz_family(double lambda) {
    const Lambda l(lambda);
    CloningMap map;
    map.n_in = 1;
    map.m_out = 2;
    map.ancilla_dim = 2;
    // |10> + |01> = sqrt(2) |1 up, 1 down>.
    const double ysym = l.y * std::sqrt(2.0);
    map.table = {
        {0, 0, 0, l.q},  // q |00>|up>
        {0, 2, 0, l.q * lambda},
        {0, 1, 1, ysym},
        {1, 2, 1, l.q},  // q |11>|down>
        {1, 0, 1, l.q * lambda},
        {1, 1, 0, ysym},  // the y-term of the second line carries |up>
    };
    return map;
}

CloningMap xy_family(double lambda) {
    const Lambda l(lambda);
    const double root = std::sqrt(6.0 - 4.0 * lambda + 6.0 * lambda * lambda);
    const double a = 2.0 * (1.0 - lambda) / root;
    const double b = (1.0 + lambda) / root;
    const double bsym = b * std::sqrt(2.0);
    CloningMap map;
    map.n_in = 1;
    map.m_out = 2;
    map.ancilla_dim = 2;
    map.table = {
        {0, 0, 0, a},
        {0, 1, 1, bsym},
        {1, 2, 1, a},
        {1, 1, 0, bsym},
    };
    return map;
}

CloningMap triplicator(Equator equator) {
    CloningMap map;
    map.n_in = 1;
    map.m_out = 3;
    map.ancilla_dim = 1;
    if (equator == Equator::XZ) {
        // (1/sqrt(12)) [3|000> + |011> + |101> + |110>] and its flip:
        // sqrt(3)/2 on the stretched component, 1/2 on the Dicke partner.
        const double major = std::sqrt(3.0) / 2.0;
        map.table = {
            {0, 0, 0, major},
            {0, 2, 0, 0.5},
            {1, 3, 0, major},
            {1, 1, 0, 0.5},
        };
    } else {
        // Uniform over the three weight-1 (resp. weight-2) states.
        map.table = {
            {0, 1, 0, 1.0},
            {1, 2, 0, 1.0},
        };
    }
    return map;
}

CloningMap one_to_m(int M, std::span<const double> alphas) {
    if (M < 2) throw std::invalid_argument("need M >= 2");
    if (static_cast<int>(alphas.size()) != M)
        throw std::invalid_argument("expected M coefficients");
    double norm2 = 0.0;
    for (double a : alphas) norm2 += a * a;
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("coefficients must be normalized");
    CloningMap map;
    map.n_in = 1;
    map.m_out = M;
    map.ancilla_dim = M;
    for (int j = 0; j < M; ++j) {
        map.table.push_back({0, j, j, alphas[j]});
        map.table.push_back({1, j + 1, j, alphas[M - 1 - j]});
    }
    return map;
}

CloningMap n_to_m(int N, int M) {
    if (N < 1 || M <= N) throw std::invalid_argument("need M > N >= 1");
    CloningMap map;
    map.n_in = N;
    map.m_out = M;
    map.ancilla_dim = M + 1;
    const int diff = M - N;
    if (diff % 2 == 0) {
        const int L = diff / 2;
        for (int j = 0; j <= N; ++j) map.table.push_back({j, j + L, L, 1.0});
    } else {
        const int L = (diff - 1) / 2;
        const double w = 1.0 / std::sqrt(2.0);
        for (int j = 0; j <= N; ++j) {
            map.table.push_back({j, j + L, L, w});
            map.table.push_back({j, j + L + 1, L + 1, w});
        }
    }
    return map;
}

std::vector<double> optimal_alphas(int M) {
    if (M < 2) throw std::invalid_argument("need M >= 2");
    std::vector<double> a(static_cast<std::size_t>(M), 0.0);
    if (M % 2 == 0) {
        a[M / 2 - 1] = a[M / 2] = 1.0 / std::sqrt(2.0);
    } else {
        a[(M - 1) / 2] = 1.0;
    }
    return a;
}

Ket clone_1to2_xz(double lambda, const EquatorialState& input) {
    require_equator(input, Equator::XZ);
    return clone_output_to_ket(xz_family(lambda).apply(equatorial_power(input, 1)));
}

Ket clone_1to2_xy(double lambda, const EquatorialState& input) {
    require_equator(input, Equator::XY);
    return clone_output_to_ket(xy_family(lambda).apply(equatorial_power(input, 1)));
}

Ket triplicate(Equator equator, const EquatorialState& input) {
    require_equator(input, equator);
    return clone_output_to_ket(triplicator(equator).apply(equatorial_power(input, 1)));
}

CloneOutput clone_1toM(int M, std::span<const double> alphas, const EquatorialState& input) {
    require_equator(input, Equator::XY);
    return one_to_m(M, alphas).apply(equatorial_power(input, 1));
}

CloneOutput clone_NtoM(int N, int M, double phi) {
    return n_to_m(N, M).apply(equatorial_power(EquatorialState(Equator::XY, phi), N));
}

std::vector<Ket> ancilla_sectors(const CloneOutput& out) {
    std::vector<Ket> sectors;
    sectors.reserve(out.ancilla_dim);
    for (int r = 0; r < out.ancilla_dim; ++r) {
        SymVector s(out.m_out, std::vector<cplx>(static_cast<std::size_t>(out.m_out) + 1));
        for (int k = 0; k <= out.m_out; ++k) s.amps[k] = out.at(k, r);
        sectors.push_back(sym_to_full(s));
    }
    return sectors;
}

DensityMatrix copy_density(const CloneOutput& out, int qubit) {
    if (qubit < 0 || qubit >= out.m_out) throw std::invalid_argument("copy index out of range");
    DensityMatrix rho(1, std::vector<cplx>(4, cplx{0.0, 0.0}));
    for (const Ket& sector : ancilla_sectors(out)) {
        const DensityMatrix part = reduced_density(sector, {qubit});
        for (std::size_t i = 0; i < 4; ++i) rho.m[i] += part.m[i];
    }
    return rho;
}

Ket clone_output_to_ket(const CloneOutput& out) {
    if (out.ancilla_dim > 2)
        throw std::invalid_argument("only ancilla dimensions 1 and 2 embed into qubits");
    const std::vector<Ket> sectors = ancilla_sectors(out);
    if (out.ancilla_dim == 1) return sectors[0];
    const std::size_t d = sectors[0].dim();
    std::vector<cplx> amps(2 * d);
    for (std::size_t x = 0; x < d; ++x) {
        amps[2 * x] = sectors[0].amps[x];
        amps[2 * x + 1] = sectors[1].amps[x];
    }
    return Ket(out.m_out + 1, std::move(amps));
}

}  // namespace equiclone
