#include "equiclone/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace equiclone {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_finite(const std::vector<cplx>& amps) {
    for (const cplx& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("non-finite amplitude");
    }
}

// Maps a (kept-bits, traced-bits) pair back to a full-register index.
// `keep` is sorted ascending; qubit q occupies bit (n-1-q) from the LSB.
struct IndexSplitter {
    int n;
    std::vector<int> keep_shift;
    std::vector<int> rest_shift;

    IndexSplitter(int n_qubits, const std::vector<int>& keep) : n(n_qubits) {
        std::vector<bool> kept(static_cast<std::size_t>(n), false);
        for (int q : keep) kept[static_cast<std::size_t>(q)] = true;
        for (int q = 0; q < n; ++q) {
            (kept[static_cast<std::size_t>(q)] ? keep_shift : rest_shift).push_back(n - 1 - q);
        }
    }

    std::size_t compose(std::size_t kept_bits, std::size_t rest_bits) const {
        std::size_t idx = 0;
        const std::size_t nk = keep_shift.size();
        for (std::size_t i = 0; i < nk; ++i) {
            const std::size_t bit = (kept_bits >> (nk - 1 - i)) & 1u;
            idx |= bit << keep_shift[i];
        }
        const std::size_t nr = rest_shift.size();
        for (std::size_t i = 0; i < nr; ++i) {
            const std::size_t bit = (rest_bits >> (nr - 1 - i)) & 1u;
            idx |= bit << rest_shift[i];
        }
        return idx;
    }
};

std::vector<int> validate_keep(int n_qubits, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("keep set is empty");
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate qubit index in keep set");
    if (sorted.front() < 0 || sorted.back() >= n_qubits)
        throw std::invalid_argument("qubit index out of range in keep set");
    return sorted;
}

}  // namespace

Ket::Ket(int n, std::vector<cplx> a) : n_qubits(n), amps(std::move(a)) {
    if (n < 0 || amps.size() != (std::size_t{1} << n))
        throw std::invalid_argument("amplitude count does not match qubit count");
    check_finite(amps);
}

Ket Ket::zero(int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
    std::vector<cplx> a(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    a[0] = 1.0;
    return Ket(n_qubits, std::move(a));
}

double Ket::norm() const {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

Ket Ket::normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    Ket out = *this;
    for (cplx& a : out.amps) a /= nrm;
    return out;
}

DensityMatrix::DensityMatrix(int n, std::vector<cplx> entries) : n_qubits(n), m(std::move(entries)) {
    const std::size_t d = std::size_t{1} << n;
    if (n < 0 || m.size() != d * d)
        throw std::invalid_argument("entry count does not match qubit count");
    check_finite(m);
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    const std::size_t d = std::size_t{1} << n_qubits;
    std::vector<cplx> m(d * d, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1.0 / static_cast<double>(d);
    return DensityMatrix(n_qubits, std::move(m));
}

double DensityMatrix::trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) t += at(i, i).real();
    return t;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j)
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    return worst;
}

EquatorialState::EquatorialState(Equator e, double a) : equator(e) {
    if (!std::isfinite(a)) throw std::invalid_argument("non-finite equator angle");
    angle = std::fmod(a, kTwoPi);
    if (angle < 0.0) angle += kTwoPi;
}

Ket ket_from_equatorial(const EquatorialState& s) {
    std::vector<cplx> a(2);
    if (s.equator == Equator::XZ) {
        a[0] = std::cos(s.angle);
        a[1] = std::sin(s.angle);
    } else {
        const double r = 1.0 / std::sqrt(2.0);
        a[0] = r;
        a[1] = r * cplx{std::cos(s.angle), std::sin(s.angle)};
    }
    return Ket(1, std::move(a));
}

Ket tensor(const Ket& a, const Ket& b) {
    std::vector<cplx> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            out[i * b.dim() + j] = a.amps[i] * b.amps[j];
    return Ket(a.n_qubits + b.n_qubits, std::move(out));
}

DensityMatrix density_from_ket(const Ket& k) {
    const std::size_t d = k.dim();
    std::vector<cplx> m(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m[i * d + j] = k.amps[i] * std::conj(k.amps[j]);
    return DensityMatrix(k.n_qubits, std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const std::vector<int> sorted = validate_keep(rho.n_qubits, keep);
    const int nk = static_cast<int>(sorted.size());
    const IndexSplitter split(rho.n_qubits, sorted);
    const std::size_t dk = std::size_t{1} << nk;
    const std::size_t dr = std::size_t{1} << (rho.n_qubits - nk);
    std::vector<cplx> out(dk * dk, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t e = 0; e < dr; ++e)
                acc += rho.m[split.compose(i, e) * rho.dim() + split.compose(j, e)];
            out[i * dk + j] = acc;
        }
    return DensityMatrix(nk, std::move(out));
}

DensityMatrix reduced_density(const Ket& k, const std::vector<int>& keep) {
    const std::vector<int> sorted = validate_keep(k.n_qubits, keep);
    const int nk = static_cast<int>(sorted.size());
    const IndexSplitter split(k.n_qubits, sorted);
    const std::size_t dk = std::size_t{1} << nk;
    const std::size_t dr = std::size_t{1} << (k.n_qubits - nk);
    std::vector<cplx> out(dk * dk, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t e = 0; e < dr; ++e)
                acc += k.amps[split.compose(i, e)] * std::conj(k.amps[split.compose(j, e)]);
            out[i * dk + j] = acc;
            out[j * dk + i] = std::conj(acc);
        }
    return DensityMatrix(nk, std::move(out));
}

DensityMatrix partial_transpose(const DensityMatrix& rho, Subsystem which) {
    if (rho.n_qubits != 2) throw std::invalid_argument("partial transpose expects two qubits");
    std::vector<cplx> out(16);
    for (std::size_t i1 = 0; i1 < 2; ++i1)
        for (std::size_t i2 = 0; i2 < 2; ++i2)
            for (std::size_t j1 = 0; j1 < 2; ++j1)
                for (std::size_t j2 = 0; j2 < 2; ++j2) {
                    const std::size_t r = 2 * i1 + i2, c = 2 * j1 + j2;
                    const std::size_t rs = which == Subsystem::Second ? 2 * i1 + j2 : 2 * j1 + i2;
                    const std::size_t cs = which == Subsystem::Second ? 2 * j1 + i2 : 2 * i1 + j2;
                    out[rs * 4 + cs] = rho.m[r * 4 + c];
                }
    return DensityMatrix(2, std::move(out));
}

EigenSystem hermitian_eigensystem(const std::vector<cplx>& input, std::size_t n) {
    if (n == 0 || input.size() != n * n)
        throw std::invalid_argument("matrix size mismatch");
    double fro = 0.0, defect = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            fro += std::norm(input[i * n + j]);
            defect = std::max(defect, std::abs(input[i * n + j] - std::conj(input[j * n + i])));
        }
    fro = std::sqrt(fro);
    if (defect > 1e-10) throw std::invalid_argument("matrix is not Hermitian");

    // Work on the exactly-Hermitian average so drift cannot accumulate.
    std::vector<cplx> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = 0.5 * (input[i * n + j] + std::conj(input[j * n + i]));

    std::vector<cplx> v(n * n, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double stop = 1e-13 * std::max(1.0, fro);
    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p * n + q]);
        off = std::sqrt(2.0 * off);
        if (off <= stop) break;
        if (sweep == kMaxSweeps - 1) throw std::runtime_error("Jacobi eigensolver did not converge");

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a[p * n + q];
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const cplx u = apq / mag;  // e^{i arg(apq)}
                const double theta = (a[q * n + q].real() - a[p * n + p].real()) / (2.0 * mag);
                const double t = theta == 0.0
                                     ? 1.0
                                     : std::copysign(1.0, theta) /
                                           (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a[p * n + p] -= t * mag;
                a[q * n + q] += t * mag;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const cplx aip = a[i * n + p];
                    const cplx aiq = a[i * n + q];
                    a[i * n + p] = c * u * aip - s * aiq;
                    a[i * n + q] = s * u * aip + c * aiq;
                    a[p * n + i] = std::conj(a[i * n + p]);
                    a[q * n + i] = std::conj(a[i * n + q]);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v[i * n + p];
                    const cplx viq = v[i * n + q];
                    v[i * n + p] = c * u * vip - s * viq;
                    v[i * n + q] = s * u * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * n + x].real() < a[y * n + y].real();
    });

    EigenSystem out;
    out.n = n;
    out.values.resize(n);
    out.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a[order[k] * n + order[k]].real();
        for (std::size_t i = 0; i < n; ++i) out.vectors[i * n + k] = v[i * n + order[k]];
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& a, std::size_t n) {
    return hermitian_eigensystem(a, n).values;
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
    return hermitian_eigenvalues(rho.m, rho.dim());
}

double fidelity_pure(const Ket& psi, const DensityMatrix& rho) {
    if (psi.dim() != rho.dim()) throw std::invalid_argument("dimension mismatch");
    cplx acc{0.0, 0.0};
    const std::size_t d = psi.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            acc += std::conj(psi.amps[i]) * rho.m[i * d + j] * psi.amps[j];
    return acc.real();
}

namespace {

std::vector<cplx> matmul(const std::vector<cplx>& x, const std::vector<cplx>& y, std::size_t n) {
    std::vector<cplx> out(n * n, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx xik = x[i * n + k];
            if (xik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += xik * y[k * n + j];
        }
    return out;
}

// V f(D) V^H from an eigensystem; clips eigenvalues in [-1e-12, 0) to zero
// and rejects anything more negative.
std::vector<cplx> psd_sqrt(const EigenSystem& es, const char* what) {
    const std::size_t n = es.n;
    std::vector<cplx> out(n * n, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) {
        double lam = es.values[k];
        if (lam < 0.0) {
            if (lam < -1e-12) throw std::invalid_argument(std::string(what) + " is not PSD");
            lam = 0.0;
        }
        const double r = std::sqrt(lam);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out[i * n + j] += r * es.vectors[i * n + k] * std::conj(es.vectors[j * n + k]);
    }
    return out;
}

}  // namespace

double bures_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = rho.dim();
    const std::vector<cplx> root = psd_sqrt(hermitian_eigensystem(rho.m, n), "rho");
    // sqrt(sigma)'s existence is the PSD check for sigma.
    psd_sqrt(hermitian_eigensystem(sigma.m, n), "sigma");
    const std::vector<cplx> inner = matmul(matmul(root, sigma.m, n), root, n);
    const EigenSystem es = hermitian_eigensystem(inner, n);
    // The square root amplifies rounding noise in the tiny eigenvalues
    // (sqrt(1e-17) ~ 3e-9), so clip relative to the spectral radius.
    const double floor_at = 1e-14 * std::max(1.0, es.values.back());
    double tr = 0.0;
    for (double lam : es.values) {
        if (lam < -1e-12) throw std::invalid_argument("Bures inner operator is not PSD");
        if (lam > floor_at) tr += std::sqrt(lam);
    }
    return tr * tr;
}

double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw std::invalid_argument("dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < rho.m.size(); ++i) s += std::norm(rho.m[i] - sigma.m[i]);
    return std::sqrt(s);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<cplx> diff(rho.m.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = rho.m[i] - sigma.m[i];
    double s = 0.0;
    for (double lam : hermitian_eigenvalues(diff, rho.dim())) s += std::abs(lam);
    return 0.5 * s;
}

BlochVector bloch_vector(const DensityMatrix& rho) {
    if (rho.n_qubits != 1) throw std::invalid_argument("Bloch vector expects one qubit");
    BlochVector b;
    b.x = 2.0 * rho.at(0, 1).real();
    b.y = 2.0 * rho.at(1, 0).imag();
    b.z = rho.at(0, 0).real() - rho.at(1, 1).real();
    return b;
}

}  // namespace equiclone
