#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace equiclone {

using cplx = std::complex<double>;

// Norm / trace / hermiticity tolerance for constructed states.
inline constexpr double kStateTol = 1e-12;
// Default comparison tolerance for closed-form checks.
inline constexpr double kDefaultTol = 1e-9;

enum class Equator { XZ, XY };

/// Pure n-qubit state. Qubit 0 is the most significant bit, so
/// |b1 b2 b3> lives at index 4*b1 + 2*b2 + b3.
struct Ket {
    int n_qubits = 0;
    std::vector<cplx> amps;

    Ket() = default;
    Ket(int n, std::vector<cplx> a);

    /// |00...0>
    static Ket zero(int n_qubits);

    std::size_t dim() const { return amps.size(); }
    double norm() const;
    Ket normalized() const;
};

/// Hermitian trace-one operator on n qubits, stored dense row-major.
/// Positivity is not required: partial transposes live here too.
struct DensityMatrix {
    int n_qubits = 0;
    std::vector<cplx> m;

    DensityMatrix() = default;
    DensityMatrix(int n, std::vector<cplx> entries);

    static DensityMatrix maximally_mixed(int n_qubits);

    std::size_t dim() const { return std::size_t{1} << n_qubits; }
    cplx& at(std::size_t r, std::size_t c) { return m[r * dim() + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return m[r * dim() + c]; }
    double trace_real() const;
    double hermiticity_defect() const;  // max |m[i][j] - conj(m[j][i])|
};

/// A point on one of the two equators handled by the cloners: XZ carries
/// cos(theta)|0> + sin(theta)|1>, XY carries (|0> + e^{i phi}|1>)/sqrt(2).
/// The angle is wrapped into [0, 2pi).
struct EquatorialState {
    Equator equator = Equator::XZ;
    double angle = 0.0;

    EquatorialState(Equator e, double a);
};

struct BlochVector {
    double x = 0.0, y = 0.0, z = 0.0;
};

Ket ket_from_equatorial(const EquatorialState& s);

/// Kronecker product; qubits of `a` become the most significant block.
Ket tensor(const Ket& a, const Ket& b);

DensityMatrix density_from_ket(const Ket& k);

/// Reduced state on the qubits in `keep` (0-based, qubit 0 = MSB).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Same reduction computed straight from a pure state, without forming the
/// full outer product. Accepts sub-normalized kets so callers can sum
/// contributions from orthogonal sectors.
DensityMatrix reduced_density(const Ket& k, const std::vector<int>& keep);

enum class Subsystem { First, Second };

/// Transpose one factor of a two-qubit operator. Involution; preserves
/// trace and hermiticity, not positivity.
DensityMatrix partial_transpose(const DensityMatrix& rho, Subsystem which);

/// All eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi,
/// off-diagonal norm driven below 1e-13 (relative to the Frobenius norm).
std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& a, std::size_t n);
std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho);

struct EigenSystem {
    std::vector<double> values;   // ascending
    std::vector<cplx> vectors;    // column i (row-major n x n) pairs with values[i]
    std::size_t n = 0;
};

EigenSystem hermitian_eigensystem(const std::vector<cplx>& a, std::size_t n);

/// <psi| rho |psi>
double fidelity_pure(const Ket& psi, const DensityMatrix& rho);

/// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2. Requires both operators PSD;
/// eigenvalues in [-1e-12, 0) are clipped to zero before the square roots.
double bures_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// sqrt(Tr[(rho - sigma)^2])
double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (1/2) Tr |rho - sigma|
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (x, y, z) = (2 Re rho01, 2 Im rho10, rho00 - rho11); |0> sits at +z and
/// real-amplitude states span the x-z plane.
BlochVector bloch_vector(const DensityMatrix& rho);

}  // namespace equiclone
