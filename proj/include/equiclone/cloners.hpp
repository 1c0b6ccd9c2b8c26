#pragma once

#include <span>
#include <vector>

#include "equiclone/qcore.hpp"

namespace equiclone {

/// Amplitudes over the symmetric (Dicke) basis |(N-k) up, k down>, k = 0..N.
struct SymVector {
    int N = 0;
    std::vector<cplx> amps;  // size N + 1

    SymVector() = default;
    SymVector(int n, std::vector<cplx> a);
};

/// The free parameter of the 1->2 cloning family, with its derived
/// amplitudes q = sqrt(2/(3-2l+3l^2)) and y = (1-l)/sqrt(6-4l+6l^2).
/// l = +/-1 is excluded.
struct Lambda {
    double value = 0.0;
    double q = 0.0;
    double y = 0.0;

    explicit Lambda(double v);
};

/// |Psi>^{(x) N} expanded in the symmetric basis.
SymVector equatorial_power(const EquatorialState& s, int N);

/// Expands a symmetric-basis state into the full 2^N computational basis,
/// weight 1/sqrt(C(N,k)) on each permutation. Capped at N <= 14.
Ket sym_to_full(const SymVector& s);

/// The cloner's action on the symmetric output space tensored with a
/// finite ancilla register: amplitude at (k_out, ancilla r) is
/// amps[k_out * ancilla_dim + r].
struct CloneOutput {
    int m_out = 0;
    int ancilla_dim = 1;
    std::vector<cplx> amps;

    cplx& at(int k, int r) { return amps[static_cast<std::size_t>(k) * ancilla_dim + r]; }
    const cplx& at(int k, int r) const {
        return amps[static_cast<std::size_t>(k) * ancilla_dim + r];
    }
};

/// One sparse amplitude of a cloning isometry.
struct CloningMapEntry {
    int k_in = 0;
    int k_out = 0;
    int ancilla = 0;
    cplx amp;
};

/// An isometry from the (N_in+1)-dimensional symmetric input space into
/// (symmetric M_out space) (x) ancilla, stored as a sparse amplitude table.
struct CloningMap {
    int n_in = 0;
    int m_out = 0;
    int ancilla_dim = 1;
    std::vector<CloningMapEntry> table;

    CloneOutput apply(const SymVector& in) const;
};

/// Largest entry of |V^H V - I| over the input space; < 1e-10 for every
/// map constructed here.
double isometry_check(const CloningMap& map);

/// The lambda-family x-z cloner: |0> -> q(|00> + l|11>)|up> + y(|10>+|01>)|down>,
/// |1> -> q(|11> + l|00>)|down> + y(|10>+|01>)|up>. Copies in qubits (0,1),
/// ancilla in qubit 2. lambda = 0 is the universal cloner, 3 - 2 sqrt(2) the
/// optimal phase-covariant one.
CloningMap xz_family(double lambda);

/// The lambda-family x-y cloner with amplitudes 2(1-l)/sqrt(6-4l+6l^2) and
/// (1+l)/sqrt(6-4l+6l^2); same qubit layout as xz_family.
CloningMap xy_family(double lambda);

/// The explicit 1->3 triplicators: three identical copies in qubits 0..2,
/// no separate ancilla.
CloningMap triplicator(Equator equator);

/// The symmetric 1->M ansatz: |up> -> sum_j alpha_j |(M-j) up, j down> R_j,
/// |down> -> sum_j alpha_{M-1-j} |(M-1-j) up, (j+1) down> R_j.
CloningMap one_to_m(int M, std::span<const double> alphas);

/// The N->M maps: for M = N + 2L a single shift into |(N-j+L) up, (j+L) down>;
/// for M = N + 2L + 1 an equal-weight pair using ancilla slots L and L+1.
CloningMap n_to_m(int N, int M);

/// Coefficients maximizing the 1->M fidelity: 1/sqrt(2) at j = M/2 - 1, M/2
/// for even M, a single 1 at j = (M-1)/2 for odd M.
std::vector<double> optimal_alphas(int M);

Ket clone_1to2_xz(double lambda, const EquatorialState& input);
Ket clone_1to2_xy(double lambda, const EquatorialState& input);
Ket triplicate(Equator equator, const EquatorialState& input);

CloneOutput clone_1toM(int M, std::span<const double> alphas, const EquatorialState& input);
CloneOutput clone_NtoM(int N, int M, double phi);

/// Splits the output by ancilla index into (generally sub-normalized)
/// full-space kets; their squared norms sum to one.
std::vector<Ket> ancilla_sectors(const CloneOutput& out);

/// Reduced state of one output copy (summed over ancilla sectors).
DensityMatrix copy_density(const CloneOutput& out, int qubit = 0);

/// Embeds an output with ancilla_dim <= 2 into an explicit qubit register,
/// appending the ancilla as the least significant qubit when it is there.
Ket clone_output_to_ket(const CloneOutput& out);

}  // namespace equiclone
