#include "equiclone/network.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "equiclone/cloners.hpp"

namespace equiclone {

namespace {

const double kOptimalLambda = 3.0 - 2.0 * std::sqrt(2.0);

void require_qubit(int q, int width) {
    if (q < 0 || q >= width) throw std::invalid_argument("qubit index out of range");
}

}  // namespace

Gate Gate::rotation(int target, double angle) {
    Gate g;
    g.kind = Kind::Rotation;
    g.target = target;
    g.angle = angle;
    return g;
}

Gate Gate::cnot(int control, int target) {
    if (control == target) throw std::invalid_argument("CNOT control equals target");
    Gate g;
    g.kind = Kind::Cnot;
    g.control = control;
    g.target = target;
    return g;
}

Ket apply_gate(const Ket& state, const Gate& g) {
    const int n = state.n_qubits;
    require_qubit(g.target, n);
    Ket out = state;
    const std::size_t tmask = std::size_t{1} << (n - 1 - g.target);
    if (g.kind == Gate::Kind::Rotation) {
        const double c = std::cos(g.angle), s = std::sin(g.angle);
        for (std::size_t x = 0; x < out.dim(); ++x) {
            if (x & tmask) continue;
            const std::size_t x1 = x | tmask;
            const cplx a0 = out.amps[x], a1 = out.amps[x1];
            out.amps[x] = c * a0 - s * a1;
            out.amps[x1] = s * a0 + c * a1;
        }
    } else {
        require_qubit(g.control, n);
        const std::size_t cmask = std::size_t{1} << (n - 1 - g.control);
        for (std::size_t x = 0; x < out.dim(); ++x) {
            if ((x & cmask) && !(x & tmask)) std::swap(out.amps[x], out.amps[x | tmask]);
        }
    }
    return out;
}

Ket apply_network(const Ket& state, const GateNetwork& net) {
    if (state.n_qubits != net.width) throw std::invalid_argument("network width mismatch");
    Ket out = state;
    for (const Gate& g : net.gates) out = apply_gate(out, g);
    return out;
}

Ket prepare_state(const AngleSet& angles) {
    // Qubits (a2, a3) = (0, 1) inside this two-qubit register.
    GateNetwork net;
    net.width = 2;
    net.gates = {
        Gate::rotation(0, angles.theta1),
        Gate::cnot(0, 1),
        Gate::rotation(1, angles.theta2),
        Gate::cnot(1, 0),
        Gate::rotation(0, angles.theta3),
    };
    return apply_network(Ket::zero(2), net);
}

AngleSet pc_angles(Equator equator) {
    AngleSet a;
    if (equator == Equator::XZ) {
        a.theta1 = a.theta3 = std::asin(std::sqrt(0.5 - std::sqrt(0.125)));
        a.theta2 = 0.0;
    } else {
        a.theta1 = a.theta3 = std::asin(std::sqrt(0.5 - 0.5 / std::sqrt(3.0)));
        a.theta2 = -std::asin(std::sqrt(0.5 - std::sqrt(3.0) / 4.0));
    }
    return a;
}

AngleSet uqcm_angles() {
    AngleSet a;
    a.theta1 = a.theta3 = std::numbers::pi / 8.0;
    a.theta2 = -std::asin(std::sqrt(0.5 - std::sqrt(2.0) / 3.0));
    return a;
}

Ket copy_circuit(const Ket& input, const Ket& prep) {
    if (input.n_qubits != 1 || prep.n_qubits != 2)
        throw std::invalid_argument("copy circuit expects a 1-qubit input and 2-qubit preparation");
    GateNetwork net;
    net.width = 3;
    net.gates = {
        Gate::cnot(0, 1),
        Gate::cnot(0, 2),
        Gate::cnot(1, 0),
        Gate::cnot(2, 0),
    };
    return apply_network(tensor(input, prep), net);
}

NetworkComparison network_vs_direct(const AngleSet& angles, Equator input_equator, double lambda,
                                    int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("grid needs at least two points");
    const Ket prep = prepare_state(angles);
    NetworkComparison cmp;
    double fid_min = 1.0, fid_max = 0.0, fid_sum = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / grid_points;
        const EquatorialState in(input_equator, angle);
        const Ket psi = ket_from_equatorial(in);

        const Ket net_out = copy_circuit(psi, prep);
        const DensityMatrix net_pair = reduced_density(net_out, {1, 2});
        const DensityMatrix net_rest = reduced_density(net_out, {0});

        const Ket direct_out = input_equator == Equator::XZ ? clone_1to2_xz(lambda, in)
                                                            : clone_1to2_xy(lambda, in);
        const DensityMatrix direct_pair = reduced_density(direct_out, {0, 1});
        const DensityMatrix direct_rest = reduced_density(direct_out, {2});

        cmp.max_copy_deviation =
            std::max(cmp.max_copy_deviation, trace_distance(net_pair, direct_pair));
        cmp.max_leftover_deviation =
            std::max(cmp.max_leftover_deviation, trace_distance(net_rest, direct_rest));

        const double f = fidelity_pure(psi, reduced_density(net_out, {1}));
        fid_min = std::min(fid_min, f);
        fid_max = std::max(fid_max, f);
        fid_sum += f;
    }
    cmp.fidelity_mean = fid_sum / grid_points;
    cmp.fidelity_spread = fid_max - fid_min;
    return cmp;
}

NetworkComparison network_vs_direct(NetworkConfig config, int grid_points) {
    switch (config) {
        case NetworkConfig::PcXz:
            return network_vs_direct(pc_angles(Equator::XZ), Equator::XZ, kOptimalLambda,
                                     grid_points);
        case NetworkConfig::PcXy:
            return network_vs_direct(pc_angles(Equator::XY), Equator::XY, kOptimalLambda,
                                     grid_points);
        case NetworkConfig::Uqcm:
        default:
            return network_vs_direct(uqcm_angles(), Equator::XZ, 0.0, grid_points);
    }
}

}  // namespace equiclone
