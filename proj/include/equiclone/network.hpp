#pragma once

#include <vector>

#include "equiclone/qcore.hpp"

namespace equiclone {

/// One circuit element: either a real rotation on a single qubit,
/// R(t)|0> = cos t |0> + sin t |1>, R(t)|1> = -sin t |0> + cos t |1>,
/// or a CNOT that flips `target` when `control` is |1>.
struct Gate {
    enum class Kind { Rotation, Cnot };

    Kind kind = Kind::Rotation;
    int target = 0;
    int control = -1;    // CNOT only
    double angle = 0.0;  // rotation only

    static Gate rotation(int target, double angle);
    static Gate cnot(int control, int target);
};

struct GateNetwork {
    int width = 0;
    std::vector<Gate> gates;  // applied front to back
};

/// The three rotation angles parameterizing the preparation stage.
struct AngleSet {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double theta3 = 0.0;
};

Ket apply_gate(const Ket& state, const Gate& g);
Ket apply_network(const Ket& state, const GateNetwork& net);

/// Two-qubit preparation state R2(t3) P32 R3(t2) P23 R2(t1) |00>.
Ket prepare_state(const AngleSet& angles);

/// Angle sets realizing the optimal phase-covariant preparation states
/// (lambda = 3 - 2 sqrt(2)) for each equator.
AngleSet pc_angles(Equator equator);

/// Angle set realizing the universal 1->2 cloner (lambda = 0).
AngleSet uqcm_angles();

/// Four-CNOT copying stage P_{31} P_{21} P_{13} P_{12} on input (x) prep.
/// The copies come out in qubits 1 and 2; qubit 0 is left over.
Ket copy_circuit(const Ket& input, const Ket& prep);

/// Which (angle set, reference isometry, input equator) triple to compare.
enum class NetworkConfig { PcXz, PcXy, Uqcm };

struct NetworkComparison {
    double max_copy_deviation = 0.0;      // trace distance, two-qubit copy pair
    double max_leftover_deviation = 0.0;  // trace distance, remaining qubit
    double fidelity_mean = 0.0;           // single-copy fidelity from the network
    double fidelity_spread = 0.0;         // max - min over the grid

    double max_deviation() const {
        return max_copy_deviation > max_leftover_deviation ? max_copy_deviation
                                                           : max_leftover_deviation;
    }
};

/// Runs the gate network and the direct isometry side by side over an input
/// angle grid, comparing the reduced copy-pair and leftover-qubit states.
/// The network places copies in qubits (1,2), the isometry in (0,1); the
/// comparison is made on the reduced operators so only physics is compared.
NetworkComparison network_vs_direct(const AngleSet& angles, Equator input_equator, double lambda,
                                    int grid_points);
NetworkComparison network_vs_direct(NetworkConfig config, int grid_points);

}  // namespace equiclone
