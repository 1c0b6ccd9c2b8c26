#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "equiclone/cloners.hpp"
#include "equiclone/network.hpp"
#include "helpers.hpp"

using namespace equiclone;
using equiclone::test::max_entry_deviation;
using equiclone::test::random_ket;

namespace {
const double kPi = std::numbers::pi;
const double kFOpt = 0.5 + std::sqrt(0.125);  // 0.8535533905932738
}  // namespace

TEST_CASE("rotation gate definition") {
    std::mt19937_64 rng(101);
    const Ket psi = random_ket(3, rng);
    const Ket same = apply_gate(psi, Gate::rotation(1, 0.0));
    for (std::size_t i = 0; i < psi.dim(); ++i) CHECK(std::abs(psi.amps[i] - same.amps[i]) < 1e-15);

    const Ket rotated = apply_gate(Ket(1, {1.0, 0.0}), Gate::rotation(0, kPi / 8.0));
    CHECK(rotated.amps[0].real() == doctest::Approx(std::cos(kPi / 8.0)).epsilon(1e-15));
    CHECK(rotated.amps[1].real() == doctest::Approx(std::sin(kPi / 8.0)).epsilon(1e-15));

    const Ket flipped = apply_gate(Ket(1, {0.0, 1.0}), Gate::rotation(0, 0.3));
    CHECK(flipped.amps[0].real() == doctest::Approx(-std::sin(0.3)).epsilon(1e-15));
    CHECK(flipped.amps[1].real() == doctest::Approx(std::cos(0.3)).epsilon(1e-15));
}

TEST_CASE("controlled NOT action table") {
    const Gate cnot01 = Gate::cnot(0, 1);
    // |00> -> |00>, |01> -> |01>, |10> -> |11>, |11> -> |10>
    const std::size_t expected[4] = {0, 1, 3, 2};
    for (std::size_t basis = 0; basis < 4; ++basis) {
        std::vector<cplx> amps(4, cplx{0.0, 0.0});
        amps[basis] = 1.0;
        const Ket out = apply_gate(Ket(2, std::move(amps)), cnot01);
        CHECK(std::abs(out.amps[expected[basis]] - 1.0) < 1e-15);
    }
}

TEST_CASE("gate preconditions") {
    CHECK_THROWS_AS(Gate::cnot(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(Ket(2, {1.0, 0.0, 0.0, 0.0}), Gate::rotation(2, 0.1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(Ket(2, {1.0, 0.0, 0.0, 0.0}), Gate::cnot(0, 3)),
                    std::invalid_argument);
}

TEST_CASE("networks preserve norm") {
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
    GateNetwork net;
    net.width = 3;
    net.gates = {Gate::rotation(0, uni(rng)), Gate::cnot(0, 2), Gate::rotation(2, uni(rng)),
                 Gate::cnot(2, 1), Gate::rotation(1, uni(rng)), Gate::cnot(1, 0)};
    for (int trial = 0; trial < 25; ++trial) {
        const Ket out = apply_network(random_ket(3, rng), net);
        CHECK(std::abs(out.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("prepare_state with zero angles leaves |00>") {
    const Ket prep = prepare_state({0.0, 0.0, 0.0});
    CHECK(std::abs(prep.amps[0] - 1.0) < 1e-15);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(prep.amps[i]) < 1e-15);
}

TEST_CASE("printed preparation states come out of the angle sets") {
    const Ket xy = prepare_state(pc_angles(Equator::XY));
    CHECK(std::abs(xy.amps[0] - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(xy.amps[1] - 0.5) < 1e-12);
    CHECK(std::abs(xy.amps[2] - 0.5) < 1e-12);
    CHECK(std::abs(xy.amps[3]) < 1e-12);

    const Ket xz = prepare_state(pc_angles(Equator::XZ));
    CHECK(std::abs(xz.amps[0] - (0.5 + std::sqrt(0.125))) < 1e-12);
    CHECK(std::abs(xz.amps[1] - std::sqrt(0.125)) < 1e-12);
    CHECK(std::abs(xz.amps[2] - std::sqrt(0.125)) < 1e-12);
    CHECK(std::abs(xz.amps[3] - (0.5 - std::sqrt(0.125))) < 1e-12);

    // lambda = 0 preparation: q|00> + y(|01> + |10>) with q = sqrt(2/3).
    const Ket uq = prepare_state(uqcm_angles());
    CHECK(std::abs(uq.amps[0] - std::sqrt(2.0 / 3.0)) < 1e-12);
    CHECK(std::abs(uq.amps[1] - 1.0 / std::sqrt(6.0)) < 1e-12);
    CHECK(std::abs(uq.amps[2] - 1.0 / std::sqrt(6.0)) < 1e-12);
    CHECK(std::abs(uq.amps[3]) < 1e-12);
}

TEST_CASE("angle sets evaluate the printed arcsin expressions") {
    const AngleSet xz = pc_angles(Equator::XZ);
    CHECK(xz.theta2 == 0.0);
    CHECK(xz.theta1 == doctest::Approx(kPi / 8.0).epsilon(1e-15));
    CHECK(xz.theta3 == xz.theta1);

    const AngleSet xy = pc_angles(Equator::XY);
    CHECK(xy.theta1 == doctest::Approx(0.47765830906225464).epsilon(1e-14));
    CHECK(xy.theta2 == doctest::Approx(-kPi / 12.0).epsilon(1e-14));

    const AngleSet uq = uqcm_angles();
    CHECK(uq.theta1 == doctest::Approx(kPi / 8.0).epsilon(1e-15));
    CHECK(uq.theta2 == doctest::Approx(-0.16991845472706097).epsilon(1e-14));
}

TEST_CASE("copy_circuit on trivial input is the identity") {
    const Ket out = copy_circuit(Ket(1, {1.0, 0.0}), Ket::zero(2));
    CHECK(std::abs(out.amps[0] - 1.0) < 1e-15);
    for (std::size_t i = 1; i < 8; ++i) CHECK(std::abs(out.amps[i]) < 1e-15);
}

TEST_CASE("network copies reach the optimal fidelity on both equators") {
    for (Equator eq : {Equator::XZ, Equator::XY}) {
        const Ket prep = prepare_state(pc_angles(eq));
        for (int i = 0; i < 32; ++i) {
            const EquatorialState in(eq, 2.0 * kPi * i / 32.0);
            const Ket psi = ket_from_equatorial(in);
            const Ket out = copy_circuit(psi, prep);
            for (int copy : {1, 2})
                CHECK(fidelity_pure(psi, reduced_density(out, {copy})) ==
                      doctest::Approx(kFOpt).epsilon(1e-12));
        }
    }
}

TEST_CASE("network copy pair decomposes along the input and its orthogonal") {
    const Ket prep = prepare_state(pc_angles(Equator::XY));
    for (int i = 0; i < 8; ++i) {
        const double phi = 2.0 * kPi * i / 8.0;
        const Ket psi = ket_from_equatorial({Equator::XY, phi});
        const Ket out = copy_circuit(psi, prep);
        const DensityMatrix copy = reduced_density(out, {1});

        const double r = 1.0 / std::sqrt(2.0);
        const Ket perp(1, {r, -r * cplx{std::cos(phi), std::sin(phi)}});
        DensityMatrix expect = density_from_ket(psi);
        const DensityMatrix perp_dm = density_from_ket(perp);
        for (std::size_t k = 0; k < 4; ++k)
            expect.m[k] = kFOpt * expect.m[k] + (1.0 - kFOpt) * perp_dm.m[k];
        CHECK(max_entry_deviation(copy, expect) < 1e-12);
    }
}

TEST_CASE("the two network copies are the same state") {
    for (Equator eq : {Equator::XZ, Equator::XY}) {
        const Ket prep = prepare_state(pc_angles(eq));
        for (int i = 0; i < 16; ++i) {
            const Ket out =
                copy_circuit(ket_from_equatorial({eq, 2.0 * kPi * i / 16.0}), prep);
            CHECK(max_entry_deviation(reduced_density(out, {1}), reduced_density(out, {2})) <
                  1e-12);
        }
    }
}

TEST_CASE("phase covariance of the network fidelity") {
    for (Equator eq : {Equator::XZ, Equator::XY}) {
        const Ket prep = prepare_state(pc_angles(eq));
        double lo = 1.0, hi = 0.0;
        for (int i = 0; i < 256; ++i) {
            const EquatorialState in(eq, 2.0 * kPi * i / 256.0);
            const double f = fidelity_pure(ket_from_equatorial(in),
                                           reduced_density(copy_circuit(ket_from_equatorial(in), prep), {1}));
            lo = std::min(lo, f);
            hi = std::max(hi, f);
        }
        CHECK(hi - lo < 1e-10);
    }
}

TEST_CASE("network matches the direct isometry on all three configurations") {
    for (NetworkConfig cfg : {NetworkConfig::PcXz, NetworkConfig::PcXy, NetworkConfig::Uqcm}) {
        const NetworkComparison cmp = network_vs_direct(cfg, 64);
        CHECK(cmp.max_copy_deviation < 1e-10);
        CHECK(cmp.max_leftover_deviation < 1e-10);
    }
    const NetworkComparison uq = network_vs_direct(NetworkConfig::Uqcm, 64);
    CHECK(uq.fidelity_mean == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("copy_circuit rejects wrong register sizes") {
    CHECK_THROWS_AS(copy_circuit(Ket::zero(2), Ket::zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(network_vs_direct(NetworkConfig::PcXz, 1), std::invalid_argument);
}
