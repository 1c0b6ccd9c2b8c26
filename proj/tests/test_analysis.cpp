#include <array>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "equiclone/analysis.hpp"
#include "equiclone/cloners.hpp"
#include "helpers.hpp"

using namespace equiclone;
using equiclone::test::max_entry_deviation;

namespace {
const double kPi = std::numbers::pi;
const double kLambdaStar = 3.0 - 2.0 * std::sqrt(2.0);
}  // namespace

TEST_CASE("eta reference values") {
    const std::array<double, 2> half{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    CHECK(eta_1M(half, 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    const std::array<double, 3> mid{0.0, 1.0, 0.0};
    CHECK(eta_1M(mid, 3) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    const std::array<double, 3> ends{1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0)};
    CHECK(eta_1M(ends, 3) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));

    CHECK_THROWS_AS(eta_1M(half, 3), std::invalid_argument);
    CHECK_THROWS_AS(eta_1M(std::array<double, 2>{1.0, 1.0}, 2), std::invalid_argument);
}

TEST_CASE("closed-form 1->M fidelities") {
    CHECK(fidelity_closed_1toM(2) == doctest::Approx(0.8535533905932738).epsilon(1e-12));
    CHECK(fidelity_closed_1toM(3) == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(fidelity_closed_1toM(5) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK_THROWS_AS(fidelity_closed_1toM(1), std::invalid_argument);
}

TEST_CASE("closed-form N->M fidelities") {
    CHECK(fidelity_closed_NtoM(1, 3) == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(fidelity_closed_NtoM(2, 4) ==
          doctest::Approx(0.5 + std::sqrt(3.0) / 4.0).epsilon(1e-14));
    CHECK(fidelity_closed_NtoM(2, 3) ==
          doctest::Approx(0.5 + (2.0 * std::sqrt(2.0) + std::sqrt(6.0)) / 12.0).epsilon(1e-14));
    for (int m = 2; m <= 12; ++m)
        CHECK(fidelity_closed_NtoM(1, m) ==
              doctest::Approx(fidelity_closed_1toM(m)).epsilon(1e-14));
    CHECK_THROWS_AS(fidelity_closed_NtoM(3, 3), std::invalid_argument);
}

TEST_CASE("asymptotic limits") {
    CHECK(fidelity_asymptotic(1) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(fidelity_asymptotic(2) ==
          doctest::Approx(0.5 + std::sqrt(2.0) / 4.0).epsilon(1e-14));

    // Closed forms decrease with L and stay above the limit.
    for (int n = 1; n <= 4; ++n) {
        const double limit = fidelity_asymptotic(n);
        double prev = fidelity_closed_NtoM(n, n + 2);
        for (int l = 2; l <= 200; ++l) {
            const double f = fidelity_closed_NtoM(n, n + 2 * l);
            CHECK(f < prev);
            CHECK(f > limit);
            prev = f;
        }
    }
}

TEST_CASE("simulated fidelities match the closed forms") {
    const FidelityReport r12 = simulate_fidelity(1, 2, 64);
    CHECK(r12.simulated == doctest::Approx(0.8535533906).epsilon(1e-9));
    CHECK(r12.abs_error < 1e-9);
    CHECK(r12.grid_spread < 1e-10);

    const FidelityReport r16 = simulate_fidelity(1, 6, 64);
    CHECK(r16.simulated == doctest::Approx(0.5 + std::sqrt(48.0) / 24.0).epsilon(1e-9));

    const FidelityReport r35 = simulate_fidelity(3, 5, 64);
    CHECK(r35.abs_error < 1e-9);

    CHECK_THROWS_AS(simulate_fidelity(1, 13, 16), std::invalid_argument);
}

TEST_CASE("simulation agrees with the closed forms for every N < M <= 10") {
    for (int n = 1; n < 10; ++n)
        for (int m = n + 1; m <= 10; ++m) {
            const FidelityReport r = simulate_fidelity(n, m, 16);
            CHECK(r.abs_error < 1e-9);
            CHECK(r.grid_spread < 1e-10);
        }
}

TEST_CASE("closed partial-transpose spectrum") {
    const PTSpectrum opt = pt_spectrum_closed(kLambdaStar);
    CHECK(std::abs(opt.eigenvalues[0]) < 1e-12);
    CHECK(std::abs(opt.eigenvalues[1]) < 1e-12);
    CHECK(opt.eigenvalues[2] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(opt.eigenvalues[3] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(opt.is_ppt);

    const PTSpectrum uq = pt_spectrum_closed(0.0);
    CHECK(uq.eigenvalues[0] ==
          doctest::Approx((1.0 - std::sqrt(5.0) / 2.0) / 3.0).epsilon(1e-12));
    CHECK_FALSE(uq.is_ppt);

    for (double lambda : {-0.8, -0.2, 0.1, kLambdaStar, 0.5, 0.9}) {
        const PTSpectrum s = pt_spectrum_closed(lambda);
        double sum = 0.0;
        for (double e : s.eigenvalues) sum += e;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(pt_spectrum_closed(1.0), std::invalid_argument);
}

TEST_CASE("numeric spectrum agrees with the closed form and the printed matrix") {
    const PTSpectrum opt = pt_spectrum_numeric(kLambdaStar, 0.3);
    CHECK(std::abs(opt.eigenvalues[0]) < 1e-9);
    CHECK(std::abs(opt.eigenvalues[1]) < 1e-9);
    CHECK(opt.eigenvalues[2] == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(opt.eigenvalues[3] == doctest::Approx(0.75).epsilon(1e-9));

    for (double lambda : {-0.6, 0.0, kLambdaStar, 1.0 / 3.0, 0.7}) {
        const PTSpectrum closed = pt_spectrum_closed(lambda);
        for (int i = 0; i < 32; ++i) {
            const double theta = 2.0 * kPi * i / 32.0;
            const PTSpectrum numeric = pt_spectrum_numeric(lambda, theta);
            for (int e = 0; e < 4; ++e)
                CHECK(numeric.eigenvalues[e] ==
                      doctest::Approx(closed.eigenvalues[e]).epsilon(1e-9));

            // The termwise matrix must equal the simulated one entrywise.
            const Ket out = clone_1to2_xz(lambda, {Equator::XZ, theta});
            const DensityMatrix pt =
                partial_transpose(reduced_density(out, {0, 1}), Subsystem::Second);
            CHECK(max_entry_deviation(pt, pt_matrix_printed(lambda, theta)) < 1e-12);
        }
    }

    // Triplicator-point copies stay entangled.
    CHECK(pt_spectrum_numeric(1.0 / 3.0, 0.5).eigenvalues[0] < -1e-3);
    CHECK_FALSE(pt_spectrum_numeric(1.0 / 3.0, 0.5).is_ppt);
}

TEST_CASE("separability sweep isolates the optimal point") {
    const int steps = 10000;
    const std::vector<PTSpectrum> sweep = separability_sweep(0.0, 0.9999, steps);
    const double spacing = 0.9999 / (steps - 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        if (sweep[i].is_ppt) CHECK(std::abs(sweep[i].lambda - kLambdaStar) <= spacing);
        if (sweep[i].eigenvalues.front() > sweep[best].eigenvalues.front()) best = i;
    }
    CHECK(std::abs(sweep[best].lambda - kLambdaStar) <= spacing);

    // No candidate anywhere on the negative side; the minimum eigenvalue
    // only approaches zero at the excluded endpoint lambda = -1.
    for (const PTSpectrum& s : separability_sweep(-0.9999, -1e-4, 2000)) {
        CHECK_FALSE(s.is_ppt);
        CHECK(s.eigenvalues.front() < kPptThreshold);
    }

    CHECK(pt_spectrum_closed(kLambdaStar).is_ppt);
    CHECK_THROWS_AS(separability_sweep(0.5, 0.5, 100), std::invalid_argument);
}

TEST_CASE("reduced-state closed forms hold across the family") {
    CHECK(reduced_forms_check(1.0 / 3.0, {Equator::XZ, 0.8}) < 1e-10);
    CHECK(reduced_forms_check(kLambdaStar, {Equator::XZ, 2.1}) < 1e-10);
    CHECK(reduced_forms_check(0.0, {Equator::XY, 1.4}) < 1e-10);
    for (double lambda : {-0.8, -0.3, 0.2, 0.6}) {
        for (int i = 0; i < 8; ++i) {
            const double angle = 2.0 * kPi * i / 8.0;
            CHECK(reduced_forms_check(lambda, {Equator::XZ, angle}) < 1e-10);
            CHECK(reduced_forms_check(lambda, {Equator::XY, angle}) < 1e-10);
        }
    }

    // Optimal-point shrink factor is 1/sqrt(2); lambda = 0 gives 2/3.
    const double denom = 3.0 - 2.0 * kLambdaStar + 3.0 * kLambdaStar * kLambdaStar;
    CHECK(2.0 * (1.0 - kLambdaStar * kLambdaStar) / denom ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}
