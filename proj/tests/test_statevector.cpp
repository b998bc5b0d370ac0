#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "qsearch/statevector.hpp"

#include "dense_oracle.hpp"
#include "test_util.hpp"

using namespace qsearch;
using testutil::max_abs_diff;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Random single-qubit unitary from four angles.
Gate2x2 random_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    const double theta = angle(rng) / 4.0;
    const double alpha = angle(rng);
    const double beta = angle(rng);
    const double gamma = angle(rng);
    const Amplitude phase = std::polar(1.0, alpha);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return Gate2x2{{phase * std::polar(c, beta), phase * std::polar(s, gamma),
                    phase * -std::polar(s, -gamma), phase * std::polar(c, -beta)}};
}

oracle::Mat to_oracle(const Gate2x2& g) {
    return oracle::Mat{2, {g.m[0], g.m[1], g.m[2], g.m[3]}};
}

double chi_square_stat(const std::map<BasisIndex, std::size_t>& counts,
                       const std::vector<double>& probs, std::size_t shots) {
    double stat = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] == 0.0) continue;
        const double expected = probs[i] * static_cast<double>(shots);
        const auto it = counts.find(i);
        const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
        stat += (observed - expected) * (observed - expected) / expected;
    }
    return stat;
}

std::map<BasisIndex, std::size_t> tally(const std::vector<BasisIndex>& samples) {
    std::map<BasisIndex, std::size_t> counts;
    for (BasisIndex s : samples) ++counts[s];
    return counts;
}

// Upper-tail chi-square critical values at significance 0.001.
double chi_square_crit(int df) {
    switch (df) {
        case 2: return 13.8155;
        case 3: return 16.2662;
        case 15: return 37.6973;
        default: REQUIRE(false); return 0.0;
    }
}

}  // namespace

TEST_CASE("uniform_state amplitudes") {
    const StateVector one = uniform_state(1);
    CHECK(one.size() == 2);
    CHECK(std::abs(one[0] - Amplitude{kInvSqrt2, 0.0}) < 1e-15);
    CHECK(std::abs(one[1] - Amplitude{kInvSqrt2, 0.0}) < 1e-15);

    const StateVector two = uniform_state(2);
    CHECK(two.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(two[i].real() == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(two[i].imag() == 0.0);
    }
}

TEST_CASE("uniform_state(10) matches the dense H tensor-power oracle") {
    const StateVector state = uniform_state(10);
    REQUIRE(state.size() == 1024);
    for (const Amplitude& a : state.amplitudes()) {
        CHECK(std::abs(a - Amplitude{0.03125, 0.0}) < 1e-12);
    }

    oracle::Vec zero(1024, oracle::Cx{0.0, 0.0});
    zero[0] = oracle::Cx{1.0, 0.0};
    const oracle::Vec expected = oracle::matvec(oracle::hadamard_all(10), zero);
    CHECK(max_abs_diff(state.amplitudes(), expected) < 1e-10);
}

TEST_CASE("uniform_state rejects out-of-range qubit counts") {
    CHECK_THROWS_AS(uniform_state(0), std::invalid_argument);
    CHECK_THROWS_AS(uniform_state(kMaxQubits + 1), std::invalid_argument);
}

TEST_CASE("StateVector validates amplitude length") {
    CHECK_THROWS_AS(StateVector(2, std::vector<Amplitude>(3)), std::invalid_argument);
}

TEST_CASE("Hadamard on |0> gives the plus state") {
    const StateVector state =
        apply_single_qubit_gate(StateVector(1), 0, Gate2x2::hadamard());
    CHECK(std::abs(state[0] - Amplitude{kInvSqrt2, 0.0}) < 1e-15);
    CHECK(std::abs(state[1] - Amplitude{kInvSqrt2, 0.0}) < 1e-15);
}

TEST_CASE("uniform state is X-invariant") {
    const StateVector state =
        apply_single_qubit_gate(uniform_state(1), 0, Gate2x2::pauli_x());
    CHECK(std::abs(state[0] - Amplitude{kInvSqrt2, 0.0}) < 1e-15);
    CHECK(std::abs(state[1] - Amplitude{kInvSqrt2, 0.0}) < 1e-15);
}

TEST_CASE("H on both qubits of |00> equals uniform_state(2) and the dense oracle") {
    StateVector state(2);
    state = apply_single_qubit_gate(std::move(state), 1, Gate2x2::hadamard());
    state = apply_single_qubit_gate(std::move(state), 0, Gate2x2::hadamard());
    CHECK(max_abs_diff(state, uniform_state(2)) < 1e-12);

    oracle::Vec zero(4, oracle::Cx{0.0, 0.0});
    zero[0] = oracle::Cx{1.0, 0.0};
    oracle::Vec expected = oracle::matvec(
        oracle::single_qubit_gate_matrix(2, 1, oracle::hadamard()), zero);
    expected = oracle::matvec(oracle::single_qubit_gate_matrix(2, 0, oracle::hadamard()),
                              expected);
    CHECK(max_abs_diff(state.amplitudes(), expected) < 1e-10);
}

TEST_CASE("gate application rejects bad qubit index and non-unitary gates") {
    CHECK_THROWS_AS(apply_single_qubit_gate(uniform_state(2), 2, Gate2x2::hadamard()),
                    std::out_of_range);
    CHECK_THROWS_AS(apply_single_qubit_gate(uniform_state(2), -1, Gate2x2::hadamard()),
                    std::out_of_range);
    const Gate2x2 not_unitary{{1.0, 1.0, 1.0, 1.0}};
    CHECK_THROWS_AS(apply_single_qubit_gate(uniform_state(2), 0, not_unitary),
                    std::invalid_argument);
}

TEST_CASE("dense-matrix equivalence for random gates on up to 4 qubits") {
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const int qubit = static_cast<int>(rng() % n);
            const Gate2x2 gate = random_unitary(rng);
            REQUIRE(gate.is_unitary());

            // Random normalized input state.
            std::vector<Amplitude> amps(std::size_t{1} << n);
            std::uniform_real_distribution<double> coeff(-1.0, 1.0);
            double norm = 0.0;
            for (Amplitude& a : amps) {
                a = Amplitude{coeff(rng), coeff(rng)};
                norm += std::norm(a);
            }
            for (Amplitude& a : amps) a /= std::sqrt(norm);
            const StateVector input(n, amps);

            const StateVector output = apply_single_qubit_gate(input, qubit, gate);
            const oracle::Vec expected = oracle::matvec(
                oracle::single_qubit_gate_matrix(n, qubit, to_oracle(gate)), amps);
            CHECK(max_abs_diff(output.amplitudes(), expected) < 1e-10);
        }
    }
}

TEST_CASE("norm is preserved across random gate sequences") {
    std::mt19937_64 rng(7);
    StateVector state = uniform_state(5);
    for (int i = 0; i < 200; ++i) {
        state = apply_single_qubit_gate(std::move(state), static_cast<int>(rng() % 5),
                                        random_unitary(rng));
    }
    CHECK(std::abs(state.norm_squared() - 1.0) < 1e-10);
}

TEST_CASE("applying G then G-dagger restores the state") {
    std::mt19937_64 rng(11);
    const StateVector input = uniform_state(3);
    for (int rep = 0; rep < 30; ++rep) {
        const Gate2x2 gate = random_unitary(rng);
        const int qubit = static_cast<int>(rng() % 3);
        StateVector state = apply_single_qubit_gate(input, qubit, gate);
        state = apply_single_qubit_gate(std::move(state), qubit, gate.dagger());
        CHECK(max_abs_diff(state, input) < 1e-10);
    }
}

TEST_CASE("Hadamard twice is the identity on any qubit") {
    std::mt19937_64 rng(13);
    std::vector<Amplitude> amps(8);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    double norm = 0.0;
    for (Amplitude& a : amps) {
        a = Amplitude{coeff(rng), coeff(rng)};
        norm += std::norm(a);
    }
    for (Amplitude& a : amps) a /= std::sqrt(norm);
    const StateVector input(3, amps);
    for (int q = 0; q < 3; ++q) {
        StateVector state = apply_single_qubit_gate(input, q, Gate2x2::hadamard());
        state = apply_single_qubit_gate(std::move(state), q, Gate2x2::hadamard());
        CHECK(max_abs_diff(state, input) < 1e-10);
    }
}

TEST_CASE("born_probabilities on basis and uniform states") {
    const StateVector basis(1, {Amplitude{1.0, 0.0}, Amplitude{0.0, 0.0}});
    const std::vector<double> basis_probs = born_probabilities(basis);
    CHECK(basis_probs[0] == doctest::Approx(1.0));
    CHECK(basis_probs[1] == doctest::Approx(0.0));

    const std::vector<double> uniform_probs = born_probabilities(uniform_state(2));
    double total = 0.0;
    for (double p : uniform_probs) {
        CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
        total += p;
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("born_probabilities after one dense-oracle Grover step on N=4") {
    // One phase-flip + diffusion round on N=4 with |2> marked concentrates
    // everything on index 2; the state comes from the dense operator product.
    const oracle::Vec amplified = oracle::grover_dense(2, {2}, 1);
    const std::vector<double> probs =
        born_probabilities(StateVector(2, amplified));
    CHECK(std::abs(probs[0]) < 1e-10);
    CHECK(std::abs(probs[1]) < 1e-10);
    CHECK(std::abs(probs[2] - 1.0) < 1e-10);
    CHECK(std::abs(probs[3]) < 1e-10);
}

TEST_CASE("born_probabilities rejects unnormalized input") {
    const StateVector bad(1, {Amplitude{1.0, 0.0}, Amplitude{0.5, 0.0}});
    CHECK_THROWS_AS(born_probabilities(bad), NormalizationError);
}

TEST_CASE("sampling a basis state always yields its index") {
    std::vector<Amplitude> amps(4, Amplitude{0.0, 0.0});
    amps[3] = Amplitude{1.0, 0.0};
    const StateVector state(2, amps);
    for (std::uint64_t seed : {0ULL, 7ULL, 1234567ULL}) {
        const auto samples = sample_measurements(state, 100, seed);
        REQUIRE(samples.size() == 100);
        CHECK(std::all_of(samples.begin(), samples.end(),
                          [](BasisIndex s) { return s == 3; }));
    }
}

TEST_CASE("uniform sampling counts stay within the 4-sigma binomial band") {
    // sigma = sqrt(40000 * 0.25 * 0.75) ~= 86.6, so the band is +-346.4.
    const auto samples = sample_measurements(uniform_state(2), 40000, 7);
    const auto counts = tally(samples);
    for (BasisIndex i = 0; i < 4; ++i) {
        const double count = static_cast<double>(counts.at(i));
        CHECK(std::abs(count - 10000.0) <= 346.4);
    }
}

TEST_CASE("sampling is deterministic under a fixed seed") {
    const StateVector state = uniform_state(3);
    const auto first = sample_measurements(state, 512, 42);
    const auto second = sample_measurements(state, 512, 42);
    CHECK(first == second);
    const auto other_seed = sample_measurements(state, 512, 43);
    CHECK(first != other_seed);
}

TEST_CASE("sampling rejects zero shots") {
    CHECK_THROWS_AS(sample_measurements(uniform_state(1), 0, 1), std::invalid_argument);
}

TEST_CASE("sampled frequencies pass a chi-square goodness-of-fit test") {
    // Significance 0.001; df = (outcomes with nonzero probability) - 1.
    const std::size_t shots = 40000;

    const StateVector uniform2 = uniform_state(2);
    auto counts = tally(sample_measurements(uniform2, shots, 2024));
    CHECK(chi_square_stat(counts, born_probabilities(uniform2), shots) <
          chi_square_crit(3));

    const StateVector uniform4 = uniform_state(4);
    counts = tally(sample_measurements(uniform4, shots, 2025));
    CHECK(chi_square_stat(counts, born_probabilities(uniform4), shots) <
          chi_square_crit(15));

    const StateVector biased(
        2, {Amplitude{std::sqrt(0.5), 0.0}, Amplitude{std::sqrt(0.3), 0.0},
            Amplitude{std::sqrt(0.2), 0.0}, Amplitude{0.0, 0.0}});
    counts = tally(sample_measurements(biased, shots, 2026));
    CHECK(chi_square_stat(counts, born_probabilities(biased), shots) <
          chi_square_crit(2));
    CHECK(counts.find(3) == counts.end());  // zero-probability outcome never drawn
}

TEST_CASE("derive_seed yields distinct streams") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(1, 5) == derive_seed(1, 5));
}
