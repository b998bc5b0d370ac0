#include "qsearch/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qsearch {

namespace {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
    }
}

// Top 53 bits of the engine output, mapped to [0, 1).
double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

bool Gate2x2::is_unitary(double tol) const {
    const Gate2x2 d = dagger();
    // G^dagger * G entry by entry against I.
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            Amplitude e = d.m[2 * r] * m[c] + d.m[2 * r + 1] * m[2 + c];
            if (r == c) e -= 1.0;
            if (std::abs(e) > tol) return false;
        }
    }
    return true;
}

Gate2x2 Gate2x2::dagger() const {
    return Gate2x2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Gate2x2 Gate2x2::identity() { return Gate2x2{{1.0, 0.0, 0.0, 1.0}}; }

Gate2x2 Gate2x2::hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return Gate2x2{{s, s, s, -s}};
}

Gate2x2 Gate2x2::pauli_x() { return Gate2x2{{0.0, 1.0, 1.0, 0.0}}; }

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    amps_[0] = Amplitude{1.0, 0.0};
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(n_qubits);
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("amplitude vector length " + std::to_string(amps_.size()) +
                                    " does not match 2^" + std::to_string(n_qubits));
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Amplitude& a : amps_) total += std::norm(a);
    return total;
}

StateVector uniform_state(int n_qubits) {
    check_qubit_count(n_qubits);
    const std::size_t n = std::size_t{1} << n_qubits;
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    return StateVector(n_qubits, std::vector<Amplitude>(n, Amplitude{amp, 0.0}));
}

StateVector apply_single_qubit_gate(StateVector state, int qubit, const Gate2x2& gate) {
    if (qubit < 0 || qubit >= state.n_qubits()) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(state.n_qubits()) +
                                " qubits");
    }
    if (!gate.is_unitary()) {
        throw std::invalid_argument("gate is not unitary within tolerance");
    }
    // Qubit 0 is the most significant bit of the basis index.
    const std::size_t bit = std::size_t{1} << (state.n_qubits() - 1 - qubit);
    const std::size_t n = state.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i & bit) continue;
        const Amplitude a = state[i];
        const Amplitude b = state[i | bit];
        state[i] = gate.m[0] * a + gate.m[1] * b;
        state[i | bit] = gate.m[2] * a + gate.m[3] * b;
    }
    return state;
}

std::vector<double> born_probabilities(const StateVector& state) {
    const double norm = state.norm_squared();
    if (std::abs(norm - 1.0) > kNormTol) {
        throw NormalizationError("state norm^2 = " + std::to_string(norm) +
                                 " deviates from 1 beyond tolerance");
    }
    std::vector<double> probs(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) probs[i] = std::norm(state[i]);
    return probs;
}

std::vector<BasisIndex> sample_measurements(const StateVector& state, int shots,
                                            std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1, got " + std::to_string(shots));
    }
    const std::vector<double> probs = born_probabilities(state);
    std::vector<double> cumulative(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cumulative[i] = acc;
    }

    std::mt19937_64 rng(seed);
    std::vector<BasisIndex> samples;
    samples.reserve(static_cast<std::size_t>(shots));
    for (int s = 0; s < shots; ++s) {
        const double u = uniform53(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = (it == cumulative.end())
                              ? probs.size() - 1
                              : static_cast<std::size_t>(it - cumulative.begin());
        // Rounding in the cumulative tail must not surface a zero-probability outcome.
        while (idx > 0 && probs[idx] == 0.0) --idx;
        samples.push_back(idx);
    }
    return samples;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace qsearch
