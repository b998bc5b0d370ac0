#include "qsearch/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qsearch {

namespace {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_counts(std::uint64_t n_states, std::uint64_t n_marked) {
    if (!is_power_of_two(n_states) || n_states < 2) {
        throw std::invalid_argument("N must be a power of two >= 2, got " +
                                    std::to_string(n_states));
    }
    if (n_marked < 1 || n_marked >= n_states) {
        throw std::invalid_argument("marked count must satisfy 1 <= M < N, got M = " +
                                    std::to_string(n_marked) + ", N = " +
                                    std::to_string(n_states));
    }
}

}  // namespace

MarkedSet::MarkedSet(int n_qubits, std::vector<BasisIndex> indices)
    : n_qubits_(n_qubits), indices_(std::move(indices)) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("MarkedSet qubit count out of range");
    }
    if (indices_.empty()) {
        throw std::invalid_argument("MarkedSet needs at least one index");
    }
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw std::invalid_argument("MarkedSet indices must be unique");
    }
    const std::uint64_t n = std::uint64_t{1} << n_qubits;
    if (indices_.back() >= n) {
        throw std::invalid_argument("marked index " + std::to_string(indices_.back()) +
                                    " out of range for " + std::to_string(n) + " states");
    }
    if (indices_.size() >= n) {
        throw std::invalid_argument("MarkedSet cannot cover the whole basis");
    }
}

bool MarkedSet::contains(BasisIndex i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

IterationSchedule IterationSchedule::fixed(int k) {
    if (k < 0) throw std::invalid_argument("iteration count must be >= 0");
    return {Mode::Fixed, k};
}

StateVector phase_flip(StateVector state, const MarkedSet& marked) {
    if (marked.n_qubits() != state.n_qubits()) {
        throw std::invalid_argument("MarkedSet is over " + std::to_string(marked.n_qubits()) +
                                    " qubits but the state has " +
                                    std::to_string(state.n_qubits()));
    }
    for (BasisIndex i : marked.indices()) state[i] = -state[i];
    return state;
}

StateVector diffusion(StateVector state) {
    Amplitude mean{0.0, 0.0};
    for (const Amplitude& a : state.amplitudes()) mean += a;
    mean /= static_cast<double>(state.size());
    const Amplitude twice_mean = 2.0 * mean;
    for (std::size_t i = 0; i < state.size(); ++i) state[i] = twice_mean - state[i];
    return state;
}

int optimal_iterations(std::uint64_t n_states, std::uint64_t n_marked) {
    check_counts(n_states, n_marked);
    const double ratio = static_cast<double>(n_states) / static_cast<double>(n_marked);
    return static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

double success_probability(std::uint64_t n_states, std::uint64_t n_marked, int k) {
    check_counts(n_states, n_marked);
    if (k < 0) throw std::invalid_argument("iteration count must be >= 0");
    const double theta =
        std::asin(std::sqrt(static_cast<double>(n_marked) / static_cast<double>(n_states)));
    const double s = std::sin((2.0 * k + 1.0) * theta);
    return s * s;
}

double marked_mass(const StateVector& state, const MarkedSet& marked) {
    double mass = 0.0;
    for (BasisIndex i : marked.indices()) mass += std::norm(state[i]);
    return mass;
}

GroverResult run_grover(int n_qubits, const MarkedSet& marked, IterationSchedule schedule,
                        int shots, std::uint64_t seed) {
    if (marked.n_qubits() != n_qubits) {
        throw std::invalid_argument("MarkedSet qubit count does not match the register");
    }
    if (shots < 0) throw std::invalid_argument("shots must be >= 0");
    const std::uint64_t n_states = std::uint64_t{1} << n_qubits;
    const std::uint64_t n_marked = marked.count();

    int k = 0;
    if (schedule.mode == IterationSchedule::Mode::Auto) {
        if (2 * n_marked >= n_states) {
            throw std::invalid_argument(
                "auto schedule refuses M >= N/2 (amplification degrades there); "
                "use a classical scan or a fixed iteration count");
        }
        k = optimal_iterations(n_states, n_marked);
    } else {
        k = schedule.k;
    }

    StateVector psi = uniform_state(n_qubits);
    for (int i = 0; i < k; ++i) {
        psi = diffusion(phase_flip(std::move(psi), marked));
    }

    GroverResult result{std::move(psi), k, k,
                        success_probability(n_states, n_marked, k), {}};
    if (shots > 0) {
        result.samples = sample_measurements(result.final_state, shots, seed);
    }
    return result;
}

}  // namespace qsearch
