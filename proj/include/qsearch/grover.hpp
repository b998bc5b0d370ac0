#pragma once

#include <cstdint>
#include <vector>

#include "qsearch/statevector.hpp"

namespace qsearch {

/// Basis indices singled out by the search query. Indices are kept sorted
/// and unique; 1 <= count < 2^n_qubits.
class MarkedSet {
public:
    MarkedSet(int n_qubits, std::vector<BasisIndex> indices);

    int n_qubits() const { return n_qubits_; }
    const std::vector<BasisIndex>& indices() const { return indices_; }
    std::size_t count() const { return indices_.size(); }
    bool contains(BasisIndex i) const;

private:
    int n_qubits_;
    std::vector<BasisIndex> indices_;
};

/// Number of oracle+diffusion rounds to run. Auto mode picks
/// floor((pi/4) * sqrt(N/M)); fixed mode uses the given k.
struct IterationSchedule {
    enum class Mode { Auto, Fixed };

    Mode mode = Mode::Auto;
    int k = 0;

    static IterationSchedule automatic() { return {Mode::Auto, 0}; }
    static IterationSchedule fixed(int k);
};

struct GroverResult {
    StateVector final_state;
    int iterations_used = 0;
    int oracle_calls = 0;           // one oracle application per iteration
    double predicted_success = 0.0; // sin^2((2k+1) * asin(sqrt(M/N)))
    std::vector<BasisIndex> samples;
};

/// Negates the amplitude of every marked index: I - 2 * sum_i |tau_i><tau_i|.
StateVector phase_flip(StateVector state, const MarkedSet& marked);

/// Inversion about the mean amplitude: 2|Psi><Psi| - I.
StateVector diffusion(StateVector state);

/// floor((pi/4) * sqrt(N/M)). N must be a power of two, 1 <= M < N.
int optimal_iterations(std::uint64_t n_states, std::uint64_t n_marked);

/// Closed-form success probability after k iterations,
/// sin^2((2k+1) * asin(sqrt(M/N))).
double success_probability(std::uint64_t n_states, std::uint64_t n_marked, int k);

/// Probability mass on the marked indices.
double marked_mass(const StateVector& state, const MarkedSet& marked);

/// Full run: uniform initialization, k rounds of phase flip + diffusion,
/// then Born-rule sampling (skipped when shots == 0).
///
/// Auto mode refuses M >= N/2: amplification degrades or inverts there and a
/// classical scan is cheaper. Use a fixed schedule to force such runs.
GroverResult run_grover(int n_qubits, const MarkedSet& marked, IterationSchedule schedule,
                        int shots, std::uint64_t seed);

}  // namespace qsearch
