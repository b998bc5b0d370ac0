#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsearch {

using Amplitude = std::complex<double>;
using BasisIndex = std::uint64_t;

/// Largest register the simulator accepts; 2^24 complex doubles keep a full
/// statevector around 256 MiB.
inline constexpr int kMaxQubits = 24;

/// Tolerance for unitarity and norm-preservation checks.
inline constexpr double kUnitarityTol = 1e-10;

/// Maximum norm deviation accepted when interpreting a state as a
/// probability distribution.
inline constexpr double kNormTol = 1e-6;

/// Thrown when an operation requires a normalized state and the input is not.
struct NormalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 2x2 complex matrix, row-major.
struct Gate2x2 {
    std::array<Amplitude, 4> m{};

    bool is_unitary(double tol = kUnitarityTol) const;
    Gate2x2 dagger() const;

    static Gate2x2 identity();
    static Gate2x2 hadamard();
    static Gate2x2 pauli_x();
};

/// Complex amplitudes over the 2^n computational basis states.
///
/// Basis indices run 0..2^n-1 with qubit 0 as the most significant bit:
/// for n = 2 the order is |00>, |01>, |10>, |11> and qubit 0 is the left bit.
class StateVector {
public:
    /// |0...0> on n_qubits qubits.
    explicit StateVector(int n_qubits);

    /// Wraps explicit amplitudes; length must be exactly 2^n_qubits.
    StateVector(int n_qubits, std::vector<Amplitude> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return amps_.size(); }

    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    Amplitude& operator[](std::size_t i) { return amps_[i]; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;

private:
    int n_qubits_;
    std::vector<Amplitude> amps_;
};

/// Uniform superposition (1/sqrt(N)) * sum_a |a>, the H^(x)n image of |0...0>.
StateVector uniform_state(int n_qubits);

/// Applies a 2x2 unitary to one qubit via strided in-place pair updates.
/// The dense-matrix route exists only as a test oracle.
StateVector apply_single_qubit_gate(StateVector state, int qubit, const Gate2x2& gate);

/// Entry i is |amplitude_i|^2. Throws NormalizationError when the input norm
/// deviates from 1 by more than kNormTol.
std::vector<double> born_probabilities(const StateVector& state);

/// Draws `shots` basis indices independently from born_probabilities(state).
///
/// Sampling is fully deterministic: a std::mt19937_64 seeded with `seed`
/// (its output sequence is pinned by the standard) feeds 53-bit uniforms
/// into an inverse-CDF walk. std::discrete_distribution is avoided because
/// its draw pattern is implementation-defined.
std::vector<BasisIndex> sample_measurements(const StateVector& state, int shots,
                                            std::uint64_t seed);

/// splitmix64 step; derives independent per-trial seeds from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace qsearch
