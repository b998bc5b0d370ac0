#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qsearch/records.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

/// Photon mode A excites only atom A1 (the female branch), mode B only
/// atom A2 (the male branch).
enum class PhotonMode { ModeA, ModeB };

enum class ExcitedAtom { A1, A2 };

/// Energy-register patterns, the top two qubits of the 4-qubit composite.
///
/// The register superposes two branches (atom A1 / atom A2), each a
/// two-level ground/excited system, so it needs four orthogonal patterns:
/// qubit 0 is the excitation bit (0 = ground, 1 = excited) and qubit 1 the
/// branch bit (0 = A1, 1 = A2). Values below are the two-bit pattern
/// (excitation << 1) | branch.
inline constexpr int kEnergyG1 = 0;  // A1 branch, ground
inline constexpr int kEnergyG2 = 1;  // A2 branch, ground
inline constexpr int kEnergyE1 = 2;  // A1 branch, excited
inline constexpr int kEnergyE2 = 3;  // A2 branch, excited

/// Thrown when a photon mode targets a branch that is already excited.
struct DoubleAbsorptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when no measurement shot survives gender post-selection.
struct PostSelectionExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 4-qubit register ordered (energy pair, spin pair): basis index =
/// energy_pattern * 4 + spin_index. The spin pair carries the degree
/// encoding of records.hpp.
struct CompositeState {
    StateVector state;

    /// Probability mass on the A1 and A2 branches; sums to 1.
    std::array<double, 2> branch_weights() const;

    /// Marginal spin distribution, traced over the energy register.
    std::array<double, 4> spin_marginal() const;
};

/// Product state sqrt(w_g) * sqrt(p_a) over (branch, spin) pairs, both
/// branches in their ground pattern.
CompositeState build_composite(std::array<double, 2> gender_weights = {0.5, 0.5},
                               std::array<double, 4> spin_distribution = {0.25, 0.25, 0.25,
                                                                          0.25});

/// The raw ground<->excited amplitude swap on one branch, no precondition
/// check. Squares to the identity.
StateVector excitation_flip(StateVector state, PhotonMode mode);

/// Photon absorption: flips the targeted branch to excited, leaves the other
/// branch untouched. Throws DoubleAbsorptionError when the targeted branch
/// already holds excited amplitude.
CompositeState apply_photon_mode(CompositeState composite, PhotonMode mode);

/// One 2-qubit Grover iteration (phase flip on the encoded degree, then
/// inversion about the mean) on the spin subregister, applied identically in
/// every energy branch. Warns via `warn` when the spin marginal is not
/// uniform, since a single iteration then no longer reaches certainty.
CompositeState spin_grover(CompositeState composite, Degree target,
                           std::ostream* warn = nullptr);

struct JointOutcome {
    std::optional<ExcitedAtom> excited_atom;  // empty when no branch is excited
    int spin_index = 0;
    Degree degree = Degree::HighSchool;
    std::optional<Gender> gender;  // decoded from excited_atom
};

/// Born-rule sampling of the full 4-qubit register, decoded per outcome.
std::vector<JointOutcome> joint_measure(const CompositeState& composite, int shots,
                                        std::uint64_t seed);

struct SearchOutcome {
    PhotonMode mode = PhotonMode::ModeA;
    Gender bucket_gender = Gender::Female;
    Degree bucket_degree = Degree::HighSchool;
    std::vector<std::string> names;
    int shots_used = 0;
    int post_selected = 0;
    double post_selection_rate = 0.0;
    int oracle_calls = 0;
    int photon_operations = 0;
    std::array<int, 4> post_selected_degree_counts{};
};

/// End-to-end two-dimensional query: default composite, photon mode for the
/// queried gender, one spin-Grover iteration for the queried degree, joint
/// measurement, post-selection on the gender branch, bucket lookup.
SearchOutcome search_two_dimensional(const RecordIndex& db, Gender gender, Degree degree,
                                     int shots, std::uint64_t seed);

PhotonMode photon_mode_for(Gender g);
ExcitedAtom atom_for_mode(PhotonMode mode);
Gender gender_for_atom(ExcitedAtom atom);

JointOutcome decode_outcome(BasisIndex index);

}  // namespace qsearch
