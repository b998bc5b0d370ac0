#include "qsearch/composite.hpp"

#include <algorithm>
#include <cmath>

namespace qsearch {

namespace {

constexpr std::size_t kCompositeQubits = 4;
constexpr double kBranchMassTol = 1e-9;

void check_distribution(const double* weights, std::size_t n, const char* what) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (weights[i] < 0.0 || !std::isfinite(weights[i])) {
            throw std::invalid_argument(std::string(what) + " weights must be nonnegative");
        }
        sum += weights[i];
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument(std::string(what) + " weights must sum to 1, got " +
                                    std::to_string(sum));
    }
}

std::size_t slot(int energy_pattern, int spin) {
    return static_cast<std::size_t>(energy_pattern * 4 + spin);
}

double block_mass(const StateVector& sv, int energy_pattern) {
    double mass = 0.0;
    for (int s = 0; s < 4; ++s) mass += std::norm(sv[slot(energy_pattern, s)]);
    return mass;
}

}  // namespace

std::array<double, 2> CompositeState::branch_weights() const {
    return {block_mass(state, kEnergyG1) + block_mass(state, kEnergyE1),
            block_mass(state, kEnergyG2) + block_mass(state, kEnergyE2)};
}

std::array<double, 4> CompositeState::spin_marginal() const {
    std::array<double, 4> marginal{};
    for (int e = 0; e < 4; ++e) {
        for (int s = 0; s < 4; ++s) marginal[static_cast<std::size_t>(s)] += std::norm(state[slot(e, s)]);
    }
    return marginal;
}

CompositeState build_composite(std::array<double, 2> gender_weights,
                               std::array<double, 4> spin_distribution) {
    check_distribution(gender_weights.data(), 2, "gender");
    check_distribution(spin_distribution.data(), 4, "spin");

    std::vector<Amplitude> amps(16, Amplitude{0.0, 0.0});
    for (int s = 0; s < 4; ++s) {
        const double spin_amp = std::sqrt(spin_distribution[static_cast<std::size_t>(s)]);
        amps[slot(kEnergyG1, s)] = std::sqrt(gender_weights[0]) * spin_amp;
        amps[slot(kEnergyG2, s)] = std::sqrt(gender_weights[1]) * spin_amp;
    }
    return CompositeState{StateVector(kCompositeQubits, std::move(amps))};
}

StateVector excitation_flip(StateVector state, PhotonMode mode) {
    if (state.n_qubits() != static_cast<int>(kCompositeQubits)) {
        throw std::invalid_argument("composite operations expect a 4-qubit state");
    }
    const int ground = mode == PhotonMode::ModeA ? kEnergyG1 : kEnergyG2;
    const int excited = mode == PhotonMode::ModeA ? kEnergyE1 : kEnergyE2;
    for (int s = 0; s < 4; ++s) {
        std::swap(state[slot(ground, s)], state[slot(excited, s)]);
    }
    return state;
}

CompositeState apply_photon_mode(CompositeState composite, PhotonMode mode) {
    const int excited = mode == PhotonMode::ModeA ? kEnergyE1 : kEnergyE2;
    if (block_mass(composite.state, excited) > kBranchMassTol) {
        throw DoubleAbsorptionError(
            mode == PhotonMode::ModeA
                ? "atom A1 already excited; a second mode-A photon is not sustained"
                : "atom A2 already excited; a second mode-B photon is not sustained");
    }
    composite.state = excitation_flip(std::move(composite.state), mode);
    return composite;
}

CompositeState spin_grover(CompositeState composite, Degree target, std::ostream* warn) {
    if (warn != nullptr) {
        const std::array<double, 4> marginal = composite.spin_marginal();
        for (double p : marginal) {
            if (std::abs(p - 0.25) > 1e-6) {
                *warn << "spin_grover: spin marginal is not uniform; one iteration "
                         "will not reach certainty\n";
                break;
            }
        }
    }

    StateVector& sv = composite.state;
    const int target_spin = spin_index_of(target);

    // Phase flip on the encoded spin index in every energy branch.
    for (int e = 0; e < 4; ++e) {
        sv[slot(e, target_spin)] = -sv[slot(e, target_spin)];
    }
    // Inversion about the mean within each energy block: the diffusion
    // operator acts on the spin factor only.
    for (int e = 0; e < 4; ++e) {
        Amplitude mean{0.0, 0.0};
        for (int s = 0; s < 4; ++s) mean += sv[slot(e, s)];
        mean /= 4.0;
        const Amplitude twice_mean = 2.0 * mean;
        for (int s = 0; s < 4; ++s) {
            sv[slot(e, s)] = twice_mean - sv[slot(e, s)];
        }
    }
    return composite;
}

JointOutcome decode_outcome(BasisIndex index) {
    const int energy = static_cast<int>(index >> 2) & 3;
    const int spin = static_cast<int>(index) & 3;
    JointOutcome outcome;
    outcome.spin_index = spin;
    outcome.degree = degree_of_spin(spin);
    const bool excited = (energy & 2) != 0;
    if (excited) {
        outcome.excited_atom = (energy & 1) == 0 ? ExcitedAtom::A1 : ExcitedAtom::A2;
        outcome.gender = gender_for_atom(*outcome.excited_atom);
    }
    return outcome;
}

std::vector<JointOutcome> joint_measure(const CompositeState& composite, int shots,
                                        std::uint64_t seed) {
    const std::vector<BasisIndex> samples = sample_measurements(composite.state, shots, seed);
    std::vector<JointOutcome> outcomes;
    outcomes.reserve(samples.size());
    for (BasisIndex s : samples) outcomes.push_back(decode_outcome(s));
    return outcomes;
}

SearchOutcome search_two_dimensional(const RecordIndex& db, Gender gender, Degree degree,
                                     int shots, std::uint64_t seed) {
    if (db.total() == 0) throw std::invalid_argument("database is empty");
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");

    const PhotonMode mode = photon_mode_for(gender);
    CompositeState composite = build_composite();
    composite = apply_photon_mode(std::move(composite), mode);
    composite = spin_grover(std::move(composite), degree);
    const std::vector<JointOutcome> outcomes = joint_measure(composite, shots, seed);

    const ExcitedAtom wanted = atom_for_mode(mode);
    std::array<int, 4> degree_counts{};
    int post_selected = 0;
    for (const JointOutcome& o : outcomes) {
        if (o.excited_atom == wanted) {
            ++post_selected;
            ++degree_counts[static_cast<std::size_t>(o.spin_index)];
        }
    }
    if (post_selected == 0) {
        throw PostSelectionExhaustedError(
            "no shot matched the queried gender branch after " + std::to_string(shots) +
            " shots; increase the shot budget");
    }

    const int modal_spin = static_cast<int>(
        std::max_element(degree_counts.begin(), degree_counts.end()) - degree_counts.begin());

    SearchOutcome result;
    result.mode = mode;
    result.bucket_gender = gender;
    result.bucket_degree = degree_of_spin(modal_spin);
    result.names = db.bucket(result.bucket_gender, result.bucket_degree);
    result.shots_used = shots;
    result.post_selected = post_selected;
    result.post_selection_rate = static_cast<double>(post_selected) / shots;
    result.oracle_calls = 1;      // the single spin-Grover phase flip
    result.photon_operations = 1; // the single mode-selective excitation
    result.post_selected_degree_counts = degree_counts;
    return result;
}

PhotonMode photon_mode_for(Gender g) {
    return g == Gender::Female ? PhotonMode::ModeA : PhotonMode::ModeB;
}

ExcitedAtom atom_for_mode(PhotonMode mode) {
    return mode == PhotonMode::ModeA ? ExcitedAtom::A1 : ExcitedAtom::A2;
}

Gender gender_for_atom(ExcitedAtom atom) {
    return atom == ExcitedAtom::A1 ? Gender::Female : Gender::Male;
}

}  // namespace qsearch
