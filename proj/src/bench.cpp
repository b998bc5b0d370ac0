#include "qsearch/bench.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "qsearch/classical.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/records.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    if (config.min_qubits < 2 || config.min_qubits > config.max_qubits ||
        config.max_qubits > 12) {
        throw std::invalid_argument("qubit bounds must satisfy 2 <= min <= max <= 12");
    }
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (config.shots_per_trial < 1) throw std::invalid_argument("shots must be >= 1");

    std::vector<BenchRow> rows;
    for (int n = config.min_qubits; n <= config.max_qubits; ++n) {
        const std::uint64_t n_states = std::uint64_t{1} << n;
        BenchRow row;
        row.n_qubits = n;
        row.n_states = n_states;
        row.grover_oracle_calls = optimal_iterations(n_states, 1);
        row.predicted_success = success_probability(n_states, 1, row.grover_oracle_calls);

        double empirical_sum = 0.0;
        double comparisons_sum = 0.0;
        for (int t = 0; t < config.trials; ++t) {
            const std::uint64_t trial_seed =
                derive_seed(config.seed, (static_cast<std::uint64_t>(n) << 32) |
                                             static_cast<std::uint64_t>(t));
            std::mt19937_64 rng(trial_seed);

            // N is a power of two, so masking the engine output is exactly uniform.
            const BasisIndex target = rng() & (n_states - 1);
            const GroverResult grover =
                run_grover(n, MarkedSet(n, {target}), IterationSchedule::automatic(),
                           config.shots_per_trial, derive_seed(trial_seed, 1));
            std::size_t hits = 0;
            for (BasisIndex s : grover.samples) {
                if (s == target) ++hits;
            }
            empirical_sum += static_cast<double>(hits) / config.shots_per_trial;

            const auto db = generate_records(derive_seed(trial_seed, 2), n_states, 0.5,
                                             {0.25, 0.25, 0.25, 0.25});
            const Gender gender = (rng() & 1) == 0 ? Gender::Female : Gender::Male;
            const Degree degree = static_cast<Degree>(rng() & 3);
            comparisons_sum += static_cast<double>(
                linear_search(db, gender, degree, QueryOrder::GenderFirst).comparisons);
        }
        row.empirical_success = empirical_sum / config.trials;
        row.classical_comparisons_mean = comparisons_sum / config.trials;
        rows.push_back(row);
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "n_qubits,N,grover_oracle_calls,predicted_success,empirical_success,"
           "classical_comparisons_mean\n";
    out.setf(std::ios::fixed);
    for (const BenchRow& r : rows) {
        out.precision(6);
        out << r.n_qubits << ',' << r.n_states << ',' << r.grover_oracle_calls << ','
            << r.predicted_success << ',' << r.empirical_success << ',';
        out.precision(2);
        out << r.classical_comparisons_mean << '\n';
    }
    return out.str();
}

}  // namespace qsearch
