#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsearch {

/// One row of the quantum-vs-classical scaling table.
struct BenchRow {
    int n_qubits = 0;
    std::uint64_t n_states = 0;         // N = 2^n_qubits
    int grover_oracle_calls = 0;        // floor((pi/4) * sqrt(N)) for M = 1
    double predicted_success = 0.0;
    double empirical_success = 0.0;
    double classical_comparisons_mean = 0.0;
};

struct BenchConfig {
    int min_qubits = 2;
    int max_qubits = 12;
    int trials = 5;
    std::uint64_t seed = 1;
    int shots_per_trial = 1000;
};

/// For each register size: auto-scheduled single-target Grover runs with a
/// random marked index per trial, against classical linear searches with a
/// random (gender, degree) query over a generated database of N records.
/// Row order is fixed by n_qubits; trial seeds derive from config.seed.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// CSV with header n_qubits,N,grover_oracle_calls,predicted_success,
/// empirical_success,classical_comparisons_mean.
std::string bench_to_csv(const std::vector<BenchRow>& rows);

}  // namespace qsearch
