#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qsearch/bench.hpp"
#include "qsearch/classical.hpp"
#include "qsearch/composite.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/records.hpp"
#include "qsearch/statevector.hpp"

namespace {

using nlohmann::json;
using namespace qsearch;

constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPostSelection = 3;

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

std::vector<BasisIndex> parse_marked_list(const std::string& text) {
    std::vector<BasisIndex> indices;
    for (const std::string& part : split_commas(text)) {
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(part, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad marked index '" + part + "'");
        }
        if (used != part.size()) {
            throw std::invalid_argument("bad marked index '" + part + "'");
        }
        indices.push_back(value);
    }
    if (indices.empty()) throw std::invalid_argument("--marked needs at least one index");
    return indices;
}

std::array<double, 4> parse_degree_weights(const std::string& text) {
    const std::vector<std::string> parts = split_commas(text);
    if (parts.size() != 4) {
        throw std::invalid_argument("--degree-weights needs exactly 4 comma-separated values");
    }
    std::array<double, 4> weights{};
    for (std::size_t i = 0; i < 4; ++i) {
        try {
            weights[i] = std::stod(parts[i]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad weight '" + parts[i] + "'");
        }
    }
    return weights;
}

Gender parse_gender_flag(const std::string& token) {
    const auto g = gender_from_token(token);
    if (!g) throw std::invalid_argument("unknown gender '" + token + "'");
    return *g;
}

Degree parse_degree_flag(const std::string& token) {
    const auto d = degree_from_token(token);
    if (!d) throw std::invalid_argument("unknown degree '" + token + "'");
    return *d;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void emit(const json& report) { std::cout << report.dump(2) << '\n'; }

struct GenArgs {
    std::uint64_t seed = 1;
    std::uint64_t count = 0;
    std::string out;
    double gender_split = 0.5;
    std::string degree_weights = "0.25,0.25,0.25,0.25";
};

void run_gen(const GenArgs& args) {
    const auto records = generate_records(args.seed, args.count, args.gender_split,
                                          parse_degree_weights(args.degree_weights));
    write_file(args.out, serialize_records(records));
}

struct GroverArgs {
    int qubits = 2;
    std::string marked;
    std::string iterations = "auto";
    int shots = 0;
    std::uint64_t seed = 1;
    std::string format = "json";
};

void run_grover_cmd(const GroverArgs& args) {
    const MarkedSet marked(args.qubits, parse_marked_list(args.marked));

    IterationSchedule schedule = IterationSchedule::automatic();
    if (args.iterations != "auto") {
        int k = 0;
        try {
            k = std::stoi(args.iterations);
        } catch (const std::exception&) {
            throw std::invalid_argument("--iterations must be 'auto' or an integer >= 0");
        }
        schedule = IterationSchedule::fixed(k);
    }

    const GroverResult result =
        run_grover(args.qubits, marked, schedule, args.shots, args.seed);

    std::map<std::string, std::uint64_t> counts;
    for (BasisIndex s : result.samples) ++counts[std::to_string(s)];
    json frequencies = json::object();
    json counts_json = json::object();
    for (const auto& [outcome, count] : counts) {
        counts_json[outcome] = count;
        frequencies[outcome] = static_cast<double>(count) / result.samples.size();
    }

    emit(json{{"schema_version", kSchemaVersion},
              {"command", "grover"},
              {"n_qubits", args.qubits},
              {"N", std::uint64_t{1} << args.qubits},
              {"marked", marked.indices()},
              {"iterations_mode", args.iterations == "auto" ? "auto" : "fixed"},
              {"iterations_used", result.iterations_used},
              {"oracle_calls", result.oracle_calls},
              {"predicted_success", result.predicted_success},
              {"marked_mass", marked_mass(result.final_state, marked)},
              {"shots", args.shots},
              {"seed", args.seed},
              {"counts", counts_json},
              {"empirical_frequencies", frequencies}});
}

struct Search2dArgs {
    std::string db;
    std::string gender;
    std::string degree;
    int shots = 1000;
    std::uint64_t seed = 1;
    std::string format = "json";
};

void run_search2d(const Search2dArgs& args) {
    const Gender gender = parse_gender_flag(args.gender);
    const Degree degree = parse_degree_flag(args.degree);

    const auto records = parse_records(read_file(args.db));
    const RecordIndex index = build_index(records);

    const SearchOutcome outcome =
        search_two_dimensional(index, gender, degree, args.shots, args.seed);
    const std::vector<std::string> reference = brute_force_filter(records, gender, degree);

    json degree_counts = json::object();
    for (int s = 0; s < 4; ++s) {
        degree_counts[std::string(to_token(degree_of_spin(s)))] =
            outcome.post_selected_degree_counts[static_cast<std::size_t>(s)];
    }

    emit(json{{"schema_version", kSchemaVersion},
              {"command", "search2d"},
              {"db", args.db},
              {"query",
               {{"gender", std::string(to_token(gender))},
                {"degree", std::string(to_token(degree))}}},
              {"photon_mode", outcome.mode == PhotonMode::ModeA ? "A" : "B"},
              {"photon_operations", outcome.photon_operations},
              {"oracle_calls", outcome.oracle_calls},
              {"shots", outcome.shots_used},
              {"seed", args.seed},
              {"post_selected", outcome.post_selected},
              {"post_selection_rate", outcome.post_selection_rate},
              {"post_selected_degree_counts", degree_counts},
              {"bucket",
               {{"gender", std::string(to_token(outcome.bucket_gender))},
                {"degree", std::string(to_token(outcome.bucket_degree))}}},
              {"names", outcome.names},
              {"brute_force", {{"names", reference}}},
              {"match", outcome.names == reference}});
}

struct ClassicalArgs {
    std::string db;
    std::string gender;
    std::string degree;
    std::string order = "gender-first";
    std::string format = "json";
};

void run_classical(const ClassicalArgs& args) {
    const Gender gender = parse_gender_flag(args.gender);
    const Degree degree = parse_degree_flag(args.degree);
    QueryOrder order = QueryOrder::GenderFirst;
    if (args.order == "education-first") {
        order = QueryOrder::EducationFirst;
    } else if (args.order != "gender-first") {
        throw std::invalid_argument("--order must be gender-first or education-first");
    }

    const auto records = parse_records(read_file(args.db));
    const ClassicalResult result = linear_search(records, gender, degree, order);

    emit(json{{"schema_version", kSchemaVersion},
              {"command", "classical"},
              {"db", args.db},
              {"query",
               {{"gender", std::string(to_token(gender))},
                {"degree", std::string(to_token(degree))}}},
              {"order", args.order},
              {"records", records.size()},
              {"comparisons", result.comparisons},
              {"names", result.names}});
}

struct BenchArgs {
    int min_qubits = 2;
    int max_qubits = 12;
    int trials = 5;
    std::uint64_t seed = 1;
    std::string out;
};

void run_bench_cmd(const BenchArgs& args) {
    BenchConfig config;
    config.min_qubits = args.min_qubits;
    config.max_qubits = args.max_qubits;
    config.trials = args.trials;
    config.seed = args.seed;
    const std::string csv = bench_to_csv(run_bench(config));
    if (args.out.empty()) {
        std::cout << csv;
    } else {
        write_file(args.out, csv);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"statevector Grover search simulator, two-dimensional census query "
                 "pipeline, and classical baseline benchmark"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a synthetic census CSV");
    gen->add_option("--seed", gen_args.seed, "generator seed")->required();
    gen->add_option("--count", gen_args.count, "number of records")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000000}));
    gen->add_option("--out", gen_args.out, "output CSV path")->required();
    gen->add_option("--gender-split", gen_args.gender_split, "probability of female");
    gen->add_option("--degree-weights", gen_args.degree_weights,
                    "comma-separated weights for highschool,bachelor,master,doctorate");
    gen->callback([&] { run_gen(gen_args); });

    GroverArgs grover_args;
    auto* grover = app.add_subcommand("grover", "run Grover search on n qubits");
    grover->add_option("--qubits", grover_args.qubits, "register size")
        ->required()
        ->check(CLI::Range(1, kMaxQubits));
    grover->add_option("--marked", grover_args.marked, "comma-separated marked indices")
        ->required();
    grover->add_option("--iterations", grover_args.iterations, "'auto' or a fixed count");
    grover->add_option("--shots", grover_args.shots, "measurement shots (0 = state only)")
        ->check(CLI::Range(0, 10000000));
    grover->add_option("--seed", grover_args.seed, "sampling seed");
    grover->add_option("--format", grover_args.format)->check(CLI::IsMember({"json"}));
    grover->callback([&] { run_grover_cmd(grover_args); });

    Search2dArgs search_args;
    auto* search2d =
        app.add_subcommand("search2d", "two-dimensional gender+degree quantum query");
    search2d->add_option("--db", search_args.db, "census CSV path")->required();
    search2d->add_option("--gender", search_args.gender, "female or male")->required();
    search2d->add_option("--degree", search_args.degree,
                         "highschool, bachelor, master or doctorate")
        ->required();
    search2d->add_option("--shots", search_args.shots, "measurement shots")
        ->check(CLI::Range(1, 10000000));
    search2d->add_option("--seed", search_args.seed, "sampling seed");
    search2d->add_option("--format", search_args.format)->check(CLI::IsMember({"json"}));
    search2d->callback([&] { run_search2d(search_args); });

    ClassicalArgs classical_args;
    auto* classical =
        app.add_subcommand("classical", "classical linear search with comparison counting");
    classical->add_option("--db", classical_args.db, "census CSV path")->required();
    classical->add_option("--gender", classical_args.gender, "female or male")->required();
    classical->add_option("--degree", classical_args.degree,
                          "highschool, bachelor, master or doctorate")
        ->required();
    classical->add_option("--order", classical_args.order,
                          "gender-first or education-first");
    classical->add_option("--format", classical_args.format)->check(CLI::IsMember({"json"}));
    classical->callback([&] { run_classical(classical_args); });

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "quantum vs classical scaling table");
    bench->add_option("--min-qubits", bench_args.min_qubits, "smallest register");
    bench->add_option("--max-qubits", bench_args.max_qubits, "largest register");
    bench->add_option("--trials", bench_args.trials, "trials per size")
        ->check(CLI::Range(1, 1000));
    bench->add_option("--seed", bench_args.seed, "base seed");
    bench->add_option("--out", bench_args.out, "output CSV path (stdout if omitted)");
    bench->callback([&] { run_bench_cmd(bench_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const CsvParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitIo;
    } catch (const PostSelectionExhaustedError& e) {
        std::cerr << "post-selection exhausted: " << e.what() << '\n';
        return kExitPostSelection;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
