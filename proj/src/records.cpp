#include "qsearch/records.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <set>

namespace qsearch {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

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

// Pronounceable unique-ish names: capitalized consonant-vowel syllables.
std::string random_name(std::mt19937_64& rng) {
    static constexpr char consonants[] = "bcdfghjklmnprstvwz";
    static constexpr char vowels[] = "aeiou";
    const int syllables = 3 + static_cast<int>(rng() % 2);
    std::string name;
    for (int i = 0; i < syllables; ++i) {
        name += consonants[rng() % (sizeof(consonants) - 1)];
        name += vowels[rng() % (sizeof(vowels) - 1)];
    }
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    return name;
}

}  // namespace

std::string_view to_token(Gender g) {
    return g == Gender::Female ? "female" : "male";
}

std::string_view to_token(Degree d) {
    switch (d) {
        case Degree::HighSchool: return "highschool";
        case Degree::Bachelor: return "bachelor";
        case Degree::Master: return "master";
        case Degree::Doctorate: return "doctorate";
    }
    return "";
}

std::optional<Gender> gender_from_token(std::string_view token) {
    const std::string t = lower(token);
    if (t == "female") return Gender::Female;
    if (t == "male") return Gender::Male;
    return std::nullopt;
}

std::optional<Degree> degree_from_token(std::string_view token) {
    const std::string t = lower(token);
    if (t == "highschool") return Degree::HighSchool;
    if (t == "bachelor") return Degree::Bachelor;
    if (t == "master") return Degree::Master;
    if (t == "doctorate") return Degree::Doctorate;
    return std::nullopt;
}

int spin_index_of(Degree d) { return static_cast<int>(d); }

Degree degree_of_spin(int spin_index) {
    if (spin_index < 0 || spin_index > 3) {
        throw std::out_of_range("spin index must be in [0, 3]");
    }
    return static_cast<Degree>(spin_index);
}

CsvParseError::CsvParseError(std::size_t line_number, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
      line(line_number) {}

std::vector<CensusRecord> parse_records(std::string_view csv) {
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos < csv.size();) {
        std::size_t eol = csv.find('\n', pos);
        if (eol == std::string_view::npos) eol = csv.size();
        std::string_view line = csv.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = eol + 1;
    }

    if (lines.empty() || lines[0] != "name,gender,degree") {
        throw CsvParseError(1, "expected header 'name,gender,degree'");
    }

    std::vector<CensusRecord> records;
    records.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_number = i + 1;
        const std::string_view line = lines[i];
        if (line.empty()) throw CsvParseError(line_number, "empty row");

        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string_view::npos
                                   ? std::string_view::npos
                                   : line.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
            line.find(',', c2 + 1) != std::string_view::npos) {
            throw CsvParseError(line_number, "expected exactly 3 comma-separated fields");
        }
        std::string_view name = line.substr(0, c1);
        std::string_view gender_token = line.substr(c1 + 1, c2 - c1 - 1);
        std::string_view degree_token = line.substr(c2 + 1);

        if (name.empty()) throw CsvParseError(line_number, "empty name");
        const auto gender = gender_from_token(gender_token);
        if (!gender) {
            throw CsvParseError(line_number,
                                "unknown gender '" + std::string(gender_token) + "'");
        }
        const auto degree = degree_from_token(degree_token);
        if (!degree) {
            throw CsvParseError(line_number,
                                "unknown degree '" + std::string(degree_token) + "'");
        }
        records.push_back({std::string(name), *gender, *degree});
    }
    return records;
}

std::string serialize_records(const std::vector<CensusRecord>& records) {
    std::string out = "name,gender,degree\n";
    for (const CensusRecord& r : records) {
        out += r.name;
        out += ',';
        out += to_token(r.gender);
        out += ',';
        out += to_token(r.degree);
        out += '\n';
    }
    return out;
}

std::vector<CensusRecord> generate_records(std::uint64_t seed, std::size_t count,
                                           double gender_split,
                                           std::array<double, 4> degree_weights) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    if (gender_split < 0.0 || gender_split > 1.0 || !std::isfinite(gender_split)) {
        throw std::invalid_argument("gender split must be in [0, 1]");
    }
    check_distribution(degree_weights.data(), 4, "degree");

    std::mt19937_64 rng(seed);

    // std::set keeps the names unique and already alphabetical.
    std::set<std::string> names;
    while (names.size() < count) names.insert(random_name(rng));

    std::vector<CensusRecord> records;
    records.reserve(count);
    for (const std::string& name : names) {
        const Gender gender = uniform53(rng) < gender_split ? Gender::Female : Gender::Male;
        const double u = uniform53(rng);
        double acc = 0.0;
        Degree degree = Degree::Doctorate;
        for (int d = 0; d < 4; ++d) {
            acc += degree_weights[static_cast<std::size_t>(d)];
            if (u < acc) {
                degree = static_cast<Degree>(d);
                break;
            }
        }
        records.push_back({name, gender, degree});
    }
    return records;
}

const std::vector<std::string>& RecordIndex::bucket(Gender g, Degree d) const {
    return buckets_[static_cast<std::size_t>(g)][static_cast<std::size_t>(d)];
}

void RecordIndex::add(const CensusRecord& record) {
    buckets_[static_cast<std::size_t>(record.gender)][static_cast<std::size_t>(record.degree)]
        .push_back(record.name);
    ++total_;
}

RecordIndex build_index(const std::vector<CensusRecord>& records) {
    RecordIndex index;
    for (const CensusRecord& r : records) index.add(r);
    return index;
}

std::vector<std::string> brute_force_filter(const std::vector<CensusRecord>& records,
                                            Gender gender, Degree degree) {
    std::vector<std::string> names;
    for (const CensusRecord& r : records) {
        if (r.gender == gender && r.degree == degree) names.push_back(r.name);
    }
    return names;
}

}  // namespace qsearch
