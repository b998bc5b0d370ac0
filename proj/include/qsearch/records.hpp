#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsearch {

enum class Gender { Female, Male };

// Exactly four degrees: the 2-qubit spin register has four basis states.
enum class Degree { HighSchool, Bachelor, Master, Doctorate };

inline constexpr std::array<Gender, 2> kAllGenders{Gender::Female, Gender::Male};
inline constexpr std::array<Degree, 4> kAllDegrees{Degree::HighSchool, Degree::Bachelor,
                                                   Degree::Master, Degree::Doctorate};

std::string_view to_token(Gender g);
std::string_view to_token(Degree d);
std::optional<Gender> gender_from_token(std::string_view token);  // case-insensitive
std::optional<Degree> degree_from_token(std::string_view token);  // case-insensitive

/// Degree <-> spin-register bijection: |00> HighSchool, |01> Bachelor,
/// |10> Master, |11> Doctorate.
int spin_index_of(Degree d);
Degree degree_of_spin(int spin_index);

struct CensusRecord {
    std::string name;  // nonempty, no commas
    Gender gender = Gender::Female;
    Degree degree = Degree::HighSchool;

    bool operator==(const CensusRecord&) const = default;
};

struct CsvParseError : std::runtime_error {
    CsvParseError(std::size_t line, const std::string& what);
    std::size_t line;
};

/// Parses the census CSV format: header `name,gender,degree`, lowercase enum
/// tokens (matched case-insensitively), LF line endings, no quoting.
std::vector<CensusRecord> parse_records(std::string_view csv);

/// Inverse of parse_records; emits the canonical lowercase-token CSV.
std::string serialize_records(const std::vector<CensusRecord>& records);

/// Deterministic synthetic census: `count` unique names in alphabetical
/// order, genders Bernoulli(gender_split), degrees drawn from degree_weights.
std::vector<CensusRecord> generate_records(std::uint64_t seed, std::size_t count,
                                           double gender_split,
                                           std::array<double, 4> degree_weights);

/// Classical associative layer: (gender, degree) -> names, insertion order.
class RecordIndex {
public:
    RecordIndex() = default;

    const std::vector<std::string>& bucket(Gender g, Degree d) const;
    std::size_t total() const { return total_; }

    void add(const CensusRecord& record);

private:
    std::array<std::array<std::vector<std::string>, 4>, 2> buckets_{};
    std::size_t total_ = 0;
};

RecordIndex build_index(const std::vector<CensusRecord>& records);

/// Ground-truth linear filter; verification oracle for the quantum pipeline.
std::vector<std::string> brute_force_filter(const std::vector<CensusRecord>& records,
                                            Gender gender, Degree degree);

}  // namespace qsearch
