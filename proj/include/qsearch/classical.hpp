#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsearch/records.hpp"

namespace qsearch {

/// Which predicate the linear scan tests first.
enum class QueryOrder { GenderFirst, EducationFirst };

struct ClassicalResult {
    std::vector<std::string> names;
    std::uint64_t comparisons = 0;
    QueryOrder order = QueryOrder::GenderFirst;
};

/// Full-scan two-predicate linear search. Cost model: one comparison per
/// field test, so comparisons = n + (records passing the first test). No
/// early exit: the query retrieves every match, not the first.
ClassicalResult linear_search(const std::vector<CensusRecord>& records, Gender gender,
                              Degree degree, QueryOrder order);

}  // namespace qsearch
