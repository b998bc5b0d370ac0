#include "qsearch/classical.hpp"

namespace qsearch {

ClassicalResult linear_search(const std::vector<CensusRecord>& records, Gender gender,
                              Degree degree, QueryOrder order) {
    ClassicalResult result;
    result.order = order;
    for (const CensusRecord& r : records) {
        ++result.comparisons;  // first-field test on every record
        const bool first_matches =
            order == QueryOrder::GenderFirst ? r.gender == gender : r.degree == degree;
        if (!first_matches) continue;
        ++result.comparisons;  // second-field test on survivors only
        const bool second_matches =
            order == QueryOrder::GenderFirst ? r.degree == degree : r.gender == gender;
        if (second_matches) result.names.push_back(r.name);
    }
    return result;
}

}  // namespace qsearch
