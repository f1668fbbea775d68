#include "dea/error.hpp"

namespace dea {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::numerical_breakdown: return "NumericalBreakdown";
        case ErrorCode::empty_scenario: return "EmptyScenario";
        case ErrorCode::invalid_scenario: return "InvalidScenario";
        case ErrorCode::unsolvable_lp: return "UnsolvableLp";
        case ErrorCode::non_positive_price: return "NonPositivePrice";
        case ErrorCode::domain_error: return "DomainError";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::missing_value: return "MissingValue";
        case ErrorCode::negative_value: return "NegativeValue";
        case ErrorCode::unknown_metric: return "UnknownMetric";
        case ErrorCode::unknown_dmu: return "UnknownDmu";
        case ErrorCode::all_zero_profile: return "AllZeroProfile";
        case ErrorCode::zero_coverage: return "ZeroCoverage";
        case ErrorCode::unsupported_format: return "UnsupportedFormat";
    }
    return "Error";
}

}  // namespace dea
