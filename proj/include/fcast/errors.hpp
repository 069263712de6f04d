#pragma once

#include <stdexcept>
#include <string>

namespace fcast {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Domain / data errors
struct NonPositiveValueError : Error { using Error::Error; };
struct TooShortError : Error { using Error::Error; };
struct TooFewKnotsError : Error { using Error::Error; };
struct ZeroVarianceError : Error { using Error::Error; };
struct EmptyIntersectionError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct EmptyInputError : Error { using Error::Error; };
struct DataError : Error { using Error::Error; };

// Estimation errors
struct SampleTooSmallError : Error { using Error::Error; };
struct RankDeficientError : Error { using Error::Error; };
struct SingularMatrixError : Error { using Error::Error; };
struct NonPositiveDeterminantError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct InsufficientTrainingError : Error { using Error::Error; };
struct CholeskyError : Error { using Error::Error; };

// Evaluation errors
struct ZeroDenominatorError : Error { using Error::Error; };
struct ZeroBenchmarkError : Error { using Error::Error; };

// Orchestration errors
struct ConfigError : Error { using Error::Error; };
struct BadSpecError : Error { using Error::Error; };

}  // namespace fcast
