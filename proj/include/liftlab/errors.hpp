#pragma once

#include <stdexcept>

namespace liftlab {

// Base type for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRange : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BadLabeling : Error { using Error::Error; };
struct BadSize : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct BadResidueClass : Error { using Error::Error; };
struct BadParity : Error { using Error::Error; };
struct Timeout : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct TooSmall : Error { using Error::Error; };
struct ZeroGap : Error { using Error::Error; };
struct BadSet : Error { using Error::Error; };
struct MissingTags : Error { using Error::Error; };

}  // namespace liftlab
