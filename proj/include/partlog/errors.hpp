#ifndef PARTLOG_ERRORS_HPP
#define PARTLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace partlog {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UniverseMismatchError : Error { using Error::Error; };

// partition_from_blocks
struct OverlapError : Error { using Error::Error; };
struct EmptyBlockError : Error { using Error::Error; };
struct CoverageError : Error { using Error::Error; };

struct CapExceededError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };

// truth tables
struct LengthError : Error { using Error::Error; };
struct CharacterError : Error { using Error::Error; };
struct ArityMismatchError : Error { using Error::Error; };

// formulas
struct ArityError : Error { using Error::Error; };
struct UnboundVariableError : Error { using Error::Error; };
struct MethodUnsupportedError : Error { using Error::Error; };
struct VariableCapError : Error { using Error::Error; };
struct VariableError : Error { using Error::Error; };

// structures
struct NotInCoreError : Error { using Error::Error; };

struct SyntaxError : Error {
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}

    std::size_t position;
};

}  // namespace partlog

#endif
