#ifndef TGEN_ERROR_HPP
#define TGEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tgen
{

enum class ErrorKind
{
    Syntax,
    Validation,
    DimensionTooLow,
    ShapeMismatch,
    NotSupported,
    IndexOutOfRange,
    EmptyColumn,
    VertexNotInColumn,
    InvalidIncidence,
    NotRepresentable,
    ChainLawViolation,
    Overflow,
    OracleTooLarge,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code without string matching.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace tgen

#endif
