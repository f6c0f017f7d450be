#ifndef KLOC_ERROR_HPP
#define KLOC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kloc {

enum class ErrorKind {
    InfiniteCokernel,
    MissingCharacter,
    NotPGroup,
    NotMonic,
    Reducible,
    DegreeZero,
    FieldMismatch,
    PrecisionExhausted,
    EffortExceeded,
    OutOfTheoremScope,
    EvenIndex,
    InvalidInput,
    ParseError,
    UnknownExample,
};

char const * to_string(ErrorKind kind);

class Error : public std::runtime_error {
    ErrorKind kind_;

  public:
    Error(ErrorKind kind, std::string const & what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }
    ErrorKind kind() const noexcept { return kind_; }
};

} // namespace kloc

#endif
