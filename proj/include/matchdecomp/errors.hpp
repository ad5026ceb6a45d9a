#ifndef MATCHDECOMP_ERRORS_HPP
#define MATCHDECOMP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchdecomp {

enum class ErrorKind {
    DuplicateEdge,
    ZeroOrNegativeWeight,
    IndexOutOfRange,
    HOutOfRange,
    InfeasibleInput,
    InternalInconsistency,
    NonUnitWeights,
    MatchingNotMaximum,
    CoverNotOptimal,
    NotAMatching,
    MatchingNotOptimal,
    TooLarge,
    TooManyEdges,
    ParseError,
    ConstraintError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class MatchError : public std::runtime_error {
   public:
    MatchError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

/// Syntax error in an instance file; `line()` is 1-based.
class ParseError : public MatchError {
   public:
    ParseError(std::size_t line, const std::string& reason)
        : MatchError(ErrorKind::ParseError,
                     "line " + std::to_string(line) + ": " + reason),
          line_(line),
          reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

   private:
    std::size_t line_;
    std::string reason_;
};

}  // namespace matchdecomp

#endif
