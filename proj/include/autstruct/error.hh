// error.hh -- error reporting shared by all autstruct modules

#ifndef AUTSTRUCT_ERROR_HH
#define AUTSTRUCT_ERROR_HH

#include <stdexcept>
#include <string>
#include <string_view>

namespace autstruct {

enum class ErrorKind {
    UnknownLetter,
    UnknownState,
    NotInverseDeterministic,
    ReservedTokenCollision,
    InvalidToken,
    NotDeterministic,
    ConfigBudgetExceeded,
    MalformedDfa,
    MalformedMachine,
    NotGAutomaton,
    SpaceBoundViolated,
    LeftEdgeViolated,
    Parse,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace autstruct

#endif
