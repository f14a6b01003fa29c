#ifndef UNIVALENT_ERROR_HPP
#define UNIVALENT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace univalent
{

enum class Errc {
    DivisionByNonUnit,
    OrderMismatch,
    BranchPointAtOrigin,
    InnerNotVanishing,
    NotInvertibleAtOrigin,
    RadiusExceeded,
    NotNormalized,
    ParamOutOfRange,
    DegreeTooLarge,
    OrderOutOfRange,
    QuadratureUnderresolved,
    BranchSelectionFailure,
    PoleAtMinusOne,
    StepRejected,
    TrajectoryEscaped,
    DerivativeUnderflow,
    BranchTrackingFailure,
    ChainUnavailable,
    UnknownFunction,
    UnknownSuite,
    IoFailure,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported through this exception; code() names the
// failure kind, what() carries the context.
class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string &detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code)
    {
    }

    Errc code() const noexcept
    {
        return code_;
    }

private:
    Errc code_;
};

} // namespace univalent

#endif
