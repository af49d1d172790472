#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latder {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LATDER_DEFINE_ERROR(Name)              \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

// order-core
LATDER_DEFINE_ERROR(CycleError);
LATDER_DEFINE_ERROR(NotReducedError);
LATDER_DEFINE_ERROR(NotLatticeError);
LATDER_DEFINE_ERROR(IndexError);
LATDER_DEFINE_ERROR(NotIrreducibleError);

// cover-poset
LATDER_DEFINE_ERROR(NotALowerCoverError);
LATDER_DEFINE_ERROR(NotAnUpperCoverError);
LATDER_DEFINE_ERROR(NotPushdownError);
LATDER_DEFINE_ERROR(InvalidCoverError);

// bounded-analysis / derived
LATDER_DEFINE_ERROR(PartialLabellingError);
LATDER_DEFINE_ERROR(NotSemidistributiveError);
LATDER_DEFINE_ERROR(NotBoundedError);
LATDER_DEFINE_ERROR(LabellingInvalidError);
LATDER_DEFINE_ERROR(StageSelectorError);

// generators
LATDER_DEFINE_ERROR(SizeError);
LATDER_DEFINE_ERROR(NotASplitError);
LATDER_DEFINE_ERROR(NotPerspectiveError);
LATDER_DEFINE_ERROR(InvalidArgumentError);

// quotient-iso
LATDER_DEFINE_ERROR(NotACongruenceError);

// cli-io
LATDER_DEFINE_ERROR(ParseError);
LATDER_DEFINE_ERROR(IoError);

#undef LATDER_DEFINE_ERROR

/// Raised when a cover has zero or several perspective join-irreducibles.
class AmbiguityError : public Error {
public:
    AmbiguityError(const std::string& what, std::vector<std::uint32_t> candidates)
        : Error(what), candidates_(std::move(candidates)) {}

    const std::vector<std::uint32_t>& candidates() const noexcept { return candidates_; }

private:
    std::vector<std::uint32_t> candidates_;
};

}  // namespace latder
