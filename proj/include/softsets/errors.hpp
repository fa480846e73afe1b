#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace softsets {

// Base of every error the library throws. code() is the stable name used in reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define SOFTSETS_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    };

SOFTSETS_DEFINE_ERROR(SchemaError)
SOFTSETS_DEFINE_ERROR(IoError)
SOFTSETS_DEFINE_ERROR(KindMismatch)
SOFTSETS_DEFINE_ERROR(UnknownIdentifier)
SOFTSETS_DEFINE_ERROR(UniverseMismatch)
SOFTSETS_DEFINE_ERROR(MapNotTotal)
SOFTSETS_DEFINE_ERROR(ScoreOutOfRange)
SOFTSETS_DEFINE_ERROR(MissingParameter)
SOFTSETS_DEFINE_ERROR(ArityMismatch)
SOFTSETS_DEFINE_ERROR(TagArityMismatch)
SOFTSETS_DEFINE_ERROR(StageOutOfRange)
SOFTSETS_DEFINE_ERROR(UnknownSubset)
SOFTSETS_DEFINE_ERROR(UnknownIndex)
SOFTSETS_DEFINE_ERROR(ObjectUncovered)
SOFTSETS_DEFINE_ERROR(IndexOutOfRange)
SOFTSETS_DEFINE_ERROR(UnknownNode)
SOFTSETS_DEFINE_ERROR(NotASubgraph)
SOFTSETS_DEFINE_ERROR(UnknownCluster)
SOFTSETS_DEFINE_ERROR(FamilyTooLarge)
SOFTSETS_DEFINE_ERROR(GroundTooLarge)
SOFTSETS_DEFINE_ERROR(IncompleteTable)
SOFTSETS_DEFINE_ERROR(CarrierMismatch)
SOFTSETS_DEFINE_ERROR(InvalidWindow)
SOFTSETS_DEFINE_ERROR(NegativeWeight)
SOFTSETS_DEFINE_ERROR(NonConvergence)
SOFTSETS_DEFINE_ERROR(InvalidCoefficient)

#undef SOFTSETS_DEFINE_ERROR

// Raised when a Type-n chain leaves the parameter tree. step is 1-based.
class InvalidChain : public Error {
public:
    InvalidChain(std::size_t step, const std::string& message)
        : Error("InvalidChain", message), step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace softsets
