#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace latgeo {

// Base for all domain errors. `code()` is the stable machine-readable name
// echoed by the CLI; `what()` carries the human-readable detail.
class LatticeError : public std::runtime_error {
public:
    LatticeError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define LATGEO_DEFINE_ERROR(NAME)                                     \
    class NAME : public LatticeError {                                \
    public:                                                           \
        explicit NAME(const std::string& message)                     \
            : LatticeError(#NAME, message) {}                         \
    }

LATGEO_DEFINE_ERROR(DependentRows);
LATGEO_DEFINE_ERROR(RaggedInput);
LATGEO_DEFINE_ERROR(ShapeMismatch);
LATGEO_DEFINE_ERROR(NotFullRank);
LATGEO_DEFINE_ERROR(DimensionTooLarge);
LATGEO_DEFINE_ERROR(BudgetExceeded);
LATGEO_DEFINE_ERROR(OutOfTable);
LATGEO_DEFINE_ERROR(NotDefined);
LATGEO_DEFINE_ERROR(NotApplicable);
LATGEO_DEFINE_ERROR(NotPrime);

#undef LATGEO_DEFINE_ERROR

} // namespace latgeo
