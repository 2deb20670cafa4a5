#pragma once

#include <stdexcept>
#include <string>

namespace ecom {

/// Base of every error raised by the engines. `kind()` is the stable name
/// surfaced in reports and CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ECOM_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    }

ECOM_DEFINE_ERROR(ShapeMismatch);
ECOM_DEFINE_ERROR(CompositionNonzero);
ECOM_DEFINE_ERROR(ResolutionFailure);
ECOM_DEFINE_ERROR(HomomorphismFailure);
ECOM_DEFINE_ERROR(UnknownName);
ECOM_DEFINE_ERROR(DecompositionAmbiguous);
ECOM_DEFINE_ERROR(NonRationalScalars);
ECOM_DEFINE_ERROR(RelationFailure);
ECOM_DEFINE_ERROR(NoSolution);
ECOM_DEFINE_ERROR(Ambiguous);
ECOM_DEFINE_ERROR(RankTooLarge);
ECOM_DEFINE_ERROR(ExtensionAmbiguous);
ECOM_DEFINE_ERROR(FunctorialityViolation);
ECOM_DEFINE_ERROR(NonVanishingLim2);
ECOM_DEFINE_ERROR(ParseError);
ECOM_DEFINE_ERROR(ConfigError);
ECOM_DEFINE_ERROR(PublishedMismatch);

#undef ECOM_DEFINE_ERROR

}  // namespace ecom
