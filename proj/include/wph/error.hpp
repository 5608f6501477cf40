#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wph {

/// Machine-readable failure categories. ParseError is the only input-syntax
/// code; everything else is a domain error.
enum class Errc {
    ParseError,
    ZeroInput,
    NotPrime,
    ZeroScalar,
    NotReduced,
    IllFormedWeights,
    WeightMismatch,
    ArityMismatch,
    ZeroPolynomial,
    NotHomogeneous,
    NonIntegralExponent,
    AllZero,
    NotNormalized,
    PointOnSubscheme,
    OnSupport,
    HypothesisViolated,
    PrimeNotDividingM,
    EmptyDomain,
    DegenerateGenerators,
    InvalidConfig,
};

constexpr std::string_view errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::NotReduced: return "NotReduced";
    case Errc::IllFormedWeights: return "IllFormedWeights";
    case Errc::WeightMismatch: return "WeightMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::NonIntegralExponent: return "NonIntegralExponent";
    case Errc::AllZero: return "AllZero";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::PointOnSubscheme: return "PointOnSubscheme";
    case Errc::OnSupport: return "OnSupport";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::PrimeNotDividingM: return "PrimeNotDividingM";
    case Errc::EmptyDomain: return "EmptyDomain";
    case Errc::DegenerateGenerators: return "DegenerateGenerators";
    case Errc::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace wph
