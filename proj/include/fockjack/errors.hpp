#pragma once

#include <stdexcept>
#include <string>

namespace fockjack {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct DiscriminantMismatch : std::domain_error {
    DiscriminantMismatch() : std::domain_error("quadratic scalars with different discriminants") {}
};

struct PoleAtKappa : std::domain_error {
    explicit PoleAtKappa(const std::string& at)
        : std::domain_error("rational function has a pole at kappa = " + at) {}
};

struct NotAUnit : std::domain_error {
    NotAUnit() : std::domain_error("eps-series with zero constant term is not a unit of O") {}
};

struct BoxOutOfDiagram : std::out_of_range {
    BoxOutOfDiagram() : std::out_of_range("box coordinates outside the Young diagram") {}
};

struct DegreeMismatch : std::invalid_argument {
    DegreeMismatch() : std::invalid_argument("dominance comparison requires equal degree") {}
};

struct EmptyPartition : std::invalid_argument {
    explicit EmptyPartition(const std::string& what) : std::invalid_argument(what) {}
};

struct SizeGuardExceeded : std::length_error {
    explicit SizeGuardExceeded(const std::string& what) : std::length_error(what) {}
};

struct DegreeGuardExceeded : std::length_error {
    explicit DegreeGuardExceeded(const std::string& what) : std::length_error(what) {}
};

struct LengthExceedsN : std::invalid_argument {
    LengthExceedsN() : std::invalid_argument("partition length exceeds the number of variables") {}
};

struct GammaPole : std::domain_error {
    explicit GammaPole(double at)
        : std::domain_error("Gamma pole at " + std::to_string(at)) {}
};

struct NotCoprime : std::invalid_argument {
    NotCoprime() : std::invalid_argument("p+ and p- must be coprime") {}
};

struct OutOfRange : std::out_of_range {
    explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct BadConstantTerm : std::invalid_argument {
    BadConstantTerm() : std::invalid_argument("deformation must start at the undeformed value") {}
};

struct ZeroFirstOrder : std::invalid_argument {
    ZeroFirstOrder() : std::invalid_argument("deformation needs a nonzero first-order term") {}
};

struct NotSymmetric : std::invalid_argument {
    NotSymmetric() : std::invalid_argument("polynomial is not symmetric under beta -> alpha0 - beta") {}
};

struct OutOfSector : std::invalid_argument {
    explicit OutOfSector(const std::string& what) : std::invalid_argument(what) {}
};

struct NotProportional : std::logic_error {
    explicit NotProportional(const std::string& what) : std::logic_error(what) {}
};

struct TwoRouteMismatch : std::logic_error {
    explicit TwoRouteMismatch(const std::string& what) : std::logic_error(what) {}
};

struct FactorizationMismatch : std::logic_error {
    explicit FactorizationMismatch(const std::string& what) : std::logic_error(what) {}
};

struct RelationViolated : std::logic_error {
    explicit RelationViolated(const std::string& what) : std::logic_error(what) {}
};

struct TriangularityViolated : std::logic_error {
    explicit TriangularityViolated(const std::string& what) : std::logic_error(what) {}
};

struct NegativeCoefficient : std::logic_error {
    explicit NegativeCoefficient(const std::string& what) : std::logic_error(what) {}
};

struct CharacterMismatch : std::logic_error {
    explicit CharacterMismatch(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fockjack
