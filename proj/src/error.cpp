#include "semicong/error.hpp"

#include <sstream>
#include <utility>

namespace semicong {

namespace {

std::string describe(AxiomKind kind, const std::vector<std::size_t>& witness) {
    std::ostringstream os;
    os << to_string(kind) << " (";
    for (std::size_t i = 0; i < witness.size(); ++i)
        os << (i ? "," : "") << witness[i];
    os << ")";
    return os.str();
}

std::string describe(FamilyError::Kind kind, std::size_t i, std::size_t j) {
    std::ostringstream os;
    switch (kind) {
    case FamilyError::Kind::NotUnionClosed:
        os << "NotUnionClosed: union of sets " << i << " and " << j << " is missing";
        break;
    case FamilyError::Kind::DuplicateSet:
        os << "DuplicateSet: sets " << i << " and " << j << " are equal";
        break;
    case FamilyError::Kind::Empty:
        os << "empty set family";
        break;
    }
    return os.str();
}

} // namespace

const char* to_string(AxiomKind kind) {
    switch (kind) {
    case AxiomKind::OutOfRangeEntry: return "OutOfRangeEntry";
    case AxiomKind::NotIdempotent: return "NotIdempotent";
    case AxiomKind::NotCommutative: return "NotCommutative";
    case AxiomKind::NotAssociative: return "NotAssociative";
    }
    return "?";
}

AxiomViolation::AxiomViolation(AxiomKind kind, std::vector<std::size_t> witness)
    : InvalidInput(describe(kind, witness)), kind_(kind), witness_(std::move(witness)) {}

FamilyError::FamilyError(Kind kind, std::size_t i, std::size_t j, unsigned long long missing)
    : InvalidInput(describe(kind, i, j)), kind_(kind), i_(i), j_(j), missing_(missing) {}

SizeCapExceeded::SizeCapExceeded(std::size_t n, std::size_t cap)
    : Error("size " + std::to_string(n) + " exceeds cap " + std::to_string(cap)), n_(n), cap_(cap) {}

HypothesisViolation::HypothesisViolation(std::string family, std::size_t offender,
                                         const std::string& what)
    : Error("hypothesis violated by " + family + "[" + std::to_string(offender) + "]: " + what),
      family_(std::move(family)), offender_(offender) {}

} // namespace semicong
