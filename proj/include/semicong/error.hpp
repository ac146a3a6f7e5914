#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace semicong {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad indices, wrong lengths, malformed documents.
class InvalidInput : public Error {
public:
    using Error::Error;
};

enum class AxiomKind { OutOfRangeEntry, NotIdempotent, NotCommutative, NotAssociative };

const char* to_string(AxiomKind kind);

/// A join table that fails one of the semilattice axioms. `witness` holds
/// (x,y) for range/commutativity, (x) for idempotency and (x,y,z) for
/// associativity.
class AxiomViolation : public InvalidInput {
public:
    AxiomViolation(AxiomKind kind, std::vector<std::size_t> witness);

    AxiomKind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    AxiomKind kind_;
    std::vector<std::size_t> witness_;
};

/// A union-closed family that is not actually union-closed, or has repeats.
class FamilyError : public InvalidInput {
public:
    enum class Kind { NotUnionClosed, DuplicateSet, Empty };

    FamilyError(Kind kind, std::size_t i, std::size_t j, unsigned long long missing = 0);

    Kind kind() const noexcept { return kind_; }
    std::size_t first() const noexcept { return i_; }
    std::size_t second() const noexcept { return j_; }
    unsigned long long missing_union() const noexcept { return missing_; }

private:
    Kind kind_;
    std::size_t i_;
    std::size_t j_;
    unsigned long long missing_;
};

class MismatchedCarrier : public Error {
public:
    MismatchedCarrier() : Error("congruences belong to different semilattices") {}
};

class SizeCapExceeded : public Error {
public:
    SizeCapExceeded(std::size_t n, std::size_t cap);

    std::size_t size() const noexcept { return n_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t n_;
    std::size_t cap_;
};

/// Input to an identity check that does not meet the identity's hypotheses.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(std::string family, std::size_t offender, const std::string& what);

    const std::string& family() const noexcept { return family_; }
    std::size_t offender() const noexcept { return offender_; }

private:
    std::string family_;
    std::size_t offender_;
};

class EmptyFamily : public Error {
public:
    explicit EmptyFamily(const std::string& which) : Error("empty family: " + which) {}
};

/// Raised when the maximal congruences above a congruence fail to meet back
/// to it. Always an implementation bug.
class DecompositionMismatch : public Error {
public:
    using Error::Error;
};

} // namespace semicong
