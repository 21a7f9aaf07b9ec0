// errors.hpp -- exception types shared across the anomaly library

#pragma once

#include <stdexcept>
#include <string>

namespace anomaly {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside its documented domain (k = 0, even alphabet, ...).
class InvalidParameter final : public Error {
public:
    using Error::Error;
};

/// canonical_representative was asked for the all-zero vector.
class ZeroVector final : public Error {
public:
    using Error::Error;
};

/// More elements requested than (s^k - s)/2 distinct codes exist.
class CapacityExceeded final : public Error {
public:
    using Error::Error;
};

/// No balanced sign/subset assignment exists (proved by exhaustive search).
class PlanInfeasible final : public Error {
public:
    using Error::Error;
};

/// A capacity computation left the 64-bit integer range.
class Overflow final : public Error {
public:
    using Error::Error;
};

/// The brute-force feasibility oracle was asked for an instance above its
/// s^k bound.
class ScaleGuard final : public Error {
public:
    using Error::Error;
};

/// A plan file is structurally malformed (bad tag, wrong shape, bad types).
class FormatError final : public Error {
public:
    using Error::Error;
};

/// A structurally well-formed plan file violates codebook invariants; the
/// message lists every defect found.
class InvariantError final : public Error {
public:
    using Error::Error;
};

/// An element appears under two different values in one analysis.
class ConflictingAssignment final : public Error {
public:
    using Error::Error;
};

/// A hypothesis names an element outside 1..n.
class InvalidHypothesis final : public Error {
public:
    using Error::Error;
};

/// A nonzero outcome vector matches no code and no inverted code, or matches
/// more than one. Signals multiple anomalies, mis-executed analyses, or a
/// corrupted plan.
class InconsistentOutcome final : public Error {
public:
    using Error::Error;
};

} // namespace anomaly
