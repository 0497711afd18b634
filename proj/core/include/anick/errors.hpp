#pragma once

#include <stdexcept>
#include <string>

namespace anick {

// Base of every exception thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: files, schemas, flags, out-of-range arguments.
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// A mathematical check failed; the computation cannot be trusted.
struct MathError : Error {
  explicit MathError(const std::string& msg) : Error(msg) {}
};

struct NotAGSB : MathError {
  explicit NotAGSB(const std::string& msg) : MathError(msg) {}
};

struct InvalidMatching : MathError {
  explicit InvalidMatching(const std::string& msg) : MathError(msg) {}
};

struct CycleDetected : MathError {
  explicit CycleDetected(const std::string& msg) : MathError(msg) {}
};

struct CompositionNonzero : MathError {
  explicit CompositionNonzero(const std::string& msg) : MathError(msg) {}
};

struct RelationViolated : MathError {
  explicit RelationViolated(const std::string& msg) : MathError(msg) {}
};

struct ActionsDontCommute : MathError {
  explicit ActionsDontCommute(const std::string& msg) : MathError(msg) {}
};

struct NotIdempotent : MathError {
  explicit NotIdempotent(const std::string& msg) : MathError(msg) {}
};

struct InfiniteDimensional : MathError {
  explicit InfiniteDimensional(const std::string& msg) : MathError(msg) {}
};

struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

struct RankMismatch : InputError {
  explicit RankMismatch(const std::string& msg) : InputError(msg) {}
};

struct LeftPositivePart : MathError {
  explicit LeftPositivePart(const std::string& msg) : MathError(msg) {}
};

struct InconsistentSystem : MathError {
  explicit InconsistentSystem(const std::string& msg) : MathError(msg) {}
};

struct WitnessFailed : MathError {
  explicit WitnessFailed(const std::string& msg) : MathError(msg) {}
};

struct IsoFailure : MathError {
  explicit IsoFailure(const std::string& msg) : MathError(msg) {}
};

}  // namespace anick
