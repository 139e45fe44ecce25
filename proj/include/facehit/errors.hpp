#pragma once

#include <stdexcept>
#include <string>

namespace facehit {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text or structurally inconsistent graph data
/// (unknown ids, duplicate ids, bad tokens).
struct ParseError : Error {
  using Error::Error;
};

/// The rotation system / nesting data does not describe a plane embedding:
/// rotation mismatches, per-component Euler check failure, broken anchor
/// forest, out-of-range face indices.
struct InvalidEmbeddingError : Error {
  using Error::Error;
};

/// A documented precondition of an operation does not hold.  `assumption`
/// names the violated assumption ("isolated-vertex", "self-loop", "2-face",
/// "disconnected", "degree<2", ...) and `subject` the offending vertex,
/// edge or face id (-1 when not applicable).
struct PreconditionError : Error {
  std::string assumption;
  long long subject;
  PreconditionError(const std::string& assumption_, long long subject_,
                    const std::string& what)
      : Error(what), assumption(assumption_), subject(subject_) {}
};

/// A vertex id was referenced that is not present in the graph.
struct UnknownVertexError : Error {
  using Error::Error;
};

/// Out-of-range argument to a generator or pipeline entry point.
struct BadParameterError : Error {
  using Error::Error;
};

/// Exact solver input exceeds the configured budget.
struct BudgetExceededError : Error {
  using Error::Error;
};

/// The augmentation loop exceeded its step budget without reaching
/// the at-most-one-unhappy-vertex state.
struct NonConvergenceError : Error {
  using Error::Error;
};

/// Requested chord endpoints are not at walk distance two along the face.
struct NotAChordError : Error {
  using Error::Error;
};

/// Requested chord would create a self-loop (equal endpoints).
struct WouldSelfLoopError : Error {
  using Error::Error;
};

/// satisfy_vertex / shift_unhappiness called on a vertex that is happy.
struct VertexAlreadyHappyError : Error {
  using Error::Error;
};

/// true_angles / satisfy_vertex require base degree at least two.
struct DegreeTooLowError : Error {
  using Error::Error;
};

/// No dummy edge at the vertex moves unhappiness to exactly the requested
/// neighbour (or a free angle still exists, so shifting is not applicable).
struct NoTransferEdgeError : Error {
  using Error::Error;
};

/// Input graph is not a simple plane triangulation.
struct NotATriangulationError : Error {
  using Error::Error;
};

/// Supplied vertex set is not independent.
struct NotIndependentError : Error {
  using Error::Error;
};

/// An internal invariant that the construction relies on was violated.
/// Thrown instead of silently producing wrong output.
struct InternalInvariantError : Error {
  using Error::Error;
};

}  // namespace facehit
