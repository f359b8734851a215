#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace poschur {

// Base class for all library errors. `kind()` is a stable machine-readable
// tag used by the CLI's error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Relation input whose transitive closure would violate irreflexivity or
// antisymmetry.
class CycleError : public Error {
 public:
  explicit CycleError(const std::string& m) : Error("CycleError", m) {}
};

// A total order compatible with the poset was required but not available.
class NotNuioError : public Error {
 public:
  explicit NotNuioError(const std::string& m) : Error("NotNuioError", m) {}
};

// Operation requires a poset without an induced 3-chain-plus-isolated-element.
class NotThreeOneFreeError : public Error {
 public:
  explicit NotThreeOneFreeError(const std::string& m)
      : Error("NotThreeOneFreeError", m) {}
};

// A vertex set handed to the graph builder is not closed under the edge
// relation; the message names an escaping edge.
class NotClosedError : public Error {
 public:
  explicit NotClosedError(const std::string& m) : Error("NotClosedError", m) {}
};

// An element was given whose words do not all have the expected content.
class ContentMismatchError : public Error {
 public:
  explicit ContentMismatchError(const std::string& m)
      : Error("ContentMismatchError", m) {}
};

// A t-dependent coefficient appeared where only integers are allowed.
class TCoefficientError : public Error {
 public:
  explicit TCoefficientError(const std::string& m)
      : Error("TCoefficientError", m) {}
};

// A formal sum mixed words of different lengths where homogeneity is required.
class MixedDegreeError : public Error {
 public:
  explicit MixedDegreeError(const std::string& m)
      : Error("MixedDegreeError", m) {}
};

// A tableau or partition had the wrong shape for the requested operation.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& m) : Error("ShapeError", m) {}
};

// Malformed or out-of-range parameters (CLI input, diagram families, ...).
class ParamError : public Error {
 public:
  explicit ParamError(const std::string& m) : Error("ParamError", m) {}
};

// A quasisymmetric expression failed the symmetry test; carries a witness
// pair of compositions (rearrangements of each other) with unequal
// coefficients.
class NotSymmetricError : public Error {
 public:
  NotSymmetricError(const std::string& m, std::vector<int> witness_a,
                    std::vector<int> witness_b)
      : Error("NotSymmetric", m),
        witness_a_(std::move(witness_a)),
        witness_b_(std::move(witness_b)) {}
  const std::vector<int>& witness_a() const { return witness_a_; }
  const std::vector<int>& witness_b() const { return witness_b_; }

 private:
  std::vector<int> witness_a_;
  std::vector<int> witness_b_;
};

}  // namespace poschur
