#pragma once

#include <stdexcept>
#include <string>

namespace oddramsey {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input parameters out of the documented range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

class MissingEdgeError : public Error {
 public:
  MissingEdgeError(int u, int v)
      : Error("edge {" + std::to_string(u) + "," + std::to_string(v) +
              "} is not in the graph"),
        u_(u),
        v_(v) {}
  int u() const { return u_; }
  int v() const { return v_; }

 private:
  int u_, v_;
};

class InvalidCycleError : public Error {
 public:
  using Error::Error;
};

/// A switch's base matching is not traversed the way a flip needs.
class SwitchNotTraversedError : public Error {
 public:
  using Error::Error;
};

class DegreeConditionError : public Error {
 public:
  using Error::Error;
};

class ThresholdError : public Error {
 public:
  using Error::Error;
};

/// A pigeonhole draw ran out of room, or a search that should succeed did not.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class SearchFailure : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal invariant is violated. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace oddramsey
