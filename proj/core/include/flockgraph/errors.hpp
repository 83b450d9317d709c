#pragma once

#include <stdexcept>
#include <string>

namespace flock {

// Base class for every validation and precondition failure raised by this
// library. Catching flock::Error is enough to handle any domain error.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- graph construction / queries ----

class EmptyFlockError : public Error {
 public:
  using Error::Error;
};

class IntraFlockArcError : public Error {
 public:
  using Error::Error;
};

class DuplicatePairError : public Error {
 public:
  using Error::Error;
};

class MissingPairError : public Error {
 public:
  using Error::Error;
};

class UnknownChickenError : public Error {
 public:
  using Error::Error;
};

class UnknownFlockError : public Error {
 public:
  using Error::Error;
};

class SameFlockError : public Error {
 public:
  using Error::Error;
};

class DifferentFlocksError : public Error {
 public:
  using Error::Error;
};

class SameChickenError : public Error {
 public:
  using Error::Error;
};

// ---- duke analysis ----

class NonPositiveMError : public Error {
 public:
  using Error::Error;
};

// ---- constructive operations ----

class NotBiflockError : public Error {
 public:
  using Error::Error;
};

class PreconditionFailedError : public Error {
 public:
  using Error::Error;
};

class NotBalancedError : public Error {
 public:
  using Error::Error;
};

class FlockDominatedError : public Error {
 public:
  using Error::Error;
};

class SingleFlockError : public Error {
 public:
  using Error::Error;
};

class NotPeckedError : public Error {
 public:
  using Error::Error;
};

class TwoDukeExistsError : public Error {
 public:
  using Error::Error;
};

class BadTripleError : public Error {
 public:
  using Error::Error;
};

class HasTransmitterError : public Error {
 public:
  using Error::Error;
};

class NotNonEclipsedTwoDukeError : public Error {
 public:
  using Error::Error;
};

// ---- enumeration / verification ----

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class UnknownTheoremError : public Error {
 public:
  using Error::Error;
};

}  // namespace flock
