#pragma once

#include <stdexcept>
#include <string>

namespace powercount {

// One exception type per contract-level failure; what() carries the detail.
struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct NonPrime : Error {
  using Error::Error;
};
struct BoundExceeded : Error {
  using Error::Error;
};
struct DivByZero : Error {
  using Error::Error;
};
struct CtxMismatch : Error {
  using Error::Error;
};
struct ZeroElement : Error {
  using Error::Error;
};
struct ConstantInput : Error {
  using Error::Error;
};
struct ModByConstant : Error {
  using Error::Error;
};
struct ZeroConstantTerm : Error {
  using Error::Error;
};
struct Reducible : Error {
  using Error::Error;
};
struct XInput : Error {
  using Error::Error;
};
struct NotIrreducible : Error {
  using Error::Error;
};
struct PCharConflict : Error {
  using Error::Error;
};
struct DegreeMismatch : Error {
  using Error::Error;
};
struct AlreadyMPower : Error {
  using Error::Error;
};
struct NoRepresentative : Error {
  using Error::Error;
};
struct ParamDomain : Error {
  using Error::Error;
};
struct NonUnitConstant : Error {
  using Error::Error;
};
struct InvalidDatum : Error {
  using Error::Error;
};
struct OddCharRequired : Error {
  using Error::Error;
};
struct NotInGroup : Error {
  using Error::Error;
};
struct ClosureIncomplete : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace powercount
