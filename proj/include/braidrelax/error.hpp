#pragma once

#include <stdexcept>
#include <string>

namespace braidrelax {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (bad token, bad JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input outside the valid range (generator index, strand count,
/// mismatched strand counts).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The relaxation engine found no admissible complexity-decreasing move.
/// Termination guarantees that this never happens, so it signals a defect in
/// the transition rules.
class EngineError : public Error {
 public:
  using Error::Error;
};

/// A coding violates an invariant that every reduced diagram satisfies.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of radius.
class SearchBoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidrelax
