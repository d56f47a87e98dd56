#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xindlab {

enum class Err {
  NotAGroup,
  SizeMismatch,
  UnsupportedSize,
  IndexOutOfRange,
  UnknownId,
  FreenessViolated,
  GroupMismatch,
  NotInvariant,
  LoopEdge,
  BudgetExceeded,
  ValueOutOfRange,
  InvalidCertificate,
  InvalidDecomposition,
  EmptyPoset,
  NotDownwardClosed,
  NotCovering,
  IndexNotZero,
  WrongGroup,
  TooLarge,
  IdentityStar,
  GroupTooSmall,
  NotDistinct,
  BadParameters,
  NoFiniteIndex,
  ParseError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotAGroup: return "NotAGroup";
    case Err::SizeMismatch: return "SizeMismatch";
    case Err::UnsupportedSize: return "UnsupportedSize";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::UnknownId: return "UnknownId";
    case Err::FreenessViolated: return "FreenessViolated";
    case Err::GroupMismatch: return "GroupMismatch";
    case Err::NotInvariant: return "NotInvariant";
    case Err::LoopEdge: return "LoopEdge";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::ValueOutOfRange: return "ValueOutOfRange";
    case Err::InvalidCertificate: return "InvalidCertificate";
    case Err::InvalidDecomposition: return "InvalidDecomposition";
    case Err::EmptyPoset: return "EmptyPoset";
    case Err::NotDownwardClosed: return "NotDownwardClosed";
    case Err::NotCovering: return "NotCovering";
    case Err::IndexNotZero: return "IndexNotZero";
    case Err::WrongGroup: return "WrongGroup";
    case Err::TooLarge: return "TooLarge";
    case Err::IdentityStar: return "IdentityStar";
    case Err::GroupTooSmall: return "GroupTooSmall";
    case Err::NotDistinct: return "NotDistinct";
    case Err::BadParameters: return "BadParameters";
    case Err::NoFiniteIndex: return "NoFiniteIndex";
    case Err::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

  Error(Err kind, const std::string& msg, std::uint64_t nodes)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg),
        kind_(kind),
        nodes_(nodes) {}

  Err kind() const { return kind_; }

  // Nodes explored before a budget abort; zero for other kinds.
  std::uint64_t nodes() const { return nodes_; }

 private:
  Err kind_;
  std::uint64_t nodes_ = 0;
};

[[noreturn]] inline void raise(Err kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace xindlab
