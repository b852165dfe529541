#pragma once

#include <stdexcept>
#include <string>

namespace kshift {

enum class ErrKind {
  UnknownVertex,
  UnknownEdge,
  ColorOutOfRange,
  DuplicateId,
  DuplicateSquareKey,
  NotComposable,
  DegreeOutOfRange,
  IncompleteSquares,   // rewriting needed a square the table does not provide
  AmbiguousSquares,    // rewriting found more than one candidate square
  LengthMismatch,
  UnknownLetter,
  InadmissibleWord,
  TooShort,
  InadmissibleIntermediate,
  WordTooShort,
  EmptyAlphabet,
  OracleInconsistent,
  NotComposableGerm,
  UnitsMismatch,
  Parse,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace kshift
