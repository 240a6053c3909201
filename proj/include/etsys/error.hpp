#pragma once

#include <stdexcept>
#include <string>

namespace etsys {

enum class ErrorKind {
  InvalidArgument,
  RankMismatch,
  NotReduced,
  InvalidHeight,
  NotSinkOrSource,
  OutsideWindow,
  NotCommuting,
  NotBraidPattern,
  WrongCarrier,
  NotLongestWord,
  ParityMismatch,
  NotPrimeSnakePair,
  NotPrimeSnake,
  NotInWindow,
  NotSnake,
  TooShort,
  MissingTableEntry,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace etsys
