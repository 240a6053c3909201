#include "etsys/error.hpp"

namespace etsys {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::InvalidHeight: return "InvalidHeight";
    case ErrorKind::NotSinkOrSource: return "NotSinkOrSource";
    case ErrorKind::OutsideWindow: return "OutsideWindow";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotBraidPattern: return "NotBraidPattern";
    case ErrorKind::WrongCarrier: return "WrongCarrier";
    case ErrorKind::NotLongestWord: return "NotLongestWord";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::NotPrimeSnakePair: return "NotPrimeSnakePair";
    case ErrorKind::NotPrimeSnake: return "NotPrimeSnake";
    case ErrorKind::NotInWindow: return "NotInWindow";
    case ErrorKind::NotSnake: return "NotSnake";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::MissingTableEntry: return "MissingTableEntry";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace etsys
