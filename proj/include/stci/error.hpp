#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stci {

enum class Errc {
  MixedRings,
  NotBezout,
  ZeroPolynomial,
  ZeroIdeal,
  NotPrime,
  UnsupportedIdealShape,
  NotInIdeal,
  SubringEscape,
  CharacteristicZero,
  ElementActuallyInRing,
  DegreeObstruction,
  NotRadicalEqual,
  TorsionBoundExceeded,
  VerificationFailed,
  NotProvenAtBound,
  CapTooLarge,
  SyntaxError,
  UnknownRing,
  UnknownVerb,
  BadArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(Errc code, std::string msg, std::size_t offset = npos)
      : std::runtime_error(std::move(msg)), code_(code), offset_(offset) {}

  Errc code() const noexcept { return code_; }
  /// Byte offset into the offending input; meaningful for SyntaxError.
  std::size_t offset() const noexcept { return offset_; }

private:
  Errc code_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg,
                              std::size_t offset = Error::npos) {
  throw Error(c, msg, offset);
}

}  // namespace stci
