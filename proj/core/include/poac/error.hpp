#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poac {

enum class Errc {
  // PGM parsing
  MalformedMagic,
  MalformedHeader,
  MaxvalUnsupported,
  ZeroDimension,
  TruncatedPayload,
  // Transforms and shapes
  OddLength,
  OddDimension,
  LengthMismatch,
  DimensionMismatch,
  UnsupportedLevel,
  EmptyInput,
  InvalidArgument,
  DegenerateProjection,
  // Container
  BadMagic,
  BadVersion,
  BadCodecKind,
  BadWavelet,
  TruncatedBlob,
  SymbolOverrun,
  InvalidCodeTable,
  InvalidBlob,
  // Files
  Io,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the `Errc` codes so
/// callers (and tests) can tell parse errors apart without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace poac
