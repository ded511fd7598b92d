#include "poac/error.hpp"

namespace poac {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedMagic: return "MalformedMagic";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::MaxvalUnsupported: return "MaxvalUnsupported";
    case Errc::ZeroDimension: return "ZeroDimension";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    case Errc::OddLength: return "OddLength";
    case Errc::OddDimension: return "OddDimension";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnsupportedLevel: return "UnsupportedLevel";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DegenerateProjection: return "DegenerateProjection";
    case Errc::BadMagic: return "BadMagic";
    case Errc::BadVersion: return "BadVersion";
    case Errc::BadCodecKind: return "BadCodecKind";
    case Errc::BadWavelet: return "BadWavelet";
    case Errc::TruncatedBlob: return "TruncatedBlob";
    case Errc::SymbolOverrun: return "SymbolOverrun";
    case Errc::InvalidCodeTable: return "InvalidCodeTable";
    case Errc::InvalidBlob: return "InvalidBlob";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace poac
