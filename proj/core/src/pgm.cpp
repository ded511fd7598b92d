#include "poac/pgm.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "poac/error.hpp"

namespace poac {

namespace {

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class HeaderCursor {
 public:
  explicit HeaderCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Unsigned decimal token preceded by whitespace/comments.
  std::uint64_t read_number(const char* what) {
    const std::size_t before = pos_;
    skip_space_and_comments();
    if (pos_ == before) {
      throw Error(Errc::MalformedHeader, std::string("expected whitespace before ") + what);
    }
    if (pos_ >= bytes_.size()) {
      throw Error(Errc::MalformedHeader, std::string("header ends before ") + what);
    }
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      if (value > (std::numeric_limits<std::uint32_t>::max() - 9) / 10) {
        throw Error(Errc::MalformedHeader, std::string(what) + " is too large");
      }
      value = value * 10 + (bytes_[pos_] - '0');
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      throw Error(Errc::MalformedHeader, std::string("expected a number for ") + what);
    }
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(Errc::MalformedMagic, "not a binary PGM (expected \"P5\")");
  }
  HeaderCursor cur(bytes);
  cur.advance(2);
  const auto cols = cur.read_number("width");
  const auto rows = cur.read_number("height");
  const auto maxval = cur.read_number("maxval");
  if (cols == 0 || rows == 0) {
    throw Error(Errc::ZeroDimension,
                "zero dimension " + std::to_string(cols) + "x" + std::to_string(rows));
  }
  if (maxval != 255) {
    throw Error(Errc::MaxvalUnsupported, "maxval " + std::to_string(maxval) + " (only 255)");
  }
  if (cur.pos() >= bytes.size() || !is_space(bytes[cur.pos()])) {
    throw Error(Errc::MalformedHeader, "missing whitespace after maxval");
  }
  cur.advance(1);

  const std::size_t count = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  const std::size_t available = bytes.size() - cur.pos();
  if (available < count) {
    throw Error(Errc::TruncatedPayload, "raster needs " + std::to_string(count) +
                                            " bytes, found " + std::to_string(available));
  }
  auto raster = bytes.subspan(cur.pos(), count);
  return Image(rows, cols, std::vector<std::uint8_t>(raster.begin(), raster.end()));
}

std::vector<std::uint8_t> write_pgm(const Image& image) {
  const std::string header =
      "P5\n" + std::to_string(image.cols()) + " " + std::to_string(image.rows()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + image.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), image.pixels().begin(), image.pixels().end());
  return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::Io, "read failed: " + path.string());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::Io, "write failed: " + path.string());
}

Image read_pgm_file(const std::filesystem::path& path) {
  return read_pgm(read_file_bytes(path));
}

void write_pgm_file(const std::filesystem::path& path, const Image& image) {
  write_file_bytes(path, write_pgm(image));
}

}  // namespace poac
