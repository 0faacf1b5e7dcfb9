#include "tit/pbm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "tit/errors.hpp"

namespace tit {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(const std::string& s) : s_(s) {}

  void skip_space_and_comments() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long read_int(const char* field) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("PBM header: malformed ") + field);
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 9) throw ParseError(std::string("PBM header: ") + field + " too large");
    return std::stol(digits);
  }

  std::size_t pos_ = 0;
  const std::string& s_;
};

}  // namespace

BinaryImage parse_pbm(const std::string& contents) {
  if (contents.size() < 2 || contents[0] != 'P' || (contents[1] != '1' && contents[1] != '4'))
    throw ParseError("PBM header: magic must be P1 or P4");
  const bool raw = contents[1] == '4';
  HeaderReader h(contents);
  h.pos_ = 2;
  const long width = h.read_int("width");
  const long height = h.read_int("height");
  if (width == 0 || height == 0) throw ParseError("PBM header: size 0 image");
  if (width != height)
    throw ParseError("PBM header: width " + std::to_string(width) + " differs from height " +
                     std::to_string(height) + " (non-square)");
  const int n = static_cast<int>(width);
  BinaryImage img(n);
  if (raw) {
    // Exactly one whitespace byte separates the header from the raster.
    if (h.pos_ >= contents.size() || !std::isspace(static_cast<unsigned char>(contents[h.pos_])))
      throw ParseError("PBM header: missing separator before pixel data");
    ++h.pos_;
    const std::size_t rowBytes = (static_cast<std::size_t>(n) + 7) / 8;
    if (contents.size() - h.pos_ < rowBytes * n) throw ParseError("PBM pixel data: truncated raster");
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        const auto byte = static_cast<unsigned char>(contents[h.pos_ + y * rowBytes + x / 8]);
        img.set(x, y, (byte >> (7 - x % 8)) & 1);
      }
    }
  } else {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        h.skip_space_and_comments();
        if (h.pos_ >= contents.size()) throw ParseError("PBM pixel data: truncated raster");
        const char c = contents[h.pos_++];
        if (c != '0' && c != '1') throw ParseError("PBM pixel data: unexpected character");
        img.set(x, y, c == '1');
      }
    }
  }
  return img;
}

BinaryImage read_pbm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pbm(ss.str());
}

std::string format_pbm(const BinaryImage& m, PbmFormat format) {
  const int n = m.n();
  std::string out = (format == PbmFormat::Raw ? "P4\n" : "P1\n") + std::to_string(n) + " " +
                    std::to_string(n) + "\n";
  if (format == PbmFormat::Raw) {
    const std::size_t rowBytes = (static_cast<std::size_t>(n) + 7) / 8;
    for (int y = 0; y < n; ++y) {
      std::string row(rowBytes, '\0');
      for (int x = 0; x < n; ++x)
        if (m.get(x, y)) row[x / 8] = static_cast<char>(row[x / 8] | (1 << (7 - x % 8)));
      out += row;
    }
  } else {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        if (x) out += ' ';
        out += m.get(x, y) ? '1' : '0';
      }
      out += '\n';
    }
  }
  return out;
}

void write_pbm(const BinaryImage& m, const std::string& path, PbmFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << format_pbm(m, format);
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace tit
