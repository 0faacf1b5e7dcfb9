#pragma once

#include <string>

#include "tit/image.hpp"

namespace tit {

// PBM (P1 ascii or P4 raw) for square images; "1" is black.
// Throws ParseError naming the offending field, IoError if the file
// cannot be opened.
BinaryImage read_pbm(const std::string& path);
BinaryImage parse_pbm(const std::string& contents);

enum class PbmFormat { Ascii, Raw };
void write_pbm(const BinaryImage& m, const std::string& path, PbmFormat format = PbmFormat::Raw);
std::string format_pbm(const BinaryImage& m, PbmFormat format = PbmFormat::Raw);

}  // namespace tit
