#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homsim {

/// Thrown on malformed PGM input; carries the byte offset of the failure.
class PgmParseError : public std::runtime_error {
public:
    PgmParseError(const std::string& what, size_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    size_t offset;
};

struct GrayImage {
    int width = 0;
    int height = 0;
    int maxval = 255;
    std::vector<uint8_t> pixels;  // row-major, row 0 at the top

    uint8_t at(int row, int col) const { return pixels[static_cast<size_t>(row) * width + col]; }
};

GrayImage read_pgm(const std::string& path);
GrayImage parse_pgm(const std::string& bytes);

/// Binary (P5) output, maxval 255.
void write_pgm(const std::string& path, const GrayImage& img);

}  // namespace homsim
