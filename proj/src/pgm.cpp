#include "homsim/pgm.hpp"

#include <fstream>
#include <sstream>

namespace homsim {
namespace {

struct Cursor {
    const std::string& data;
    size_t pos = 0;

    bool eof() const { return pos >= data.size(); }

    void skip_space_and_comments() {
        while (!eof()) {
            char c = data[pos];
            if (c == '#') {
                while (!eof() && data[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
    }

    long next_int(const char* what) {
        skip_space_and_comments();
        if (eof()) throw PgmParseError(std::string("unexpected end of file reading ") + what, pos);
        size_t start = pos;
        long value = 0;
        bool any = false;
        while (!eof() && std::isdigit(static_cast<unsigned char>(data[pos]))) {
            value = value * 10 + (data[pos] - '0');
            if (value > 1000000000L) throw PgmParseError(std::string("value out of range for ") + what, start);
            ++pos;
            any = true;
        }
        if (!any) throw PgmParseError(std::string("expected integer for ") + what, pos);
        return value;
    }
};

}  // namespace

GrayImage parse_pgm(const std::string& bytes) {
    Cursor cur{bytes};
    if (bytes.size() < 2) throw PgmParseError("missing PGM magic", 0);
    const bool binary = bytes[0] == 'P' && bytes[1] == '5';
    const bool ascii = bytes[0] == 'P' && bytes[1] == '2';
    if (!binary && !ascii) throw PgmParseError("not a P2/P5 PGM file", 0);
    cur.pos = 2;

    GrayImage img;
    img.width = static_cast<int>(cur.next_int("width"));
    img.height = static_cast<int>(cur.next_int("height"));
    img.maxval = static_cast<int>(cur.next_int("maxval"));
    if (img.width <= 0 || img.height <= 0) throw PgmParseError("non-positive image dimensions", cur.pos);
    if (img.maxval != 255) throw PgmParseError("unsupported maxval (expected 255)", cur.pos);

    const size_t count = static_cast<size_t>(img.width) * img.height;
    img.pixels.resize(count);

    if (binary) {
        // Exactly one whitespace byte separates the header from raster data.
        if (cur.eof() || !std::isspace(static_cast<unsigned char>(bytes[cur.pos])))
            throw PgmParseError("missing separator before raster", cur.pos);
        ++cur.pos;
        if (bytes.size() - cur.pos < count)
            throw PgmParseError("truncated raster data", bytes.size());
        for (size_t i = 0; i < count; ++i)
            img.pixels[i] = static_cast<uint8_t>(bytes[cur.pos + i]);
    } else {
        for (size_t i = 0; i < count; ++i) {
            long v = cur.next_int("pixel");
            if (v > img.maxval) throw PgmParseError("pixel value exceeds maxval", cur.pos);
            img.pixels[i] = static_cast<uint8_t>(v);
        }
    }
    return img;
}

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open PGM file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pgm(buf.str());
}

void write_pgm(const std::string& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write PGM file: " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw std::runtime_error("failed writing PGM file: " + path);
}

}  // namespace homsim
