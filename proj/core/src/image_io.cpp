#include "stonepore/image_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "stonepore/error.hpp"

namespace stonepore {

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in, const std::string& name) {
    std::string tok;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    if (tok.empty()) {
        throw IoError(name + ": truncated header");
    }
    return tok;
}

int parse_header_int(std::istream& in, const std::string& name, const char* what) {
    const std::string tok = next_token(in, name);
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw IoError(name + ": malformed " + what + " in header");
    }
}

} // namespace

GrayImage read_image(std::istream& in, const std::string& name) {
    const std::string magic = next_token(in, name);
    if (magic != "P5" && magic != "P6") {
        throw IoError(name + ": unsupported format '" + magic +
                      "' (expected binary PGM P5 or PPM P6)");
    }
    const int width = parse_header_int(in, name, "width");
    const int height = parse_header_int(in, name, "height");
    const int maxval = parse_header_int(in, name, "maxval");
    if (width < 1 || height < 1) {
        throw IoError(name + ": invalid dimensions");
    }
    if (maxval < 1 || maxval > 255) {
        throw IoError(name + ": unsupported maxval " + std::to_string(maxval));
    }
    // The header is terminated by exactly one whitespace byte, already
    // consumed by the token reader.
    const std::size_t pixels = static_cast<std::size_t>(width) * height;
    const std::size_t samples = magic == "P6" ? pixels * 3 : pixels;
    std::vector<unsigned char> raw(samples);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(samples));
    if (static_cast<std::size_t>(in.gcount()) != samples) {
        throw IoError(name + ": truncated pixel data");
    }
    std::vector<double> data(pixels);
    if (magic == "P5") {
        for (std::size_t i = 0; i < pixels; ++i) {
            data[i] = raw[i];
        }
    } else {
        for (std::size_t i = 0; i < pixels; ++i) {
            const double r = raw[3 * i], g = raw[3 * i + 1], b = raw[3 * i + 2];
            data[i] = std::round(0.299 * r + 0.587 * g + 0.114 * b);
        }
    }
    return GrayImage(width, height, std::move(data));
}

GrayImage read_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return read_image(in, path);
}

std::uint8_t quantize_sample(double v) {
    const double r = std::round(v);
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

void write_pgm(const GrayImage& img, std::ostream& out) {
    out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
    std::vector<unsigned char> raw(img.data().size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] = quantize_sample(img.data()[i]);
    }
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
}

void write_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_pgm(img, out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

void write_pattern_pgm(const DefectPattern& pattern, const std::string& path) {
    std::vector<double> data(pattern.mask.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        data[i] = pattern.mask[i] ? 255.0 : 0.0;
    }
    write_pgm(GrayImage(pattern.width, pattern.height, std::move(data)), path);
}

DefectPattern read_pattern_pgm(const std::string& path) {
    const GrayImage img = read_image(path);
    DefectPattern p = DefectPattern::zeros(img.width(), img.height());
    for (std::size_t i = 0; i < img.data().size(); ++i) {
        p.mask[i] = img.data()[i] >= 128.0 ? 1 : 0;
    }
    return p;
}

} // namespace stonepore
