#include "stonepore/model_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stonepore/error.hpp"

namespace stonepore {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

void write_vector(std::ostream& out, const char* key, const FeatureVector& v) {
    out << key << ' ' << v.dimension() << ' ' << v.sample_count;
    for (double p : v.probs) {
        out << ' ' << format_double(p);
    }
    out << '\n';
}

class LineReader {
public:
    explicit LineReader(const std::string& text) : in_(text) {}

    // Next line split at the first space: returns the key, leaves the
    // remainder in `rest`.
    std::string expect(const std::string& key) {
        std::string line;
        if (!std::getline(in_, line)) {
            throw IoError("model file truncated before '" + key + "'");
        }
        const auto space = line.find(' ');
        const std::string head = line.substr(0, space);
        if (head != key) {
            throw IoError("model file: expected '" + key + "', found '" + head + "'");
        }
        return space == std::string::npos ? std::string() : line.substr(space + 1);
    }

private:
    std::istringstream in_;
};

int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(what);
        }
        return v;
    } catch (const std::exception&) {
        throw IoError(std::string("model file: malformed ") + what);
    }
}

double parse_double(const std::string& text, const char* what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + text.size() || text.empty()) {
        throw IoError(std::string("model file: malformed ") + what);
    }
    return v;
}

FeatureVector parse_vector(const std::string& text, const char* what) {
    std::istringstream fields(text);
    int dim = 0;
    long samples = 0;
    if (!(fields >> dim >> samples) || dim < 1 || samples < 0) {
        throw IoError(std::string("model file: malformed ") + what);
    }
    FeatureVector v;
    v.sample_count = samples;
    v.probs.reserve(static_cast<std::size_t>(dim));
    std::string token;
    for (int i = 0; i < dim; ++i) {
        if (!(fields >> token)) {
            throw IoError(std::string("model file: truncated ") + what);
        }
        v.probs.push_back(parse_double(token, what));
    }
    if (fields >> token) {
        throw IoError(std::string("model file: trailing data in ") + what);
    }
    return v;
}

} // namespace

std::string serialize_model(const ModelFile& file) {
    std::ostringstream out;
    out << "stonepore-model " << ModelFile::kFormatVersion << '\n';
    out << "stone_type " << file.stone_type << '\n';
    const DetectorConfig& cfg = file.model.config;
    out << "window_size " << cfg.window_size << '\n';
    out << "train_overlap " << cfg.train_overlap << '\n';
    out << "segment_length " << cfg.lbp.segment_length << '\n';
    out << "uniformity_threshold " << cfg.lbp.uniformity_threshold << '\n';
    if (cfg.retinex) {
        out << "retinex on\n";
        out << "sigma " << format_double(cfg.retinex->sigma) << '\n';
        out << "kernel_radius ";
        if (cfg.retinex->kernel_radius) {
            out << *cfg.retinex->kernel_radius;
        } else {
            out << "auto";
        }
        out << '\n';
    } else {
        out << "retinex off\n";
    }
    write_vector(out, "model_x", file.model.model_x);
    write_vector(out, "model_y", file.model.model_y);
    out << "threshold_x " << format_double(file.model.threshold_x) << '\n';
    out << "threshold_y " << format_double(file.model.threshold_y) << '\n';

    const std::string payload = out.str();
    char sum[32];
    std::snprintf(sum, sizeof(sum), "checksum %016llx\n",
                  static_cast<unsigned long long>(fnv1a64(payload)));
    return payload + sum;
}

ModelFile parse_model(const std::string& text) {
    const auto sum_pos = text.rfind("checksum ");
    if (sum_pos == std::string::npos ||
        (sum_pos != 0 && text[sum_pos - 1] != '\n')) {
        throw IoError("model file: missing checksum line");
    }
    const std::string payload = text.substr(0, sum_pos);
    std::string sum_line = text.substr(sum_pos + 9);
    if (!sum_line.empty() && sum_line.back() == '\n') {
        sum_line.pop_back();
    }
    char expected[17];
    std::snprintf(expected, sizeof(expected), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(payload)));
    if (sum_line != expected) {
        throw IoError("model file: checksum mismatch (file corrupted?)");
    }

    LineReader lines(payload);
    const int version = parse_int(lines.expect("stonepore-model"), "format version");
    if (version != ModelFile::kFormatVersion) {
        throw IoError("model file: unsupported format version " +
                      std::to_string(version));
    }

    ModelFile file;
    file.stone_type = lines.expect("stone_type");
    DetectorConfig& cfg = file.model.config;
    cfg.window_size = parse_int(lines.expect("window_size"), "window size");
    cfg.train_overlap = parse_int(lines.expect("train_overlap"), "train overlap");
    cfg.lbp.segment_length = parse_int(lines.expect("segment_length"), "segment length");
    cfg.lbp.uniformity_threshold =
        parse_int(lines.expect("uniformity_threshold"), "uniformity threshold");
    const std::string retinex = lines.expect("retinex");
    if (retinex == "on") {
        RetinexConfig rcfg;
        rcfg.sigma = parse_double(lines.expect("sigma"), "sigma");
        const std::string radius = lines.expect("kernel_radius");
        if (radius != "auto") {
            rcfg.kernel_radius = parse_int(radius, "kernel radius");
        }
        cfg.retinex = rcfg;
    } else if (retinex != "off") {
        throw IoError("model file: malformed retinex flag");
    }
    file.model.model_x = parse_vector(lines.expect("model_x"), "model_x");
    file.model.model_y = parse_vector(lines.expect("model_y"), "model_y");
    file.model.threshold_x = parse_double(lines.expect("threshold_x"), "threshold_x");
    file.model.threshold_y = parse_double(lines.expect("threshold_y"), "threshold_y");

    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw IoError(std::string("model file: invalid configuration: ") + e.what());
    }
    if (file.model.model_x.dimension() != cfg.lbp.label_space() ||
        file.model.model_y.dimension() != cfg.lbp.label_space()) {
        throw IoError("model file: feature dimension does not match segment length");
    }
    return file;
}

void save_model(const ModelFile& file, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << serialize_model(file);
    if (!out.flush()) {
        throw IoError("failed writing model to '" + path + "'");
    }
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open model file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_model(buffer.str());
    } catch (const IoError& e) {
        throw IoError(std::string(e.what()) + " [" + path + "]");
    }
}

} // namespace stonepore
