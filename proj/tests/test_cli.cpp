#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "stonepore/gray_image.hpp"
#include "stonepore/image_io.hpp"

using namespace stonepore;
namespace fs = std::filesystem;

namespace {

// Scratch directory torn down with the test case.
struct Scratch {
    fs::path dir;

    explicit Scratch(const std::string& name) : dir(fs::path("cli_scratch") / name) {
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }

    std::string path(const std::string& leaf) const { return (dir / leaf).string(); }
};

int run(const std::string& args, const std::string& stdout_path = "",
        const std::string& stderr_path = "") {
    std::string cmd = std::string("\"") + STONEPORE_CLI_PATH + "\" " + args;
    if (!stdout_path.empty()) {
        cmd += " > " + stdout_path;
    } else {
        cmd += " > /dev/null";
    }
    if (!stderr_path.empty()) {
        cmd += " 2> " + stderr_path;
    } else {
        cmd += " 2> /dev/null";
    }
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Value of a `key=value` line, or an empty string when absent.
std::string machine_value(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key + "=", 0) == 0) {
            return line.substr(key.size() + 1);
        }
    }
    return "";
}

} // namespace

TEST_CASE("synth-train-detect-evaluate round trip") {
    const Scratch s("pipeline");
    const std::string clean = s.path("clean.pgm");
    const std::string porous = s.path("porous.pgm");
    const std::string truth = s.path("truth.pgm");
    const std::string model = s.path("model.txt");
    const std::string pattern = s.path("pattern.pgm");

    CHECK(run("synth --kind periodic --width 256 --height 256 --seed 7 -o " + clean) == 0);
    CHECK(run("synth --kind periodic --width 256 --height 256 --seed 7 -o " + porous +
              " --truth " + truth + " --pores 3 --contrast 60 --machine",
              s.path("synth.out")) == 0);
    CHECK(slurp(s.path("synth.out")).find("pore=") != std::string::npos);

    CHECK(run("train " + clean + " cream-travertine -o " + model +
              " --no-normalize --machine",
              s.path("train.out")) == 0);
    const std::string train_out = slurp(s.path("train.out"));
    // The sawtooth texture is exactly self-similar window to window.
    CHECK(machine_value(train_out, "threshold_x") == "0");
    CHECK(machine_value(train_out, "threshold_y") == "0");
    CHECK(machine_value(train_out, "operators_per_window") == "144");

    CHECK(run("detect " + porous + " " + model + " --out-pattern " + pattern +
              " --machine",
              s.path("detect.out")) == 0);
    const std::string detect_out = slurp(s.path("detect.out"));
    const double porosity = std::stod(machine_value(detect_out, "porosity"));
    CHECK(porosity > 1.0); // three discs of radius >= 10 in a 256px frame
    CHECK(machine_value(detect_out, "grade") != "");

    CHECK(run("evaluate " + pattern + " " + truth + " --machine",
              s.path("eval.out")) == 0);
    const std::string eval_out = slurp(s.path("eval.out"));
    CHECK(std::stod(machine_value(eval_out, "detection_rate")) >= 95.0);
    CHECK(std::stod(machine_value(eval_out, "sensitivity")) >= 0.9);

    // The training image itself carries no pores at all.
    CHECK(run("detect " + clean + " " + model + " --machine",
              s.path("self.out")) == 0);
    const std::string self_out = slurp(s.path("self.out"));
    CHECK(machine_value(self_out, "porosity") == "0");
    CHECK(machine_value(self_out, "grade") == "super-premium");

    // Scoring the truth against itself is a perfect detection.
    CHECK(run("evaluate " + truth + " " + truth + " --machine",
              s.path("perfect.out")) == 0);
    CHECK(machine_value(slurp(s.path("perfect.out")), "detection_rate") == "100");
}

TEST_CASE("missing inputs exit with the io code") {
    const Scratch s("missing");
    CHECK(run("normalize " + s.path("absent.pgm") + " " + s.path("out.pgm")) == 2);
    CHECK(run("detect " + s.path("absent.pgm") + " " + s.path("absent.model")) == 2);
}

TEST_CASE("invalid parameters exit with the domain code") {
    const Scratch s("domain");
    const std::string img = s.path("img.pgm");
    CHECK(run("synth --width 64 --height 64 -o " + img) == 0);
    CHECK(run("train " + img + " cream-travertine -o " + s.path("m.txt") +
              " --window 4 --segment-length 8") == 1);
    CHECK(run("") == 1);            // subcommand required
    CHECK(run("--bogus-flag") == 1); // parse error
}

TEST_CASE("small windows trigger the operator count warning") {
    const Scratch s("warn");
    const std::string img = s.path("img.pgm");
    CHECK(run("synth --width 64 --height 64 -o " + img) == 0);
    CHECK(run("train " + img + " cream-travertine -o " + s.path("m.txt") +
              " --no-normalize --window 12",
              "", s.path("warn.err")) == 0);
    const std::string err = slurp(s.path("warn.err"));
    CHECK(err.find("warning") != std::string::npos);
    CHECK(err.find("100") != std::string::npos);
}

TEST_CASE("unknown stone types degrade to an ungraded report") {
    const Scratch s("unknown");
    const std::string img = s.path("img.pgm");
    const std::string model = s.path("m.txt");
    CHECK(run("synth --width 64 --height 64 -o " + img) == 0);
    CHECK(run("train " + img + " marble -o " + model + " --no-normalize") == 0);
    CHECK(run("detect " + img + " " + model + " --machine", s.path("out.txt"),
              s.path("err.txt")) == 0);
    CHECK(machine_value(slurp(s.path("out.txt")), "grade") == "");
    const std::string err = slurp(s.path("err.txt"));
    CHECK(err.find("marble") != std::string::npos);
}

TEST_CASE("a corrupted model is refused before any output is written") {
    const Scratch s("corrupt");
    const std::string img = s.path("img.pgm");
    const std::string model = s.path("m.txt");
    CHECK(run("synth --width 64 --height 64 -o " + img) == 0);
    CHECK(run("train " + img + " cream-travertine -o " + model + " --no-normalize") == 0);

    std::string text = slurp(model);
    const auto pos = text.find("window_size 16");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 14, "window_size 61");
    std::ofstream(model, std::ios::binary) << text;

    const std::string pattern = s.path("pattern.pgm");
    CHECK(run("detect " + img + " " + model + " --out-pattern " + pattern) == 2);
    CHECK_FALSE(fs::exists(pattern));
}

TEST_CASE("normalize maps a constant image to black") {
    const Scratch s("flat");
    const std::string in_path = s.path("flat.pgm");
    const std::string out_path = s.path("norm.pgm");
    write_pgm(GrayImage::filled(40, 30, 170.0), in_path);
    CHECK(run("normalize " + in_path + " " + out_path + " --sigma 4") == 0);
    const GrayImage out = read_image(out_path);
    REQUIRE(out.width() == 40);
    REQUIRE(out.height() == 30);
    for (const double v : out.data()) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("custom grade bands come from the config file") {
    const Scratch s("grades");
    const std::string img = s.path("img.pgm");
    const std::string model = s.path("m.txt");
    const std::string grades = s.path("grades.conf");
    CHECK(run("synth --width 64 --height 64 -o " + img) == 0);
    CHECK(run("train " + img + " slate -o " + model + " --no-normalize") == 0);
    std::ofstream(grades) << "slate 2 4 6 8 10\n";
    CHECK(run("detect " + img + " " + model + " --grades " + grades + " --machine",
              s.path("out.txt")) == 0);
    CHECK(machine_value(slurp(s.path("out.txt")), "grade") == "super-premium");
}

TEST_CASE("bench reports timings for both operators") {
    const Scratch s("bench");
    const std::string img = s.path("img.pgm");
    CHECK(run("synth --kind blotchy --width 96 --height 96 -o " + img) == 0);
    CHECK(run("bench " + img + " --repeats 1 --machine", s.path("out.txt")) == 0);
    const std::string out = slurp(s.path("out.txt"));
    CHECK(machine_value(out, "ratio") != "");
    CHECK(std::stod(machine_value(out, "seconds_1d")) > 0.0);
    CHECK(std::stod(machine_value(out, "seconds_2d")) > 0.0);
}
