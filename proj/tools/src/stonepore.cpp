#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stonepore/bench.hpp"
#include "stonepore/detector.hpp"
#include "stonepore/error.hpp"
#include "stonepore/grading.hpp"
#include "stonepore/image_io.hpp"
#include "stonepore/model_io.hpp"
#include "stonepore/retinex.hpp"
#include "stonepore/synth.hpp"

namespace {

using namespace stonepore;

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct NormalizeArgs {
    std::string input;
    std::string output;
    double sigma = 30.0;
    int kernel_radius = 0; // 0 = derive from sigma
};

int cmd_normalize(const NormalizeArgs& args) {
    RetinexConfig cfg;
    cfg.sigma = args.sigma;
    if (args.kernel_radius > 0) {
        cfg.kernel_radius = args.kernel_radius;
    }
    const GrayImage img = read_image(args.input);
    write_pgm(ssr_normalize(img, cfg), args.output);
    return 0;
}

struct TrainArgs {
    std::string input;
    std::string stone_type;
    std::string model_path;
    int segment_length = 8;
    int window = 16;
    int train_overlap = 8;
    bool no_normalize = false;
    double sigma = 30.0;
    bool machine = false;
};

int cmd_train(const TrainArgs& args) {
    DetectorConfig cfg;
    cfg.window_size = args.window;
    cfg.train_overlap = args.train_overlap;
    cfg.lbp = Lbp1dConfig::with_length(args.segment_length);
    if (!args.no_normalize) {
        RetinexConfig rcfg;
        rcfg.sigma = args.sigma;
        cfg.retinex = rcfg;
    }
    cfg.validate();

    if (cfg.operators_per_window() < 100) {
        std::cerr << "warning: only " << cfg.operators_per_window()
                  << " operator placements per window and orientation; "
                     "at least 100 are recommended — enlarge the window "
                     "or shorten the segment\n";
    }

    const GrayImage img = read_image(args.input);
    ModelFile file;
    file.stone_type = args.stone_type;
    file.model = train(img, cfg);
    save_model(file, args.model_path);

    if (args.machine) {
        std::cout << "threshold_x=" << format_g(file.model.threshold_x) << "\n"
                  << "threshold_y=" << format_g(file.model.threshold_y) << "\n"
                  << "operators_per_window=" << cfg.operators_per_window() << "\n"
                  << "model=" << args.model_path << "\n";
    } else {
        std::cout << "trained on " << args.input << " (" << img.width() << "x"
                  << img.height() << ")\n"
                  << "T_x = " << format_g(file.model.threshold_x) << "\n"
                  << "T_y = " << format_g(file.model.threshold_y) << "\n"
                  << "model written to " << args.model_path << "\n";
    }
    return 0;
}

struct DetectArgs {
    std::string input;
    std::string model_path;
    std::string out_pattern;
    std::string grades_path;
    bool report = false;
    bool machine = false;
};

int cmd_detect(const DetectArgs& args) {
    const ModelFile file = load_model(args.model_path);
    const GrayImage img = read_image(args.input);
    const DetectionResult result = detect(img, file.model);

    if (!args.out_pattern.empty()) {
        write_pattern_pgm(result.pattern, args.out_pattern);
    }

    const double porosity = porosity_percent(result.pattern);
    const std::vector<GradeTable> tables = args.grades_path.empty()
                                               ? default_grade_tables()
                                               : load_grade_tables(args.grades_path);
    const GradeTable* table = find_grade_table(tables, file.stone_type);

    if (args.machine) {
        std::cout << "porosity=" << format_g(porosity) << "\n";
        if (table != nullptr) {
            std::cout << "grade=" << table->grade(porosity) << "\n";
        }
        if (args.report) {
            for (const WindowStats& w : result.windows) {
                std::cout << "window=" << w.origin.row0 << "," << w.origin.col0
                          << "," << format_g(w.divergence_x) << ","
                          << format_g(w.divergence_y) << ","
                          << (w.porous ? "porous" : "healthy") << "\n";
            }
        }
    } else {
        std::printf("porosity: %.2f %%\n", porosity);
        if (table != nullptr) {
            std::cout << "grade: " << table->grade(porosity) << "\n";
        }
        if (args.report) {
            std::printf("%6s %6s %12s %12s  verdict\n", "row", "col", "D_x", "D_y");
            for (const WindowStats& w : result.windows) {
                std::printf("%6d %6d %12.6f %12.6f  %s\n", w.origin.row0,
                            w.origin.col0, w.divergence_x, w.divergence_y,
                            w.porous ? "porous" : "healthy");
            }
        }
    }
    if (table == nullptr) {
        std::cerr << "warning: no grade bands configured for stone type '"
                  << file.stone_type << "'; grade not reported\n";
    }
    return 0;
}

struct EvaluateArgs {
    std::string pattern_path;
    std::string truth_path;
    int window = 16;
    bool machine = false;
};

int cmd_evaluate(const EvaluateArgs& args) {
    const DefectPattern predicted = read_pattern_pgm(args.pattern_path);
    const DefectPattern truth = read_pattern_pgm(args.truth_path);
    const MetricsReport report = evaluate(predicted, truth, args.window);
    std::cout << (args.machine ? to_machine(report) : to_text(report));
    return 0;
}

struct SynthArgs {
    std::string kind = "periodic";
    int width = 512;
    int height = 512;
    std::uint64_t seed = 1;
    std::string out_image;
    std::string out_truth;
    int pores = 0;
    double min_radius = 10.0;
    double max_radius = 20.0;
    double contrast = 60.0;
    bool machine = false;
};

int cmd_synth(const SynthArgs& args) {
    const TextureKind kind = args.kind == "periodic" ? TextureKind::kPeriodic
                                                     : TextureKind::kBlotchy;
    const GrayImage texture = synth_texture(kind, args.width, args.height, args.seed);

    PoreSpec spec;
    spec.count = args.pores;
    spec.min_radius = args.min_radius;
    spec.max_radius = args.max_radius;
    spec.contrast = args.contrast;
    SynthResult result = inject_pores(texture, spec, args.seed + 0x9e3779b97f4a7c15ull);

    write_pgm(result.image, args.out_image);
    if (!args.out_truth.empty()) {
        write_pattern_pgm(result.truth, args.out_truth);
    }
    for (const Pore& p : result.pores) {
        if (args.machine) {
            std::cout << "pore=" << format_g(p.row) << "," << format_g(p.col)
                      << "," << format_g(p.radius) << "\n";
        } else {
            std::printf("pore at (%.2f, %.2f), radius %.2f\n", p.row, p.col,
                        p.radius);
        }
    }
    if (args.machine) {
        std::cout << "image=" << args.out_image << "\n";
    } else {
        std::cout << "texture written to " << args.out_image << "\n";
    }
    return 0;
}

struct BenchArgs {
    std::string input;
    int repeats = 5;
    int segment_length = 8;
    int neighbors = 8;
    double radius = 1.0;
    bool machine = false;
};

int cmd_bench(const BenchArgs& args) {
    const GrayImage img = read_image(args.input);
    const Lbp1dConfig cfg1d = Lbp1dConfig::with_length(args.segment_length);
    Lbp2dConfig cfg2d;
    cfg2d.neighbors = args.neighbors;
    cfg2d.radius = args.radius;
    cfg2d.uniformity_threshold = args.neighbors / 4;
    const LabelBenchResult r = run_label_benchmark(img, cfg1d, cfg2d, args.repeats);

    if (args.machine) {
        std::cout << "seconds_1d=" << format_g(r.seconds_1d) << "\n"
                  << "seconds_2d=" << format_g(r.seconds_2d) << "\n"
                  << "ratio=" << format_g(r.ratio()) << "\n"
                  << "pixels=" << r.interior_pixels << "\n";
    } else {
        std::printf("1D (L=%d, both orientations): %10.6f s\n", args.segment_length,
                    r.seconds_1d);
        std::printf("2D (P=%d, R=%.2f, circular):  %10.6f s\n", args.neighbors,
                    args.radius, r.seconds_2d);
        std::printf("ratio 1D/2D: %.3f over %ld pixels (best of %d)\n", r.ratio(),
                    r.interior_pixels, r.repeats);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Surface porosity detection and grading for textured stone images"};
    app.require_subcommand(1);

    NormalizeArgs normalize_args;
    CLI::App* normalize = app.add_subcommand(
        "normalize", "Retinex-normalize an image and write it as PGM");
    normalize->add_option("input", normalize_args.input, "input image (PGM/PPM)")
        ->required();
    normalize->add_option("output", normalize_args.output, "output PGM path")
        ->required();
    normalize->add_option("--sigma", normalize_args.sigma,
                          "Gaussian surround scale");
    normalize->add_option("--kernel-radius", normalize_args.kernel_radius,
                          "explicit kernel half-width (default 3*sigma)");

    TrainArgs train_args;
    CLI::App* train = app.add_subcommand(
        "train", "Learn a reference model from a defect-free image");
    train->add_option("image", train_args.input, "defect-free training image")
        ->required();
    train->add_option("stone-type", train_args.stone_type,
                      "stone type the model is for (selects grade bands)")
        ->required();
    train->add_option("-o,--out", train_args.model_path, "model file to write")
        ->required();
    train->add_option("--segment-length", train_args.segment_length,
                      "1D operator length L");
    train->add_option("--window", train_args.window, "analysis window size W");
    train->add_option("--train-overlap", train_args.train_overlap,
                      "overlap between training windows");
    train->add_flag("--no-normalize", train_args.no_normalize,
                    "skip retinex preprocessing");
    train->add_option("--sigma", train_args.sigma, "retinex Gaussian scale");
    train->add_flag("--machine", train_args.machine, "key=value output");

    DetectArgs detect_args;
    CLI::App* detect = app.add_subcommand(
        "detect", "Find porous windows in an image using a trained model");
    detect->add_option("image", detect_args.input, "image to analyze")->required();
    detect->add_option("model", detect_args.model_path, "trained model file")
        ->required();
    detect->add_option("--out-pattern", detect_args.out_pattern,
                       "write the binary defect pattern here (PGM)");
    detect->add_option("--grades", detect_args.grades_path,
                       "grade band config (default: built-in tables)");
    detect->add_flag("--report", detect_args.report,
                     "print per-window divergences");
    detect->add_flag("--machine", detect_args.machine, "key=value output");

    EvaluateArgs evaluate_args;
    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "Score a defect pattern against a ground-truth mask");
    evaluate->add_option("pattern", evaluate_args.pattern_path,
                         "predicted defect pattern (PGM)")
        ->required();
    evaluate->add_option("truth", evaluate_args.truth_path,
                         "ground-truth mask (PGM)")
        ->required();
    evaluate->add_option("--window", evaluate_args.window,
                         "evaluation window size");
    evaluate->add_flag("--machine", evaluate_args.machine, "key=value output");

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand(
        "synth", "Generate a synthetic stone texture with optional pores");
    synth->add_option("--kind", synth_args.kind, "texture kind")
        ->check(CLI::IsMember({"periodic", "blotchy"}));
    synth->add_option("--width", synth_args.width, "image width");
    synth->add_option("--height", synth_args.height, "image height");
    synth->add_option("--seed", synth_args.seed, "RNG seed");
    synth->add_option("-o,--out", synth_args.out_image, "output image (PGM)")
        ->required();
    synth->add_option("--truth", synth_args.out_truth,
                      "also write the ground-truth mask here");
    synth->add_option("--pores", synth_args.pores, "number of disc pores");
    synth->add_option("--min-radius", synth_args.min_radius, "smallest pore radius");
    synth->add_option("--max-radius", synth_args.max_radius, "largest pore radius");
    synth->add_option("--contrast", synth_args.contrast,
                      "pore darkness below the texture minimum");
    synth->add_flag("--machine", synth_args.machine, "key=value output");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand(
        "bench", "Compare 1D and 2D labeling wall time on an image");
    bench->add_option("image", bench_args.input, "image to label")->required();
    bench->add_option("--repeats", bench_args.repeats, "timing repetitions");
    bench->add_option("--segment-length", bench_args.segment_length,
                      "1D operator length L");
    bench->add_option("--neighbors", bench_args.neighbors, "2D neighbor count P");
    bench->add_option("--radius", bench_args.radius, "2D circle radius R");
    bench->add_flag("--machine", bench_args.machine, "key=value output");

    try {
        app.parse(argc, argv);
        if (normalize->parsed()) return cmd_normalize(normalize_args);
        if (train->parsed()) return cmd_train(train_args);
        if (detect->parsed()) return cmd_detect(detect_args);
        if (evaluate->parsed()) return cmd_evaluate(evaluate_args);
        if (synth->parsed()) return cmd_synth(synth_args);
        if (bench->parsed()) return cmd_bench(bench_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const stonepore::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const stonepore::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
