#include "stonepore/grading.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "stonepore/error.hpp"

namespace stonepore {

namespace {

const char* const kGradeNames[5] = {"super-premium", "premium", "grade-1",
                                    "grade-2", "grade-3"};

} // namespace

std::string GradeTable::grade(double porosity) const {
    if (porosity < 0.0 || porosity > 100.0) {
        throw DomainError("porosity percentage must lie in [0, 100]");
    }
    for (const GradeBand& band : bands) {
        if (porosity >= band.lower && porosity < band.upper) {
            return band.grade;
        }
    }
    return overflow_grade;
}

GradeTable make_grade_table(const std::string& stone_type,
                            const std::vector<double>& upper_bounds) {
    if (stone_type.empty()) {
        throw DomainError("stone type name must not be empty");
    }
    if (upper_bounds.size() != 5) {
        throw DomainError("a grade table needs exactly five band bounds");
    }
    GradeTable table;
    table.stone_type = stone_type;
    double lower = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        if (!(upper_bounds[i] > lower)) {
            throw DomainError("grade band bounds must be strictly increasing and positive");
        }
        table.bands.push_back(GradeBand{kGradeNames[i], lower, upper_bounds[i]});
        lower = upper_bounds[i];
    }
    return table;
}

std::vector<GradeTable> default_grade_tables() {
    return {
        make_grade_table("cream-travertine", {5, 10, 15, 20, 25}),
        make_grade_table("orange-travertine", {3, 6, 10, 13, 16}),
        make_grade_table("hatchet", {7, 14, 21, 28, 35}),
    };
}

const GradeTable* find_grade_table(const std::vector<GradeTable>& tables,
                                   const std::string& stone_type) {
    for (const GradeTable& t : tables) {
        if (t.stone_type == stone_type) {
            return &t;
        }
    }
    return nullptr;
}

std::string grade(const std::vector<GradeTable>& tables,
                  const std::string& stone_type, double porosity) {
    const GradeTable* table = find_grade_table(tables, stone_type);
    if (table == nullptr) {
        throw DomainError("unknown stone type '" + stone_type + "'");
    }
    return table->grade(porosity);
}

std::vector<GradeTable> load_grade_tables(std::istream& in) {
    std::vector<GradeTable> tables;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) {
            line.erase(comment);
        }
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name)) {
            continue; // blank or comment-only line
        }
        std::vector<double> bounds;
        double b = 0.0;
        while (fields >> b) {
            bounds.push_back(b);
        }
        if (!fields.eof() || bounds.size() != 5) {
            throw IoError("grade config line " + std::to_string(line_no) +
                          ": expected 'stone-type b1 b2 b3 b4 b5'");
        }
        if (find_grade_table(tables, name) != nullptr) {
            throw IoError("grade config line " + std::to_string(line_no) +
                          ": duplicate stone type '" + name + "'");
        }
        try {
            tables.push_back(make_grade_table(name, bounds));
        } catch (const DomainError& e) {
            throw IoError("grade config line " + std::to_string(line_no) + ": " +
                          e.what());
        }
    }
    if (tables.empty()) {
        throw IoError("grade config defines no stone types");
    }
    return tables;
}

std::vector<GradeTable> load_grade_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open grade config '" + path + "'");
    }
    try {
        return load_grade_tables(in);
    } catch (const IoError& e) {
        throw IoError(std::string(e.what()) + " [" + path + "]");
    }
}

double porosity_percent(const DefectPattern& pattern) {
    const long total = static_cast<long>(pattern.width) * pattern.height;
    if (total <= 0) {
        throw DomainError("defect pattern is empty");
    }
    return 100.0 * static_cast<double>(pattern.set_pixel_count()) /
           static_cast<double>(total);
}

long porous_pixel_threshold(int window_size) {
    if (window_size < 1) {
        throw DomainError("window size must be positive");
    }
    const double hundredth = 0.01 * window_size * window_size;
    return std::max(1L, static_cast<long>(std::ceil(hundredth)));
}

bool window_is_porous(const DefectPattern& pattern, Window origin, int window_size) {
    const long threshold = porous_pixel_threshold(window_size);
    long count = 0;
    for (int r = 0; r < window_size; ++r) {
        for (int c = 0; c < window_size; ++c) {
            count += pattern.at(origin.row0 + r, origin.col0 + c) ? 1 : 0;
            if (count >= threshold) {
                return true;
            }
        }
    }
    return false;
}

double MetricsReport::detection_rate() const {
    if (total_windows == 0) {
        throw DomainError("no windows evaluated");
    }
    return 100.0 * static_cast<double>(true_negative + true_positive) /
           static_cast<double>(total_windows);
}

namespace {

double safe_ratio(long num, long denom) {
    // Vacuous case: no windows of this class exist, nothing was missed.
    return denom == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(denom);
}

} // namespace

double MetricsReport::sensitivity() const {
    return safe_ratio(true_positive, true_positive + false_negative);
}

double MetricsReport::specificity() const {
    return safe_ratio(true_negative, true_negative + false_positive);
}

MetricsReport evaluate(const DefectPattern& predicted, const DefectPattern& truth,
                       int window_size) {
    if (predicted.width != truth.width || predicted.height != truth.height) {
        throw DomainError("predicted and ground-truth patterns differ in size");
    }
    const WindowGrid grid =
        make_window_grid(truth.width, truth.height, window_size, 0);
    MetricsReport report;
    report.total_windows = static_cast<long>(grid.windows.size());
    for (const Window& w : grid.windows) {
        const bool actual = window_is_porous(truth, w, window_size);
        const bool flagged = window_is_porous(predicted, w, window_size);
        if (actual) {
            (flagged ? report.true_positive : report.false_negative) += 1;
        } else {
            (flagged ? report.false_positive : report.true_negative) += 1;
        }
    }
    return report;
}

std::string to_text(const MetricsReport& r) {
    std::ostringstream out;
    out << "windows         " << r.total_windows << "\n"
        << "true positive   " << r.true_positive << "\n"
        << "false positive  " << r.false_positive << "\n"
        << "true negative   " << r.true_negative << "\n"
        << "false negative  " << r.false_negative << "\n";
    out.precision(4);
    out << std::fixed;
    out << "detection rate  " << r.detection_rate() << " %\n"
        << "sensitivity     " << r.sensitivity() << "\n"
        << "specificity     " << r.specificity() << "\n";
    return out.str();
}

std::string to_machine(const MetricsReport& r) {
    std::ostringstream out;
    out.precision(17);
    out << "windows=" << r.total_windows << "\n"
        << "tp=" << r.true_positive << "\n"
        << "fp=" << r.false_positive << "\n"
        << "tn=" << r.true_negative << "\n"
        << "fn=" << r.false_negative << "\n"
        << "detection_rate=" << r.detection_rate() << "\n"
        << "sensitivity=" << r.sensitivity() << "\n"
        << "specificity=" << r.specificity() << "\n";
    return out.str();
}

} // namespace stonepore
