#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stonepore/gray_image.hpp"

namespace stonepore {

/// One quality band: porosity in [lower, upper) maps to `grade`.
struct GradeBand {
    std::string grade;
    double lower = 0.0;
    double upper = 0.0;
};

/// Per-stone grading rules: five contiguous half-open bands from
/// super-premium down to grade-3, plus an overflow grade for porosity
/// at or above the last upper bound.
struct GradeTable {
    std::string stone_type;
    std::vector<GradeBand> bands;
    std::string overflow_grade = "rejected";

    std::string grade(double porosity_percent) const;
};

/// Builds a table from the five band upper bounds (the first band
/// starts at 0). Bounds must be strictly increasing and positive.
GradeTable make_grade_table(const std::string& stone_type,
                            const std::vector<double>& upper_bounds);

/// The built-in tables for cream-travertine, orange-travertine and
/// hatchet stone.
std::vector<GradeTable> default_grade_tables();

/// nullptr when the stone type is not configured.
const GradeTable* find_grade_table(const std::vector<GradeTable>& tables,
                                   const std::string& stone_type);

/// Throws DomainError for an unknown stone type.
std::string grade(const std::vector<GradeTable>& tables,
                  const std::string& stone_type, double porosity_percent);

/// Config format: one record per line, `stone-type b1 b2 b3 b4 b5`
/// (five band upper bounds in percent); '#' starts a comment.
std::vector<GradeTable> load_grade_tables(std::istream& in);
std::vector<GradeTable> load_grade_tables(const std::string& path);

/// 100 x set pixels / total pixels.
double porosity_percent(const DefectPattern& pattern);

/// Window-verdict pixel threshold: max(1, ceil(0.01 * W^2)) — three
/// pixels for the default 16x16 window.
long porous_pixel_threshold(int window_size);

/// A window is porous when it contains at least
/// porous_pixel_threshold(W) marked pixels.
bool window_is_porous(const DefectPattern& pattern, Window origin, int window_size);

struct MetricsReport {
    long total_windows = 0;
    long true_positive = 0;   // porous windows detected (N_dd)
    long false_positive = 0;
    long true_negative = 0;   // healthy windows passed (N_cc)
    long false_negative = 0;

    double detection_rate() const; // 100 * (TN + TP) / total
    double sensitivity() const;    // TP / (TP + FN), 1 when no porous windows
    double specificity() const;    // TN / (TN + FP), 1 when no healthy windows
};

/// Reduces both patterns to window verdicts on the same non-overlapping
/// W-grid (same pixel-count rule for both sides) and tallies the
/// confusion counts. Throws DomainError on dimension mismatch.
MetricsReport evaluate(const DefectPattern& predicted, const DefectPattern& truth,
                       int window_size);

std::string to_text(const MetricsReport& report);
std::string to_machine(const MetricsReport& report);

} // namespace stonepore
