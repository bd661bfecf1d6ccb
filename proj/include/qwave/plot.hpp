#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwave {

/// File problems and malformed or empty CSV input.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct plot_meta {
    std::string title = "Ratio R vs. x";
    std::string x_label = "x (m)";
    std::string y_label = "R";
};

struct csv_series {
    std::string x_name;
    std::string y_name;
    std::vector<double> x;
    std::vector<double> y;
};

/// Two-column CSV with a header line. Throws io_error when the file cannot
/// be read, is malformed, or holds no data rows.
[[nodiscard]] csv_series read_series_csv(const std::filesystem::path& csv_path);

/// Writes a standalone matplotlib script with the data embedded; running it
/// saves a PNG next to the script.
void emit_plot_script(const std::filesystem::path& csv_path, const plot_meta& meta,
                      const std::filesystem::path& script_path);

/// Writes the curve directly as an SVG polyline.
void emit_plot_svg(const std::filesystem::path& csv_path, const plot_meta& meta, const std::filesystem::path& svg_path);

/// "1e-9" style, with U+2212 for minus signs: 1e-9 -> "1e−9", 0.001 -> "1e−3".
[[nodiscard]] std::string compact_number(double v);

} // namespace qwave
