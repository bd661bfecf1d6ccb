#include <qwave/plot.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qwave {

namespace {

std::string format_g17(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string python_string(const std::string& s)
{
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out + '"';
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

double parse_double(std::string_view field, const std::filesystem::path& path, std::size_t line)
{
    while (!field.empty() && (field.back() == '\r' || field.back() == ' '))
        field.remove_suffix(1);
    while (!field.empty() && field.front() == ' ')
        field.remove_prefix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || end != field.data() + field.size())
        throw io_error(path.string() + ":" + std::to_string(line) + ": not a number: '" + std::string(field) + "'");
    return v;
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot write " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path)
{
    out.flush();
    if (!out)
        throw io_error("write to " + path.string() + " failed");
}

} // namespace

std::string compact_number(double v)
{
    char buf[32];
    std::string s;
    const double a = std::abs(v);
    if (v != 0.0 && (a < 1e-2 || a >= 1e5)) {
        std::snprintf(buf, sizeof buf, "%.5e", v);
        const std::string text = buf;
        const auto e = text.find('e');
        std::string mant = text.substr(0, e);
        mant.erase(mant.find_last_not_of('0') + 1);
        if (mant.back() == '.')
            mant.pop_back();
        s = mant + "e" + std::to_string(std::stoi(text.substr(e + 1)));
    } else {
        std::snprintf(buf, sizeof buf, "%.6g", v);
        s = buf;
    }
    std::string out;
    for (char ch : s) {
        if (ch == '-')
            out += "\u2212";
        else
            out += ch;
    }
    return out;
}

csv_series read_series_csv(const std::filesystem::path& csv_path)
{
    std::ifstream in(csv_path, std::ios::binary);
    if (!in)
        throw io_error("cannot read " + csv_path.string());

    csv_series series;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r")
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw io_error(csv_path.string() + ":" + std::to_string(lineno) + ": expected two columns");
        const std::string_view view(line);
        if (series.x_name.empty()) {
            series.x_name = line.substr(0, comma);
            series.y_name = line.substr(comma + 1);
            if (!series.y_name.empty() && series.y_name.back() == '\r')
                series.y_name.pop_back();
            continue;
        }
        series.x.push_back(parse_double(view.substr(0, comma), csv_path, lineno));
        series.y.push_back(parse_double(view.substr(comma + 1), csv_path, lineno));
    }
    if (series.x.empty())
        throw io_error(csv_path.string() + " holds no data rows");
    return series;
}

void emit_plot_script(const std::filesystem::path& csv_path, const plot_meta& meta,
                      const std::filesystem::path& script_path)
{
    const csv_series s = read_series_csv(csv_path);
    std::filesystem::path png = script_path;
    png.replace_extension(".png");

    std::ofstream out = open_output(script_path);
    out << "#!/usr/bin/env python3\n"
        << "import matplotlib\n"
        << "matplotlib.use(\"Agg\")\n"
        << "import matplotlib.pyplot as plt\n\n";
    for (const auto& [name, values] : {std::pair{"x", &s.x}, std::pair{"y", &s.y}}) {
        out << name << " = [\n";
        for (double v : *values)
            out << "    " << format_g17(v) << ",\n";
        out << "]\n";
    }
    out << "\nfig, ax = plt.subplots(figsize=(7, 4.5))\n"
        << "ax.plot(x, y, lw=1.2)\n"
        << "ax.set_title(" << python_string(meta.title) << ")\n"
        << "ax.set_xlabel(" << python_string(meta.x_label) << ")\n"
        << "ax.set_ylabel(" << python_string(meta.y_label) << ")\n"
        << "ax.ticklabel_format(useOffset=False, axis=\"y\")\n"
        << "ax.grid(alpha=0.3)\n"
        << "fig.tight_layout()\n"
        << "fig.savefig(" << python_string(png.filename().string()) << ", dpi=150)\n";
    finish(out, script_path);
}

void emit_plot_svg(const std::filesystem::path& csv_path, const plot_meta& meta, const std::filesystem::path& svg_path)
{
    const csv_series s = read_series_csv(csv_path);
    constexpr double width = 720.0, height = 450.0;
    constexpr double left = 80.0, right = 20.0, top = 40.0, bottom = 50.0;

    auto [xmin_it, xmax_it] = std::minmax_element(s.x.begin(), s.x.end());
    auto [ymin_it, ymax_it] = std::minmax_element(s.y.begin(), s.y.end());
    double xmin = *xmin_it, xmax = *xmax_it, ymin = *ymin_it, ymax = *ymax_it;
    if (!(xmax > xmin)) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (!(ymax > ymin)) {
        const double pad = std::max(std::abs(ymin) * 1e-3, 1e-12);
        ymin -= pad;
        ymax += pad;
    }
    const auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (width - left - right); };
    const auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * (height - top - bottom); };

    std::ofstream out = open_output(svg_path);
    char buf[64];
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
        << xml_escape(meta.title) << "</text>\n"
        << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width - left - right << "\" height=\""
        << height - top - bottom << "\" fill=\"none\" stroke=\"black\"/>\n";

    const auto label = [&](double x, double y, const char* anchor, double v) {
        std::snprintf(buf, sizeof buf, "%.6g", v);
        out << "<text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"" << anchor
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << buf << "</text>\n";
    };
    label(left, height - bottom + 16, "start", xmin);
    label(width - right, height - bottom + 16, "end", xmax);
    label(left - 6, height - bottom, "end", ymin);
    label(left - 6, top + 10, "end", ymax);
    out << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << xml_escape(meta.x_label)
        << "</text>\n"
        << "<text x=\"18\" y=\"" << (top + height - bottom) / 2 << "\" transform=\"rotate(-90 18 "
        << (top + height - bottom) / 2 << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << xml_escape(meta.y_label) << "</text>\n";

    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f", px(s.x[i]), py(s.y[i]));
        out << (i ? " " : "") << buf;
    }
    out << "\"/>\n</svg>\n";
    finish(out, svg_path);
}

} // namespace qwave
