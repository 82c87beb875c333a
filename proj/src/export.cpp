#include "toro/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "toro/errors.hpp"

namespace toro {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

constexpr const char* kCsvVersion = "# toro-csv v1";
constexpr const char* kJsonVersion = "toro-json v1";

// Field order shared by the CSV header and the JSON objects.
const std::vector<std::string>& field_names() {
    static const std::vector<std::string> names = {
        "t",      "status", "alpha_x", "alpha_y", "f",     "gamma_x", "gamma_y", "gamma_z",
        "s_dot",  "K",      "T_x",     "T_y",     "T_z",   "N_x",     "N_y",     "N_z",
        "B_x",    "B_y",    "B_z",     "kappa",   "tau",   "c1",      "c2",      "C_x",
        "C_y",    "C_z",    "beta_x",  "beta_y",  "f_tilde"};
    return names;
}

std::vector<double> numeric_fields(const SampleRecord& r) {
    return {r.alpha_x, r.alpha_y, r.f,    r.gamma.x, r.gamma.y, r.gamma.z, r.s_dot,
            r.K,       r.T.x,     r.T.y,  r.T.z,     r.N.x,     r.N.y,     r.N.z,
            r.B.x,     r.B.y,     r.B.z,  r.kappa,   r.tau,     r.c1,      r.c2,
            r.C.x,     r.C.y,     r.C.z,  r.beta.x,  r.beta.y,  r.f_tilde};
}

} // namespace

std::string to_csv(const SampleSeries& series) {
    std::ostringstream out;
    out << kCsvVersion << "\n";
    const auto& names = field_names();
    for (size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
    out << "\n";
    for (const SampleRecord& r : series.records) {
        out << format_double(r.t) << "," << to_string(r.status);
        if (r.status == SampleStatus::Ok) {
            for (double v : numeric_fields(r)) out << "," << format_double(v);
        } else {
            for (size_t i = 2; i < names.size(); ++i) out << ",";
        }
        out << "\n";
    }
    return out.str();
}

std::string to_json(const SampleSeries& series, const std::string& label) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"format\": \"" << kJsonVersion << "\",\n";
    out << "  \"curve\": \"" << label << "\",\n";
    out << "  \"samples\": " << series.records.size() << ",\n";
    out << "  \"records\": [\n";
    const auto& names = field_names();
    for (size_t k = 0; k < series.records.size(); ++k) {
        const SampleRecord& r = series.records[k];
        out << "    {\"t\": " << format_double(r.t) << ", \"status\": \"" << to_string(r.status)
            << "\"";
        std::vector<double> values = numeric_fields(r);
        for (size_t i = 2; i < names.size(); ++i) {
            out << ", \"" << names[i] << "\": ";
            if (r.status == SampleStatus::Ok)
                out << format_double(values[i - 2]);
            else
                out << "null";
        }
        out << "}" << (k + 1 < series.records.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

namespace {

struct Bounds {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool has_any = false;

    void include(double x, double y) {
        if (!has_any) {
            min_x = max_x = x;
            min_y = max_y = y;
            has_any = true;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
};

void append_paths(std::ostringstream& out, const SampleSeries& series, const std::string& color,
                  bool focal, double stroke) {
    for (auto [begin, end] : series.arcs) {
        out << "  <path fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
            << format_double(stroke) << "\" d=\"";
        for (int i = begin; i < end; ++i) {
            const SampleRecord& r = series.records[i];
            double x = focal ? r.beta.x : r.alpha_x;
            double y = focal ? r.beta.y : r.alpha_y;
            // negate y so the figure keeps the usual math orientation
            out << (i == begin ? "M" : " L") << format_double(x) << " " << format_double(-y);
        }
        out << "\"/>\n";
    }
}

} // namespace

std::string to_svg(const SampleSeries& series, const SvgOptions& options) {
    if (series.arcs.empty()) throw InvalidArgument("nothing to draw: no ok samples");

    Bounds b;
    for (auto [begin, end] : series.arcs)
        for (int i = begin; i < end; ++i) {
            const SampleRecord& r = series.records[i];
            b.include(r.alpha_x, -r.alpha_y);
            b.include(r.beta.x, -r.beta.y);
        }
    double w = b.max_x - b.min_x;
    double h = b.max_y - b.min_y;
    double margin = options.margin_fraction * std::max(w, h);
    if (margin == 0.0) margin = 1.0;
    double stroke = 0.004 * std::max(w + 2 * margin, h + 2 * margin);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(b.min_x - margin)
        << " " << format_double(b.min_y - margin) << " " << format_double(w + 2 * margin) << " "
        << format_double(h + 2 * margin) << "\">\n";
    append_paths(out, series, options.base_color, false, stroke);
    append_paths(out, series, options.focal_color, true, stroke);
    out << "</svg>\n";
    return out.str();
}

std::string to_obj(const SampleSeries& series) {
    if (series.arcs.empty()) throw InvalidArgument("nothing to export: no ok samples");

    std::ostringstream out;
    out << "# toro-obj v1\n";
    int base_index = 1;

    out << "o gamma\n# label: gamma (blue)\n";
    for (auto [begin, end] : series.arcs)
        for (int i = begin; i < end; ++i) {
            const SampleRecord& r = series.records[i];
            out << "v " << format_double(r.gamma.x) << " " << format_double(r.gamma.y) << " "
                << format_double(r.gamma.z) << "\n";
        }
    int index = base_index;
    for (auto [begin, end] : series.arcs) {
        out << "l";
        for (int i = begin; i < end; ++i) out << " " << index++;
        out << "\n";
    }

    out << "o focal\n# label: C_gamma (green)\n";
    for (auto [begin, end] : series.arcs)
        for (int i = begin; i < end; ++i) {
            const SampleRecord& r = series.records[i];
            out << "v " << format_double(r.C.x) << " " << format_double(r.C.y) << " "
                << format_double(r.C.z) << "\n";
        }
    for (auto [begin, end] : series.arcs) {
        out << "l";
        for (int i = begin; i < end; ++i) out << " " << index++;
        out << "\n";
    }
    return out.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidArgument("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out.flush()) throw InvalidArgument("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw InvalidArgument("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

} // namespace toro
