#include "noma/svg_plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace noma {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 55.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 7);
    return std::string(buf, res.ptr);
}

struct CurveRows {
    std::string detector;
    double gamma = 0.0;
    double alpha = 0.0;
    std::vector<const BerCsvRow*> rows;
};

std::vector<CurveRows> group_rows(const std::vector<BerCsvRow>& rows) {
    std::vector<CurveRows> curves;
    for (const BerCsvRow& r : rows) {
        CurveRows* match = nullptr;
        for (CurveRows& c : curves)
            if (c.detector == r.detector && c.gamma == r.gamma &&
                c.alpha == r.alpha) {
                match = &c;
                break;
            }
        if (!match) {
            curves.push_back({r.detector, r.gamma, r.alpha, {}});
            match = &curves.back();
        }
        match->rows.push_back(&r);
    }
    return curves;
}

}  // namespace

std::string ber_svg_text(const std::vector<BerCsvRow>& rows,
                         const std::string& title) {
    if (rows.empty()) throw std::invalid_argument("no rows to plot");

    double xmin = rows[0].snr_db, xmax = rows[0].snr_db;
    double bmin = 1.0, bmax = 0.0;
    for (const BerCsvRow& r : rows) {
        xmin = std::min(xmin, r.snr_db);
        xmax = std::max(xmax, r.snr_db);
        if (r.ber_avg > 0.0) {
            bmin = std::min(bmin, r.ber_avg);
            bmax = std::max(bmax, r.ber_avg);
        }
    }
    if (xmax == xmin) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    if (bmax <= 0.0) {
        bmin = 1e-6;
        bmax = 1.0;
    }
    int lo_exp = static_cast<int>(std::floor(std::log10(bmin)));
    int hi_exp = static_cast<int>(std::ceil(std::log10(bmax)));
    if (hi_exp <= lo_exp) hi_exp = lo_exp + 1;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto px = [&](double snr) {
        return kLeft + (snr - xmin) / (xmax - xmin) * plot_w;
    };
    const auto py = [&](double ber) {
        const double e = std::log10(ber);
        return kTop + (hi_exp - e) / static_cast<double>(hi_exp - lo_exp) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(kWidth) + "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " +
           num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<rect width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(kWidth / 2) +
           "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"17\">" +
           title + "</text>\n";

    for (int e = lo_exp; e <= hi_exp; ++e) {
        const double y = py(std::pow(10.0, e));
        svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kWidth - kRight) + "\" y2=\"" + num(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"12\">1e" +
               std::to_string(e) + "</text>\n";
    }
    const double x_tick = (xmax - xmin) > 25.0 ? 5.0 : 2.0;
    for (double s = xmin; s <= xmax + x_tick / 2; s += x_tick) {
        const double x = px(s);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
               num(x) + "\" y2=\"" + num(kHeight - kBottom) +
               "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(kHeight - kBottom + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"12\">" +
               num(s) + "</text>\n";
    }
    svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
           num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" +
           num(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">SNR (dB)</text>\n";
    svg += "<text x=\"18\" y=\"" + num(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 18 " +
           num(kTop + plot_h / 2) + ")\">average BER</text>\n";

    const std::vector<CurveRows> curves = group_rows(rows);
    int color_idx = 0;
    double legend_y = kTop + 16;
    for (const CurveRows& c : curves) {
        const char* color = kPalette[color_idx % 8];
        ++color_idx;
        std::string pts;
        for (const BerCsvRow* r : c.rows) {
            if (r->ber_avg <= 0.0) continue;  // nothing to place on a log axis
            if (!pts.empty()) pts += ' ';
            pts += num(px(r->snr_db)) + "," + num(py(r->ber_avg));
        }
        if (!pts.empty())
            svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" +
                   color + "\" stroke-width=\"1.8\"/>\n";
        const double lx = kWidth - kRight - 170;
        svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(legend_y) +
               "\" x2=\"" + num(lx + 24) + "\" y2=\"" + num(legend_y) +
               "\" stroke=\"" + color + "\" stroke-width=\"1.8\"/>\n";
        svg += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(legend_y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">alpha=" +
               num(c.alpha) + ", gamma=" + num(c.gamma) + " (" + c.detector +
               ")</text>\n";
        legend_y += 16;
    }
    svg += "</svg>\n";
    return svg;
}

void render_svg_from_csv(const std::string& csv_path,
                         const std::string& svg_path,
                         const std::string& title) {
    const std::vector<BerCsvRow> rows = read_ber_csv(csv_path);
    std::string heading = title;
    if (heading.empty() && !rows.empty())
        heading = rows[0].constellation + " BER vs SNR";
    const std::string text = ber_svg_text(rows, heading);

    const std::filesystem::path tmp(svg_path + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, std::filesystem::path(svg_path), ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " into place: " +
                                 ec.message());
    }
}

}  // namespace noma
