#include "noma/csv.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace noma {

namespace {

// to_chars keeps the output locale-independent; 10 significant digits are
// enough to round-trip every value the engine produces distinctly.
std::string format_double(double v) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 10);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_double(const std::string& field, int line_no) {
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw std::runtime_error("bad numeric field at line " +
                                 std::to_string(line_no) + ": '" + field + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& field, int line_no) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw std::runtime_error("bad count field at line " +
                                 std::to_string(line_no) + ": '" + field + "'");
    return v;
}

}  // namespace

std::string ber_csv_text(const std::string& constellation,
                         const std::vector<BerCurve>& curves) {
    std::string out = kBerCsvHeader;
    out += '\n';
    for (const BerCurve& curve : curves) {
        const char* det = detector_name(curve.detector);
        for (const BerPoint& p : curve.points) {
            out += constellation;
            out += ',';
            out += det;
            out += ',';
            out += format_double(p.gamma);
            out += ',';
            out += format_double(p.alpha);
            out += ',';
            out += format_double(p.snr_db);
            out += ',';
            out += std::to_string(p.symbols_simulated);
            out += ',';
            out += std::to_string(p.bit_errors_u1);
            out += ',';
            out += std::to_string(p.bit_errors_u2);
            out += ',';
            out += format_double(p.ber_u1);
            out += ',';
            out += format_double(p.ber_u2);
            out += ',';
            out += format_double(p.ber_avg);
            out += ',';
            out += format_double(p.tie_fraction);
            out += '\n';
        }
    }
    return out;
}

void write_ber_csv(const std::string& path, const std::string& constellation,
                   const std::vector<BerCurve>& curves) {
    const std::string text = ber_csv_text(constellation, curves);
    const std::filesystem::path target(path);
    const std::filesystem::path tmp(path + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " into place: " +
                                 ec.message());
    }
}

std::vector<BerCsvRow> read_ber_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != kBerCsvHeader)
        throw std::runtime_error("unexpected CSV header in " + path);
    std::vector<BerCsvRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 12)
            throw std::runtime_error("expected 12 fields at line " +
                                     std::to_string(line_no) + " of " + path);
        BerCsvRow row;
        row.constellation = fields[0];
        row.detector = fields[1];
        row.gamma = parse_double(fields[2], line_no);
        row.alpha = parse_double(fields[3], line_no);
        row.snr_db = parse_double(fields[4], line_no);
        row.symbols = parse_u64(fields[5], line_no);
        row.bit_errors_u1 = parse_u64(fields[6], line_no);
        row.bit_errors_u2 = parse_u64(fields[7], line_no);
        row.ber_u1 = parse_double(fields[8], line_no);
        row.ber_u2 = parse_double(fields[9], line_no);
        row.ber_avg = parse_double(fields[10], line_no);
        row.tie_fraction = parse_double(fields[11], line_no);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace noma
