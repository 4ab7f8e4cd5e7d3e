#ifndef NOMA_CSV_HPP
#define NOMA_CSV_HPP

#include <string>
#include <vector>

#include "noma/montecarlo.hpp"

namespace noma {

/// Exact column order of the sweep output format.
inline constexpr const char* kBerCsvHeader =
    "constellation,detector,gamma,alpha,snr_db,symbols,bit_errors_u1,"
    "bit_errors_u2,ber_u1,ber_u2,ber_avg,tie_fraction";

struct BerCsvRow {
    std::string constellation;
    std::string detector;
    double gamma = 0.0;
    double alpha = 0.0;
    double snr_db = 0.0;
    std::uint64_t symbols = 0;
    std::uint64_t bit_errors_u1 = 0;
    std::uint64_t bit_errors_u2 = 0;
    double ber_u1 = 0.0;
    double ber_u2 = 0.0;
    double ber_avg = 0.0;
    double tie_fraction = 0.0;
};

/// Renders curves as CSV text. Floats carry 10 significant digits, '.'
/// decimal point regardless of locale, so identical runs give identical
/// bytes.
std::string ber_csv_text(const std::string& constellation,
                         const std::vector<BerCurve>& curves);

/// Writes atomically: the file appears only after the full contents are
/// flushed (temp file + rename). Throws std::runtime_error on I/O failure.
void write_ber_csv(const std::string& path, const std::string& constellation,
                   const std::vector<BerCurve>& curves);

/// Parses a file produced by write_ber_csv. Throws std::runtime_error on a
/// missing file, bad header, or malformed row.
std::vector<BerCsvRow> read_ber_csv(const std::string& path);

}  // namespace noma

#endif  // NOMA_CSV_HPP
