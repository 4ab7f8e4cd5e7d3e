#ifndef NOMA_SVG_PLOT_HPP
#define NOMA_SVG_PLOT_HPP

#include <string>
#include <vector>

#include "noma/csv.hpp"

namespace noma {

/// Renders BER-vs-SNR curves (one polyline per alpha, log-scale BER axis) as
/// a self-contained SVG 1.1 document. Zero-error points are omitted from
/// their polyline since they have no finite log ordinate.
std::string ber_svg_text(const std::vector<BerCsvRow>& rows,
                         const std::string& title);

/// Reads a sweep CSV and writes the corresponding SVG (temp file + rename).
void render_svg_from_csv(const std::string& csv_path,
                         const std::string& svg_path,
                         const std::string& title = "");

}  // namespace noma

#endif  // NOMA_SVG_PLOT_HPP
