#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tviro/fitting.hpp"
#include "tviro/turaev_viro.hpp"

namespace tviro {

/// Round-trip-safe decimal rendering.
std::string format_real(const BigReal& x, int significant_digits = 20);
std::string format_real(double x, int significant_digits = 17);

inline constexpr const char* kSweepHeader = "g,r,s,prec,tv_re,tv_im,qv_re,qv_im,terms,seconds";
inline constexpr const char* kFitHeader = "g,model,a,b,c,rss,r2";

void write_sweep_header(std::ostream& os);
void write_sweep_row(std::ostream& os, const TVResult& res, int significant_digits = 20);

void write_fit_header(std::ostream& os);
void write_fit_row(std::ostream& os, int g, const FitResult& fit, int significant_digits = 17);

/// Raised on malformed CSV input; carries the 1-based line number.
struct CsvParseError : std::runtime_error {
  CsvParseError(size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  size_t line_number;
};

/// Parses sweep-schema CSV (header optional) into per-genus series,
/// keyed and ordered by g.
std::vector<QVSeries> read_qv_csv(std::istream& is);

/// Parses two-column (g, b) CSV for the affine fit; accepts either bare
/// pairs or fit-schema rows (g,model,a,b,...).
std::vector<std::pair<int, double>> read_gb_csv(std::istream& is);

}  // namespace tviro
