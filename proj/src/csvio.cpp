#include "tviro/csvio.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace tviro {

std::string format_real(const BigReal& x, int significant_digits) {
  return x.str(significant_digits);
}

std::string format_real(double x, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
  return buf;
}

void write_sweep_header(std::ostream& os) { os << kSweepHeader << '\n'; }

void write_sweep_row(std::ostream& os, const TVResult& res, int digits) {
  os << res.g << ',' << res.r << ',' << res.s << ',' << res.precision_bits << ','
     << format_real(res.tv.real(), digits) << ',' << format_real(res.tv.imag(), digits) << ','
     << format_real(res.qv.real(), digits) << ',' << format_real(res.qv.imag(), digits) << ','
     << res.term_count << ',' << format_real(res.wall_seconds, 6) << '\n';
}

void write_fit_header(std::ostream& os) { os << kFitHeader << '\n'; }

void write_fit_row(std::ostream& os, int g, const FitResult& fit, int digits) {
  os << g << ',' << fit.model_tag << ',' << format_real(fit.a, digits) << ','
     << format_real(fit.b, digits) << ',' << (fit.has_c ? format_real(fit.c, digits) : "") << ','
     << format_real(fit.rss, digits) << ','
     << (fit.has_r_squared ? format_real(fit.r_squared, digits) : "") << '\n';
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool is_header(const std::vector<std::string>& fields) {
  return !fields.empty() && !fields[0].empty() && !std::isdigit(static_cast<unsigned char>(fields[0][0])) &&
         fields[0][0] != '-' && fields[0][0] != '+';
}

double parse_double(const std::string& s, size_t line) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw CsvParseError(line, "cannot parse number '" + s + "'");
  }
}

long parse_long(const std::string& s, size_t line) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw CsvParseError(line, "cannot parse integer '" + s + "'");
  }
}

}  // namespace

std::vector<QVSeries> read_qv_csv(std::istream& is) {
  std::map<int, QVSeries> by_g;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (lineno == 1 && is_header(fields)) continue;
    if (fields.size() < 7) throw CsvParseError(lineno, "expected sweep-schema row with >= 7 fields");
    const int g = static_cast<int>(parse_long(fields[0], lineno));
    const int r = static_cast<int>(parse_long(fields[1], lineno));
    const double qv_re = parse_double(fields[6], lineno);
    auto& series = by_g[g];
    series.g = g;
    series.points.emplace_back(r, qv_re);
  }
  std::vector<QVSeries> out;
  out.reserve(by_g.size());
  for (auto& [g, series] : by_g) {
    std::sort(series.points.begin(), series.points.end());
    out.push_back(std::move(series));
  }
  return out;
}

std::vector<std::pair<int, double>> read_gb_csv(std::istream& is) {
  std::vector<std::pair<int, double>> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (lineno == 1 && is_header(fields)) continue;
    if (fields.size() == 2) {
      out.emplace_back(static_cast<int>(parse_long(fields[0], lineno)),
                       parse_double(fields[1], lineno));
    } else if (fields.size() >= 4) {
      // fit-schema row: g,model,a,b,...
      out.emplace_back(static_cast<int>(parse_long(fields[0], lineno)),
                       parse_double(fields[3], lineno));
    } else {
      throw CsvParseError(lineno, "expected (g,b) or fit-schema row");
    }
  }
  return out;
}

}  // namespace tviro
