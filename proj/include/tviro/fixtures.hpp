#pragma once

#include <span>

#include "tviro/fitting.hpp"

namespace tviro::fixtures {

/// Reference tables shipped with the tool, exactly as printed in the
/// source data. Rows flagged anomalous carry suspected numerical error
/// and are excluded from fit reproduction by default.

struct VolumeRow {
  int g;
  const char* vol_tet;
  const char* vol_manifold;
};

struct QvRow {
  int g;
  int r;
  const char* qv_re;
  bool anomalous;
};

struct FreeFitRow {
  int g;
  int r_max;
  const char* vol;
  const char* a;
  const char* b;
  const char* c;
};

struct FixedFitRow {
  int g;
  int r_max;
  const char* b;
  const char* c;
};

std::span<const VolumeRow> volume_table();
std::span<const QvRow> qv_table();
std::span<const FreeFitRow> free_fit_table();
std::span<const FixedFitRow> fixed_fit_table();

/// Full-precision free-fit coefficients for g = 2 and g = 3 (quoted to
/// more digits than the coefficient table).
struct FullFreeFit {
  int g;
  const char* a;
  const char* b;
  const char* c;
};
std::span<const FullFreeFit> full_free_fits();

/// QV series for one genus assembled from the table, non-anomalous rows
/// only unless requested otherwise; rows above r_max are dropped.
QVSeries qv_series(int g, bool include_anomalous = false, int r_max = 0);

/// The genera present in the QV table.
std::vector<int> qv_genera();

}  // namespace tviro::fixtures
