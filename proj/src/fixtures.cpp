#include "tviro/fixtures.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tviro::fixtures {

namespace {

constexpr VolumeRow kVolumes[] = {
    {2, "2.007682006682397", "12.046092040094381"},
    {3, "2.2547631818606026", "18.03810545488482"},
    {4, "2.3603494908554774", "23.603494908554772"},
    {5, "2.415787949187158", "28.989455390245897"},
    {6, "2.448617485457304", "34.28064479640226"},
    {7, "2.469695490891516", "39.51512785426426"},
    {8, "2.484045062029212", "44.71281111652581"},
    {9, "2.494259571737797", "49.88519143475594"},
    {10, "2.5017908556003303", "55.039398823207264"},
    {100, "2.5369350366401", "512.4608774013002"},
    {1000, "2.5373497508910896", "5079.774201283962"},
};

constexpr QvRow kQv[] = {
    {2, 5, "8.14385123663626", false},
    {2, 7, "9.18650442759997", false},
    {2, 9, "9.65004427173429", false},
    {2, 11, "9.96879239401443", false},
    {2, 13, "10.20513879726808", false},
    {2, 15, "10.38914324592799", false},
    {2, 17, "10.53704472005768", false},
    {2, 19, "10.65879117905018", false},
    {2, 21, "10.76091340012164", false},
    {2, 23, "10.84790597624064", false},
    {2, 25, "10.92297357052110", false},
    {2, 27, "10.98846715752597", false},
    {2, 29, "11.04614827534519", false},
    {2, 31, "11.09819658700029", false},
    {2, 33, "11.10744853337351", false},
    {2, 35, "10.85076510281595", true},
    {2, 37, "11.70823932238226", true},
    {2, 39, "12.05034471052339", true},
    {2, 41, "12.57984278565481", true},
    {2, 43, "13.01497045469742", true},
    {2, 45, "13.57883304172589", true},
    {2, 47, "13.99851452347661", true},
    {3, 5, "11.49177317419101", false},
    {3, 7, "12.80934693191113", false},
    {3, 9, "13.58615197340893", false},
    {3, 11, "14.12955507845825", false},
    {3, 13, "14.53997951590672", false},
    {3, 15, "14.86388896169300", false},
    {3, 17, "15.12724763049115", false},
    {3, 19, "15.34618602238218", false},
    {3, 21, "15.53141775410042", false},
    {3, 23, "15.69039789582600", false},
    {3, 25, "15.82849506550996", false},
    {3, 27, "15.94972272572273", false},
    {3, 29, "16.05847664488577", false},
    {3, 31, "16.12064941438458", false},
    {3, 33, "16.64108419344305", true},
    {3, 35, "17.23677472848113", true},
    {3, 37, "17.65793100469928", true},
    {3, 39, "18.19438875927008", true},
    {4, 5, "14.51784517894469", false},
    {4, 7, "16.30280237431099", false},
    {4, 9, "17.32714285662395", false},
    {4, 11, "18.05414567452926", false},
    {4, 13, "18.60945703261760", false},
    {4, 15, "19.05151621992931", false},
    {4, 17, "19.41350816169271", false},
    {4, 19, "19.71628402919349", false},
    {4, 21, "19.97380655712918", false},
    {4, 23, "20.19586182173212", false},
    {4, 25, "20.38962564202214", false},
    {4, 27, "20.54717170623221", false},
    {5, 5, "17.56864290428003", false},
    {5, 7, "19.74442367439225", false},
    {5, 9, "20.99442151342528", false},
    {5, 11, "21.88836919170208", false},
    {5, 13, "22.57622952582667", false},
    {5, 15, "23.12700521166837", false},
    {5, 17, "23.58015181610567", false},
    {5, 19, "23.96067740594393", false},
    {5, 21, "24.28544874705841", false},
    {5, 23, "24.56622464869820", false},
    {6, 5, "20.59635740610918", false},
    {6, 7, "23.16334886690935", false},
    {6, 9, "24.62826235095652", false},
    {6, 11, "25.68044858255137", false},
    {6, 13, "26.49408736663125", false},
    {6, 15, "27.14829604792329", false},
    {6, 17, "27.68837084809290", false},
    {6, 19, "28.14316996246829", false},
    {6, 21, "28.53221301857429", false},
    {6, 23, "28.85466729936771", false},
    {7, 5, "23.62294303366446", false},
    {7, 7, "26.57176683519978", false},
    {7, 9, "28.24541308192440", false},
    {7, 11, "29.45065948405797", false},
    {7, 13, "30.38589828885670", false},
    {7, 15, "31.14019388548824", false},
    {7, 17, "31.76448809338449", false},
    {7, 19, "32.29128792277911", false},
};

constexpr FreeFitRow kFreeFits[] = {
    {2, 33, "12.04609204", "11.86209740", "-0.83556194", "-5.31016845"},
    {3, 31, "18.03810545", "17.71256898", "-1.95506206", "-5.09276097"},
    {4, 27, "23.60349490", "22.91592390", "-2.65679563", "-6.74587906"},
    {5, 23, "28.98945539", "27.83557719", "-3.23491649", "-8.35921398"},
    {6, 23, "34.28064479", "32.73892860", "-3.85245863", "-9.69525194"},
    {7, 19, "39.51512785", "37.25645299", "-4.15342419", "-12.1205935"},
};

constexpr FixedFitRow kFixedFits[] = {
    {2, 33, "-1.07486449", "-4.06269480"},
    {3, 31, "-2.36670389", "-2.98774665"},
    {4, 27, "-3.47345292", "-2.75451472"},
    {5, 23, "-4.50837608", "-2.48549875"},
    {6, 23, "-5.55394983", "-1.84727854"},
    {7, 19, "-6.43483298", "-2.38715613"},
};

constexpr FullFreeFit kFullFreeFits[] = {
    {2, "11.86209740389381", "-0.835561949347834", "-5.310168450722084"},
    {3, "17.712568980467715", "-1.95506206171866", "-5.092760978446523"},
};

}  // namespace

std::span<const VolumeRow> volume_table() { return kVolumes; }
std::span<const QvRow> qv_table() { return kQv; }
std::span<const FreeFitRow> free_fit_table() { return kFreeFits; }
std::span<const FixedFitRow> fixed_fit_table() { return kFixedFits; }
std::span<const FullFreeFit> full_free_fits() { return kFullFreeFits; }

QVSeries qv_series(int g, bool include_anomalous, int r_max) {
  QVSeries s;
  s.g = g;
  for (const auto& row : kQv) {
    if (row.g != g) continue;
    if (!include_anomalous && row.anomalous) continue;
    if (r_max > 0 && row.r > r_max) continue;
    s.points.emplace_back(row.r, std::strtod(row.qv_re, nullptr));
  }
  if (s.points.empty()) throw std::invalid_argument("qv_series: no rows for requested genus");
  return s;
}

std::vector<int> qv_genera() {
  std::vector<int> out;
  for (const auto& row : kQv)
    if (out.empty() || out.back() != row.g) out.push_back(row.g);
  return out;
}

}  // namespace tviro::fixtures
