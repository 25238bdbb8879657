#pragma once

// Published weekly values for the shipped 31-week series, and values frozen
// from tests/oracle/independent_model.py.

#include <array>

namespace taf::expected {

// Averted cases per week.
inline constexpr std::array<double, 31> kAvertedCt{
    0,     344,   676,   1284,  1783,  2490,  3200,  5054,
    8005,  11507, 15524, 17071, 16629, 18161, 19141, 20087,
    20882, 21999, 23455, 25579, 28940, 34590, 43354, 47195,
    50219, 51608, 61769, 66047, 59076, 52754, 45177};
inline constexpr std::array<double, 31> kAvertedApp{
    0,    64,   173,  239,  260,  305,  332,  479,  728,  1023, 1358,
    1431, 1323, 1365, 1379, 1390, 1410, 1433, 1486, 1563, 1705, 1978,
    2412, 2542, 2615, 2621, 3074, 3201, 2789, 2413, 1996};
inline constexpr double kAvertedCtTotal = 773599;
inline constexpr double kAvertedAppTotal = 45088;

// Missed share of the weekly total, 2 decimals.
inline constexpr std::array<double, 31> kMissShare{
    .58, .54, .53, .61, .61, .60, .60, .58, .51, .44, .55,
    .59, .56, .63, .64, .69, .71, .73, .68, .65, .67, .64,
    .63, .59, .61, .58, .60, .58, .55, .50, .52};

inline constexpr double kRtReductionCt = 0.0091;
inline constexpr double kRtReductionApp = 0.0005;

namespace oracle {

inline constexpr std::array<double, 6> kCaseTypeLambdas{
    0.8723559999999999, 0.6938082499999999,  0.3792598554216868,
    0.6181604563253013, 0.5909731483870967,  0.25272950476190476};

inline constexpr std::array<double, 14> kCtDirect{
    0.0, 0.0, 0.1524655, 0.32126600000000005, 0.47571050000000004,
    0.60218625, 0.6938082499999999, 0.7477190625, 0.7902570875,
    0.8176837874999999, 0.84041755, 0.860490125, 0.8739706,
    0.8804168499999999};
inline constexpr std::array<double, 14> kAppDirect{
    0.0, 0.0, 0.13613050000000002, 0.288596, 0.4326455, 0.5561512500000001,
    0.6516882499999999, 0.7139184375, 0.7638072125, 0.7983011624999999,
    0.8257278625, 0.8484616250000001, 0.8645121625, 0.8739706};
inline constexpr std::array<double, 14> kCtShifted{
    0.04900499999999999, 0.09206999999999999, 0.27423549999999997, 0.452486,
    0.597666125, 0.7045567500000001, 0.7734413749999999, 0.80824125,
    0.8363579, 0.8538604125, 0.8683507374999999, 0.8805258125,
    0.8869525375, 0.8882755375};

inline constexpr double kDirectMaxDeviation = 0.013270600000000021;
inline constexpr double kShiftedMaxDeviation = 0.130386;

inline constexpr double kVolumeWeek0 = 106785.11109689607;

inline constexpr double kCtTotal = 803078.8165549411;
inline constexpr double kCtRtReduction = 0.009270439548827019;
inline constexpr std::array<double, 3> kCtFirstWeeks{
    355.9132823138498, 700.6556242486695, 1332.4933101211354};
inline constexpr double kCtTotalAsPrinted = 69441.2367615028;

inline constexpr double kAppTotal = 68883.73886516325;
inline constexpr double kAppRtReduction = 0.0007973920365536717;
inline constexpr std::array<double, 3> kAppFirstWeeks{
    81.73632620432181, 220.206308493478, 303.9844590284483};
inline constexpr double kAppTotalAsPrinted = 4896.310015655746;

}  // namespace oracle

}  // namespace taf::expected
