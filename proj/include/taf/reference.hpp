#pragma once

// Published reference values the model is checked against: the infectivity
// rows, the three tertiary-attack-fraction rows for days 1..14 and the
// six per-case-type constants at two decimals.

#include <array>

#include "taf/infectivity.hpp"

namespace taf::reference {

inline constexpr DailyProfile kAdheringRow{
    0.0000, 0.0000, 0.2200, 0.2200, 0.1800, 0.1300, 0.0800,
    0.0325, 0.0260, 0.0130, 0.0130, 0.0130, 0.0065, 0.0000};

inline constexpr DailyProfile kCumulativeRow{
    0.0000, 0.0000, 0.2200, 0.4400, 0.6200, 0.7500, 0.8300,
    0.8625, 0.8885, 0.9015, 0.9145, 0.9275, 0.9340, 0.9340};

inline constexpr DailyProfile kPairRow{
    0.0000, 0.0000, 0.0000, 0.0000, 0.0484, 0.1452, 0.2728,
    0.4092, 0.5340, 0.6452, 0.7125, 0.7700, 0.8135, 0.8491};

inline constexpr DailyProfile kAppRow{
    0.0000, 0.0000, 0.1269, 0.2781, 0.4259, 0.5549, 0.6546,
    0.7254, 0.7712, 0.8060, 0.8338, 0.8577, 0.8607, 0.8607};

inline constexpr DailyProfile kCtRow{
    0.0000, 0.0000, 0.1511, 0.3221, 0.4798, 0.6085, 0.6992,
    0.7546, 0.7977, 0.8255, 0.8494, 0.8577, 0.8607, 0.8607};

// Ordered as CaseType: miss, sym, pers, ct, app+, app-.
inline constexpr std::array<double, 6> kCaseTypeLambdas{0.87, 0.70, 0.36,
                                                        0.60, 0.60, 0.27};

// Days compared when calibrating the warning-channel form.
inline constexpr int kCalibrationFirstDay = 3;
inline constexpr int kCalibrationLastDay = 13;

}  // namespace taf::reference
