#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "incres/intermediary.hpp"
#include "incres/propagate.hpp"
#include "incres/resonance.hpp"

namespace incres::io {

/// One double at 17 significant digits ("%.16e"), enough to round-trip.
std::string format_full(double v);

/// Trajectory CSV: header `t,r,theta,nu,R,Theta,N,H`, one row per sample,
/// 17 significant digits, angles reduced to [0, 2*pi).
void write_trajectory_csv(std::ostream& os, const mainproblem::TrajectorySamples& samples);

/// Same columns as arrays in a JSON object.
void write_trajectory_json(std::ostream& os, const mainproblem::TrajectorySamples& samples);

/// Rosette curve CSV: `theta,r,x,y` (theta is the unwrapped curve parameter).
void write_rosette_csv(std::ostream& os, const std::vector<intermediary::RosettePoint>& pts);

void write_rosette_json(std::ostream& os, const std::vector<intermediary::RosettePoint>& pts);

/// Resonance table CSV: `num,den,k,i_deg,i_retro_deg`.
void write_resonances_csv(std::ostream& os, const std::vector<resonance::ResonantInclination>& rows);

void write_resonances_json(std::ostream& os, const std::vector<resonance::ResonantInclination>& rows);

/// Inclination-resonance diagram data: `ratio,i_deg` pairs.
struct DiagramPoint {
    double ratio = 0.0;
    double i_deg = 0.0;
};

void write_diagram_csv(std::ostream& os, const std::vector<DiagramPoint>& pts);

void write_diagram_json(std::ostream& os, const std::vector<DiagramPoint>& pts);

/// Frequency-ratio-vs-sigma curves: `sigma,i_deg,k` rows.
struct KSigmaPoint {
    double sigma = 0.0;
    double i_deg = 0.0;
    double k = 0.0;
};

void write_ksigma_csv(std::ostream& os, const std::vector<KSigmaPoint>& pts);

void write_ksigma_json(std::ostream& os, const std::vector<KSigmaPoint>& pts);

}  // namespace incres::io
