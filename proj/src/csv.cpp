#include "incres/csv.hpp"

#include <cstdio>

#include <json.hpp>

namespace incres::io {

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

void write_trajectory_csv(std::ostream& os, const mainproblem::TrajectorySamples& samples) {
    os << "t,r,theta,nu,R,Theta,N,H\n";
    for (const auto& row : samples) {
        const PolarNodalState s = row.state.normalized_angles();
        os << format_full(row.t) << ',' << format_full(s.r) << ',' << format_full(s.theta) << ','
           << format_full(s.nu) << ',' << format_full(s.R) << ',' << format_full(s.Theta) << ','
           << format_full(s.N) << ',' << format_full(row.energy) << '\n';
    }
}

void write_trajectory_json(std::ostream& os, const mainproblem::TrajectorySamples& samples) {
    nlohmann::json j;
    for (const char* key : {"t", "r", "theta", "nu", "R", "Theta", "N", "H"})
        j[key] = nlohmann::json::array();
    for (const auto& row : samples) {
        const PolarNodalState s = row.state.normalized_angles();
        j["t"].push_back(row.t);
        j["r"].push_back(s.r);
        j["theta"].push_back(s.theta);
        j["nu"].push_back(s.nu);
        j["R"].push_back(s.R);
        j["Theta"].push_back(s.Theta);
        j["N"].push_back(s.N);
        j["H"].push_back(row.energy);
    }
    os << j.dump(2) << '\n';
}

void write_rosette_csv(std::ostream& os, const std::vector<intermediary::RosettePoint>& pts) {
    os << "theta,r,x,y\n";
    for (const auto& p : pts)
        os << format_full(p.theta) << ',' << format_full(p.r) << ',' << format_full(p.x) << ','
           << format_full(p.y) << '\n';
}

void write_rosette_json(std::ostream& os, const std::vector<intermediary::RosettePoint>& pts) {
    nlohmann::json j;
    for (const char* key : {"theta", "r", "x", "y"}) j[key] = nlohmann::json::array();
    for (const auto& p : pts) {
        j["theta"].push_back(p.theta);
        j["r"].push_back(p.r);
        j["x"].push_back(p.x);
        j["y"].push_back(p.y);
    }
    os << j.dump(2) << '\n';
}

void write_resonances_csv(std::ostream& os,
                          const std::vector<resonance::ResonantInclination>& rows) {
    os << "num,den,k,i_deg,i_retro_deg\n";
    for (const auto& r : rows)
        os << r.k.num << ',' << r.k.den << ',' << format_full(r.k.value()) << ','
           << format_full(r.i_deg) << ',' << format_full(r.i_retro_deg) << '\n';
}

void write_resonances_json(std::ostream& os,
                           const std::vector<resonance::ResonantInclination>& rows) {
    nlohmann::json j;
    for (const char* key : {"num", "den", "k", "i_deg", "i_retro_deg"})
        j[key] = nlohmann::json::array();
    for (const auto& r : rows) {
        j["num"].push_back(r.k.num);
        j["den"].push_back(r.k.den);
        j["k"].push_back(r.k.value());
        j["i_deg"].push_back(r.i_deg);
        j["i_retro_deg"].push_back(r.i_retro_deg);
    }
    os << j.dump(2) << '\n';
}

void write_diagram_csv(std::ostream& os, const std::vector<DiagramPoint>& pts) {
    os << "ratio,i_deg\n";
    for (const auto& p : pts) os << format_full(p.ratio) << ',' << format_full(p.i_deg) << '\n';
}

void write_diagram_json(std::ostream& os, const std::vector<DiagramPoint>& pts) {
    nlohmann::json j;
    j["ratio"] = nlohmann::json::array();
    j["i_deg"] = nlohmann::json::array();
    for (const auto& p : pts) {
        j["ratio"].push_back(p.ratio);
        j["i_deg"].push_back(p.i_deg);
    }
    os << j.dump(2) << '\n';
}

void write_ksigma_csv(std::ostream& os, const std::vector<KSigmaPoint>& pts) {
    os << "sigma,i_deg,k\n";
    for (const auto& p : pts)
        os << format_full(p.sigma) << ',' << format_full(p.i_deg) << ',' << format_full(p.k)
           << '\n';
}

void write_ksigma_json(std::ostream& os, const std::vector<KSigmaPoint>& pts) {
    nlohmann::json j;
    for (const char* key : {"sigma", "i_deg", "k"}) j[key] = nlohmann::json::array();
    for (const auto& p : pts) {
        j["sigma"].push_back(p.sigma);
        j["i_deg"].push_back(p.i_deg);
        j["k"].push_back(p.k);
    }
    os << j.dump(2) << '\n';
}

}  // namespace incres::io
