#include "incres/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace incres {

PhysicalModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("config: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("config: malformed JSON in '" + path + "': " + e.what());
    }
    PhysicalModel model;
    try {
        if (j.contains("mu")) model.mu = j.at("mu").get<double>();
        if (j.contains("alpha")) model.alpha = j.at("alpha").get<double>();
        if (j.contains("j2")) model.j2 = j.at("j2").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw Error("config: bad value in '" + path + "': " + e.what());
    }
    model.validate();
    return model;
}

PhysicalModel model_from_env() {
    const char* path = std::getenv(kConfigEnvVar);
    if (path == nullptr || *path == '\0') return PhysicalModel{};
    if (!std::filesystem::exists(path)) return PhysicalModel{};  // absent file: canonical units
    return load_model(path);
}

}  // namespace incres
