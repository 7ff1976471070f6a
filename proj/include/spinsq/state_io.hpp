// JSON state files: {"N": <int>, "amplitudes": [[re, im], ...]} with N+1
// entries.  The loader renormalizes when the norm is within 1e-6 of 1 and
// rejects anything worse.
#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinsq/core.hpp"
#include "spinsq/dicke.hpp"

namespace spinsq {

inline SymmetricState state_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("amplitudes"))
        throw invalid_input("state file: expected an object with \"N\" and \"amplitudes\"");
    if (!j["N"].is_number_integer()) throw invalid_input("state file: \"N\" must be an integer");
    const int n_particles = j["N"].get<int>();
    const auto& arr = j["amplitudes"];
    if (!arr.is_array()) throw invalid_input("state file: \"amplitudes\" must be an array");
    std::vector<Complex> amps;
    amps.reserve(arr.size());
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
            throw invalid_input("state file: each amplitude must be a [re, im] pair");
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return SymmetricState::from_raw_amplitudes(n_particles, std::move(amps));
}

inline SymmetricState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("state file: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input("state file: " + std::string(e.what()));
    }
    return state_from_json(j);
}

inline nlohmann::json state_to_json(const SymmetricState& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int n = 0; n <= s.n_particles(); ++n)
        arr.push_back({s.amplitude(n).real(), s.amplitude(n).imag()});
    return nlohmann::json{{"N", s.n_particles()}, {"amplitudes", arr}};
}

}  // namespace spinsq
