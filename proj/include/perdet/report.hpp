#pragma once

#include <json.hpp>

#include <complex>
#include <string>

namespace perdet {

// Report schema:
// {"check": str, "inputs": obj, "lhs": any, "rhs": any, "residual": float|null,
//  "pass": bool, "seconds": float, "diagnostics": obj}
struct CheckReport {
    std::string check;
    nlohmann::ordered_json inputs;
    nlohmann::ordered_json lhs;
    nlohmann::ordered_json rhs;
    std::optional<double> residual;
    bool pass = false;
    double seconds = 0.0;
    nlohmann::ordered_json diagnostics = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["check"] = check;
        j["inputs"] = inputs;
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        if (residual) j["residual"] = *residual;
        else j["residual"] = nullptr;
        j["pass"] = pass;
        j["seconds"] = seconds;
        j["diagnostics"] = diagnostics;
        return j;
    }
};

inline nlohmann::ordered_json complex_json(std::complex<double> z) {
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

}  // namespace perdet
