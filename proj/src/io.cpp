#include "symsphere/io.hpp"

#include "symsphere/bloch.hpp"
#include "symsphere/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace symsphere {

std::string json_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

SymmetricState state_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw OutOfRange(std::string("state is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw OutOfRange("state must be a JSON object");
    const bool has_dicke = j.contains("dicke");
    const bool has_mps = j.contains("mps");
    if (has_dicke == has_mps)
        throw OutOfRange("state needs exactly one of \"dicke\" and \"mps\"");

    if (has_dicke) {
        if (!j.contains("n") || !j["n"].is_number_integer())
            throw OutOfRange("the \"dicke\" layout requires an integer \"n\"");
        const int n = j["n"].get<int>();
        if (n < 1)
            throw OutOfRange("n must be at least 1");
        const auto& arr = j["dicke"];
        if (!arr.is_array() || static_cast<int>(arr.size()) != n + 1)
            throw OutOfRange("\"dicke\" must be an array of n+1 pairs");
        std::vector<cplx> coeffs;
        coeffs.reserve(arr.size());
        for (const auto& c : arr) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
                throw OutOfRange("\"dicke\" entries must be [re, im] pairs");
            coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
        }
        return SymmetricState(std::move(coeffs));
    }

    const auto& arr = j["mps"];
    if (!arr.is_array() || arr.empty())
        throw OutOfRange("\"mps\" must be a nonempty array of points");
    if (j.contains("n") &&
        (!j["n"].is_number_integer() || j["n"].get<int>() != static_cast<int>(arr.size())))
        throw OutOfRange("\"n\" disagrees with the number of points");
    std::vector<BlochPoint> pts;
    pts.reserve(arr.size());
    for (const auto& p : arr) {
        if (!p.is_object() || !p.contains("theta") || !p.contains("phi") ||
            !p["theta"].is_number() || !p["phi"].is_number())
            throw OutOfRange("\"mps\" entries must be {\"theta\", \"phi\"} objects");
        pts.emplace_back(p["theta"].get<double>(), p["phi"].get<double>());
    }
    return state_from_mps(pts);
}

SymmetricState load_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw OutOfRange("cannot read state file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return state_from_json(buf.str());
}

std::string state_to_json(const SymmetricState& s) {
    std::string out = "{\"n\":" + std::to_string(s.n()) + ",\"dicke\":[";
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        if (k)
            out += ",";
        out += "[" + json_number(s.coeffs[k].real()) + "," + json_number(s.coeffs[k].imag()) + "]";
    }
    out += "]}";
    return out;
}

} // namespace symsphere
