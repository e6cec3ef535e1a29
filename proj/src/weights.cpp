#include "zetawalk/weights.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zetawalk/json_io.hpp"

namespace zetawalk {

std::string preset_name(WeightPreset p) {
    switch (p) {
        case WeightPreset::ihara: return "ihara";
        case WeightPreset::bartholdi: return "bartholdi";
        case WeightPreset::mizuno_sato: return "mizuno_sato";
        case WeightPreset::sato: return "sato";
        case WeightPreset::grover: return "grover";
        case WeightPreset::custom: return "custom";
    }
    return "custom";
}

WeightPreset preset_from_name(const std::string& name) {
    if (name == "ihara") return WeightPreset::ihara;
    if (name == "bartholdi") return WeightPreset::bartholdi;
    if (name == "mizuno_sato") return WeightPreset::mizuno_sato;
    if (name == "sato") return WeightPreset::sato;
    if (name == "grover") return WeightPreset::grover;
    if (name == "custom") return WeightPreset::custom;
    throw InputError("unknown weight preset '" + name + "'");
}

namespace {

std::vector<Complex> sized_or_default(const std::optional<std::vector<Complex>>& arr,
                                      std::size_t n, const char* name) {
    if (!arr) return std::vector<Complex>(n, Complex{1.0, 0.0});
    if (arr->size() != n)
        throw InputError(std::string(name) + " array has " + std::to_string(arr->size()) +
                         " entries, expected " + std::to_string(n));
    return *arr;
}

}  // namespace

WeightScheme make_weights(const SymmetricDigraph& d, WeightPreset preset,
                          const WeightParams& params) {
    const std::size_t n = d.n_arcs();
    WeightScheme w;
    w.preset = preset;
    switch (preset) {
        case WeightPreset::ihara:
            w.tau.assign(n, Complex{1.0, 0.0});
            w.upsilon.assign(n, Complex{1.0, 0.0});
            break;
        case WeightPreset::bartholdi: {
            if (!params.q) throw InputError("bartholdi preset requires parameter q");
            w.bartholdi_q = *params.q;
            w.tau = sized_or_default(params.tau, n, "tau");
            w.upsilon.resize(n);
            for (std::size_t a = 0; a < n; ++a) w.upsilon[a] = (*params.q - 1.0) * w.tau[a];
            break;
        }
        case WeightPreset::mizuno_sato:
            w.tau = sized_or_default(params.tau, n, "tau");
            w.upsilon = w.tau;
            break;
        case WeightPreset::sato:
            w.tau = sized_or_default(params.tau, n, "tau");
            w.upsilon.assign(n, Complex{1.0, 0.0});
            break;
        case WeightPreset::grover:
            w.tau.resize(n);
            for (std::size_t a = 0; a < n; ++a)
                w.tau[a] = 2.0 / static_cast<double>(d.degree(d.tail(static_cast<ArcId>(a))));
            w.upsilon.assign(n, Complex{1.0, 0.0});
            break;
        case WeightPreset::custom:
            if (!params.tau || !params.upsilon)
                throw InputError("custom preset requires tau and upsilon arrays");
            w.tau = sized_or_default(params.tau, n, "tau");
            w.upsilon = sized_or_default(params.upsilon, n, "upsilon");
            break;
    }
    return w;
}

void validate_preset(const SymmetricDigraph& d, const WeightScheme& w, double tol) {
    const std::size_t n = d.n_arcs();
    if (w.tau.size() != n || w.upsilon.size() != n)
        throw InputError("weight arrays sized " + std::to_string(w.tau.size()) + "/" +
                         std::to_string(w.upsilon.size()) + ", expected " + std::to_string(n));
    auto near = [tol](Complex a, Complex b) { return std::abs(a - b) <= tol; };
    for (std::size_t a = 0; a < n; ++a) {
        switch (w.preset) {
            case WeightPreset::ihara:
                if (!near(w.tau[a], 1.0) || !near(w.upsilon[a], 1.0))
                    throw InputError("ihara preset requires tau = upsilon = 1");
                break;
            case WeightPreset::bartholdi:
                if (!w.bartholdi_q) throw InputError("bartholdi preset missing q");
                if (!near(w.upsilon[a], (*w.bartholdi_q - 1.0) * w.tau[a]))
                    throw InputError("bartholdi preset requires upsilon = (q-1) tau");
                break;
            case WeightPreset::mizuno_sato:
                if (!near(w.tau[a], w.upsilon[a]))
                    throw InputError("mizuno_sato preset requires tau = upsilon");
                break;
            case WeightPreset::sato:
                if (!near(w.upsilon[a], 1.0))
                    throw InputError("sato preset requires upsilon = 1");
                break;
            case WeightPreset::grover: {
                const double expect =
                    2.0 / static_cast<double>(d.degree(d.tail(static_cast<ArcId>(a))));
                if (!near(w.upsilon[a], 1.0) || !near(w.tau[a], expect))
                    throw InputError("grover preset requires upsilon = 1, tau = 2/deg(tail)");
                break;
            }
            case WeightPreset::custom: break;
        }
    }
}

namespace {

std::vector<Complex> parse_complex_array(const nlohmann::json& j, const char* name) {
    if (!j.is_array()) throw InputError(std::string(name) + " must be an array of [re, im]");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw InputError(std::string(name) + " entries must be [re, im] pairs");
        out.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return out;
}

}  // namespace

WeightScheme parse_weights(const SymmetricDigraph& d, const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("weight file: ") + e.what(), 0);
    }
    if (!j.is_object() || !j.contains("preset"))
        throw InputError("weight file must be an object with a 'preset' field");
    const WeightPreset preset = preset_from_name(j["preset"].get<std::string>());

    WeightParams params;
    if (j.contains("params") && j["params"].is_object()) {
        const auto& p = j["params"];
        if (p.contains("q")) {
            if (p["q"].is_number())
                params.q = Complex{p["q"].get<double>(), 0.0};
            else
                params.q = Complex{p["q"][0].get<double>(), p["q"][1].get<double>()};
        }
        if (p.contains("tau")) params.tau = parse_complex_array(p["tau"], "tau");
    }
    if (j.contains("tau")) params.tau = parse_complex_array(j["tau"], "tau");
    if (j.contains("upsilon")) params.upsilon = parse_complex_array(j["upsilon"], "upsilon");

    WeightScheme w = make_weights(d, preset, params);
    validate_preset(d, w);
    return w;
}

WeightScheme load_weights_file(const SymmetricDigraph& d, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open weight file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_weights(d, buf.str());
}

std::string serialize_weights(const WeightScheme& w) {
    nlohmann::ordered_json j;
    j["preset"] = "custom";
    auto arr = [](const std::vector<Complex>& v) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (Complex z : v) a.push_back(complex_to_json(z));
        return a;
    };
    j["tau"] = arr(w.tau);
    j["upsilon"] = arr(w.upsilon);
    return dump_json(j);
}

}  // namespace zetawalk
