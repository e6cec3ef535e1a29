#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetawalk/graph.hpp"
#include "zetawalk/series.hpp"

namespace zetawalk {

enum class WeightPreset { ihara, bartholdi, mizuno_sato, sato, grover, custom };

std::string preset_name(WeightPreset p);
WeightPreset preset_from_name(const std::string& name);

// Per-arc weight pair (tau, upsilon): tau weighs an adjacency-following
// step, upsilon the step onto the mate arc. The preset tag records which
// specialization the arrays satisfy.
struct WeightScheme {
    WeightPreset preset = WeightPreset::custom;
    std::vector<Complex> tau;
    std::vector<Complex> upsilon;
    std::optional<Complex> bartholdi_q;

    std::size_t n_arcs() const { return tau.size(); }
};

struct WeightParams {
    std::optional<Complex> q;                     // bartholdi deformation
    std::optional<std::vector<Complex>> tau;      // custom (required) or preset override
    std::optional<std::vector<Complex>> upsilon;  // custom only
};

// Populates the arrays for a preset:
//   ihara        tau = upsilon = 1
//   bartholdi    upsilon = (q - 1) tau, tau defaults to 1
//   mizuno_sato  upsilon = tau, tau defaults to 1
//   sato         upsilon = 1, tau defaults to 1
//   grover       upsilon = 1, tau(a) = 2 / deg(tail(a))
//   custom       both arrays required
WeightScheme make_weights(const SymmetricDigraph& d, WeightPreset preset,
                          const WeightParams& params = {});

// Throws InputError if the arrays violate the tagged preset's constraint.
void validate_preset(const SymmetricDigraph& d, const WeightScheme& w, double tol = 1e-12);

// Weight file format: {"preset": "<name>", "params": {...}} or
// {"preset": "custom", "tau": [[re, im], ...], "upsilon": [[re, im], ...]}
// with arrays in arc order.
WeightScheme parse_weights(const SymmetricDigraph& d, const std::string& json_text);
WeightScheme load_weights_file(const SymmetricDigraph& d, const std::string& path);
std::string serialize_weights(const WeightScheme& w);

}  // namespace zetawalk
