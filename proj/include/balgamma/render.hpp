#ifndef BALGAMMA_RENDER_HPP
#define BALGAMMA_RENDER_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "balgamma/bijections.hpp"
#include "balgamma/digraph.hpp"
#include "balgamma/enumeration.hpp"
#include "balgamma/verify.hpp"

namespace balgamma {

enum class Format { table, json, csv };

// {"vertices":[ids], "arcs":[{"label":..,"source":id,"target":id}]}
nlohmann::json digraph_to_json(const Multidigraph& d);
Multidigraph digraph_from_json(const nlohmann::json& j);

// {"vertices":[ids], "max_k":int, "gamma":[[counts per k] per vertex], "uniform_columns":[bool per k]}
nlohmann::json gamma_to_json(const Multidigraph& d, const GammaTable& table);
std::pair<std::vector<std::string>, GammaTable> gamma_from_json(const nlohmann::json& j);

std::string render_gamma(const Multidigraph& d, const GammaTable& table, Format format);

nlohmann::json trace_to_json(const Multidigraph& d, const InvolutionTrace& trace);

nlohmann::json report_to_json(const VerifyReport& report);
std::string render_report(const Multidigraph& d, const VerifyReport& report, Format format);

}  // namespace balgamma

#endif  // BALGAMMA_RENDER_HPP
