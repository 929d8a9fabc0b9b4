#include "sdecomp/config.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace sdecomp {

namespace {

constexpr std::array<std::string_view, 11> kKnownKeys = {
    "nakx", "naky", "inx", "iny", "ntgrid", "nlambda", "negrid", "nspec", "element_bytes",
    "layout", "nprocs"};

Count integer_field(const nlohmann::json& doc, const char* key, std::optional<Count> fallback) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    if (fallback) return *fallback;
    throw ConfigError(std::string("missing required key '") + key + "'");
  }
  if (!it->is_number_integer()) {
    throw ConfigError(std::string("key '") + key + "' must be an integer");
  }
  return it->get<Count>();
}

}  // namespace

DomainConfig parse_config(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (auto k : kKnownKeys) known = known || k == key;
    if (!known) throw ConfigError("unknown config key '" + key + "'");
  }

  DomainConfig cfg;
  GridShape& g = cfg.shape;
  g.nakx = integer_field(doc, "nakx", std::nullopt);
  g.naky = integer_field(doc, "naky", std::nullopt);
  const Count ntgrid = integer_field(doc, "ntgrid", std::nullopt);
  if (ntgrid < 0) throw ConfigError("ntgrid must be >= 0");
  g.nig = 2 * ntgrid + 1;
  g.nsign = 2;
  g.nlambda = integer_field(doc, "nlambda", std::nullopt);
  g.negrid = integer_field(doc, "negrid", std::nullopt);
  g.nspec = integer_field(doc, "nspec", std::nullopt);
  g.inx = integer_field(doc, "inx", dealiased_full_extent(g.nakx));
  g.iny = integer_field(doc, "iny", dealiased_full_extent(g.naky));
  g.element_bytes = integer_field(doc, "element_bytes", 16);
  if (auto err = validation_error(g)) throw ConfigError(*err);

  if (const auto it = doc.find("layout"); it != doc.end()) {
    if (!it->is_string()) throw ConfigError("key 'layout' must be a string");
    cfg.layout = parse_layout(it->get<std::string>());
    if (!cfg.layout) {
      throw ConfigError("invalid layout '" + it->get<std::string>() + "'; expected one of " +
                        admissible_layouts());
    }
  }
  if (doc.contains("nprocs")) {
    cfg.nprocs = integer_field(doc, "nprocs", std::nullopt);
    if (*cfg.nprocs < 1) throw ConfigError("nprocs must be >= 1");
  }
  return cfg;
}

DomainConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace sdecomp
