#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "sdecomp/grid.hpp"

namespace sdecomp {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Domain configuration, read from a flat JSON object:
 *
 *     { "nakx": 32, "naky": 32, "ntgrid": 15, "nlambda": 32, "negrid": 8,
 *       "nspec": 2, "inx": 48, "iny": 48, "element_bytes": 16,
 *       "layout": "xyles", "nprocs": 2048 }
 *
 * nig = 2 * ntgrid + 1. inx / iny default to ceil(3 nakx / 2) / ceil(3 naky / 2),
 * element_bytes to 16. layout and nprocs are optional defaults for the
 * command line. Unknown keys are rejected.
 */
struct DomainConfig {
  GridShape shape;
  std::optional<Layout> layout;
  std::optional<Count> nprocs;
};

DomainConfig parse_config(std::string_view json_text);
DomainConfig load_config(const std::filesystem::path& path);

}  // namespace sdecomp
