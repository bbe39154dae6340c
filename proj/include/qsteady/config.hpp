#pragma once

#include <map>
#include <string>

#include "qsteady/sweep.hpp"

namespace qsteady {

/// Flat INI-style key/value text with [system], [reservoir1], [reservoir2],
/// [sweep] and [output] sections. Keys are listed in the README; '#' and
/// ';' start comments.
SweepConfig parse_config_text(const std::string& text);
SweepConfig load_config(const std::string& path);

/// Applies one "section.key=value" override on top of a parsed config;
/// used to let CLI flags shadow file values.
void apply_config_entry(SweepConfig& config, const std::string& section,
                        const std::string& key, const std::string& value);

std::string render_config(const SweepConfig& config);  // round-trippable text

}  // namespace qsteady
