#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "xxz/analysis.hpp"
#include "xxz/code.hpp"

namespace xxz {

/// Code-spec files are key/value text (see README) or an equivalent JSON
/// document; parse_spec_text sniffs which. d = 2 parses to a CodeSpec,
/// d > 2 to a QuditCodeSpec. A torus/cyclic dimension may be the placeholder
/// "L", resolved through size_binding (used by sweeps).
AnySpec parse_spec_text(const std::string& text,
                        const std::string& origin = "<string>",
                        std::optional<int> size_binding = {});
AnySpec parse_spec_file(const std::string& path,
                        std::optional<int> size_binding = {});

/// Canonical JSON form; parsing it back yields an identical spec.
std::string serialize_spec(const AnySpec& spec);

struct PresetParams {
  int size = 2;             // haah-a, haah-b, trivial
  int n = 6, a = 2, b = 4;  // lr-gcd
};

/// Built-in defining data: "haah-a", "haah-b", "lr-gcd", "trivial".
bool is_preset_name(const std::string& name);
AnySpec make_preset(const std::string& name, const PresetParams& params = {});

/// Preset name or spec-file path.
AnySpec load_spec(const std::string& source, const PresetParams& params = {},
                  std::optional<int> size_binding = {});

/// Sweep expansion: one labeled spec per size (presets and L-parameterized
/// files) or per (n, a, b) tuple (lr-gcd).
std::vector<std::pair<std::string, AnySpec>> expand_sweep_sizes(
    const std::string& source, const std::vector<int>& sizes);
std::vector<std::pair<std::string, AnySpec>> expand_sweep_tuples(
    const std::vector<std::array<int, 3>>& tuples);

}  // namespace xxz
