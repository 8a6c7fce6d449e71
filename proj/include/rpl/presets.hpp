#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace rpl {

struct SequenceSpec {
    mpz_class P, Q, U0, U1;
};

// Built-in presets: fibonacci = 1,1,0,1; pell = 2,1,0,1; lucas = 1,1,2,1.
const std::map<std::string, SequenceSpec>& builtin_presets();

// Parses a presets file: one "name = P,Q,U0,U1" per line, '#' comments.
std::map<std::string, SequenceSpec> load_presets_file(const std::string& path);

// "name" from presets (file overrides builtins when path is set), or an
// explicit "P,Q,U0,U1" literal. Returns nullopt if the string is neither.
std::optional<SequenceSpec> resolve_sequence(const std::string& text,
                                             const std::string& presets_path = "");

// Parses "P,Q,U0,U1"; nullopt on malformed input.
std::optional<SequenceSpec> parse_sequence_literal(const std::string& text);

} // namespace rpl
