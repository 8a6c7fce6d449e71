#include "rpl/presets.hpp"

#include <fstream>
#include <sstream>

#include "rpl/errors.hpp"

namespace rpl {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_int(const std::string& s, mpz_class& out) {
    std::string t = trim(s);
    if (t.empty()) return false;
    return out.set_str(t, 10) == 0;
}

} // namespace

const std::map<std::string, SequenceSpec>& builtin_presets() {
    static const std::map<std::string, SequenceSpec> presets = {
        {"fibonacci", {1, 1, 0, 1}},
        {"pell", {2, 1, 0, 1}},
        {"lucas", {1, 1, 2, 1}},
    };
    return presets;
}

std::optional<SequenceSpec> parse_sequence_literal(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 4) return std::nullopt;
    SequenceSpec spec;
    if (!parse_int(parts[0], spec.P) || !parse_int(parts[1], spec.Q) ||
        !parse_int(parts[2], spec.U0) || !parse_int(parts[3], spec.U1))
        return std::nullopt;
    return spec;
}

std::map<std::string, SequenceSpec> load_presets_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open presets file: " + path);
    std::map<std::string, SequenceSpec> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidInput("presets file " + path + ": missing '=' on line " +
                               std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        auto spec = parse_sequence_literal(line.substr(eq + 1));
        if (key.empty() || !spec)
            throw InvalidInput("presets file " + path + ": bad entry on line " +
                               std::to_string(lineno));
        out[key] = *spec;
    }
    return out;
}

std::optional<SequenceSpec> resolve_sequence(const std::string& text,
                                             const std::string& presets_path) {
    std::map<std::string, SequenceSpec> table = builtin_presets();
    if (!presets_path.empty())
        for (auto& [k, v] : load_presets_file(presets_path)) table[k] = v;
    auto it = table.find(text);
    if (it != table.end()) return it->second;
    return parse_sequence_literal(text);
}

} // namespace rpl
