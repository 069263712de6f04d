#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fcast {

/// One configuration scalar or array of scalars.
struct ConfigValue {
    enum class Kind { string, number, boolean, array };
    Kind kind = Kind::string;
    std::string text;
    double number = 0.0;
    bool flag = false;
    std::vector<ConfigValue> items;
};

/// A parsed key-value tree from a TOML-style file. Supported subset:
/// `[section]` and `[section.sub]` headers, `key = value` lines,
/// double-quoted strings, numbers, true/false, flat arrays, `#` comments.
class ConfigNode {
public:
    std::map<std::string, ConfigValue> values;
    std::map<std::string, ConfigNode> children;

    [[nodiscard]] bool has(const std::string& key) const;
    [[nodiscard]] bool has_child(const std::string& name) const;
    [[nodiscard]] const ConfigNode& child(const std::string& name) const;

    // Typed accessors; the *_or forms supply a default, the plain forms
    // throw ConfigError when the key is missing or has the wrong type.
    [[nodiscard]] std::string get_string(const std::string& key) const;
    [[nodiscard]] std::string get_string_or(const std::string& key,
                                            const std::string& fallback) const;
    [[nodiscard]] double get_number(const std::string& key) const;
    [[nodiscard]] double get_number_or(const std::string& key, double fallback) const;
    [[nodiscard]] int get_int(const std::string& key) const;
    [[nodiscard]] int get_int_or(const std::string& key, int fallback) const;
    [[nodiscard]] bool get_bool_or(const std::string& key, bool fallback) const;
    [[nodiscard]] std::vector<std::string> get_string_list(const std::string& key) const;
    [[nodiscard]] std::vector<std::string> get_string_list_or(const std::string& key) const;
};

[[nodiscard]] ConfigNode parse_config(std::string_view text);
[[nodiscard]] ConfigNode load_config(const std::string& path);

}  // namespace fcast
