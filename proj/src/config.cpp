#include "fcast/config.hpp"

#include "fcast/csv.hpp"
#include "fcast/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fcast {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Strips a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_string = !in_string;
        if (line[i] == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

ConfigValue parse_scalar(const std::string& token, int line_no) {
    ConfigValue v;
    if (token.size() >= 2 && token.front() == '"' && token.back() == '"') {
        v.kind = ConfigValue::Kind::string;
        v.text = token.substr(1, token.size() - 2);
        return v;
    }
    if (token == "true" || token == "false") {
        v.kind = ConfigValue::Kind::boolean;
        v.flag = token == "true";
        return v;
    }
    try {
        std::size_t used = 0;
        v.number = std::stod(token, &used);
        if (used == token.size()) {
            v.kind = ConfigValue::Kind::number;
            return v;
        }
    } catch (const std::exception&) {
    }
    throw ConfigError("config line " + std::to_string(line_no) +
                      ": cannot parse value '" + token + "'");
}

ConfigValue parse_value(const std::string& token, int line_no) {
    if (!token.empty() && token.front() == '[') {
        if (token.back() != ']') {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": unterminated array");
        }
        ConfigValue v;
        v.kind = ConfigValue::Kind::array;
        const std::string inner = trim(token.substr(1, token.size() - 2));
        if (inner.empty()) return v;
        std::string item;
        bool in_string = false;
        for (char c : inner) {
            if (c == '"') in_string = !in_string;
            if (c == ',' && !in_string) {
                v.items.push_back(parse_scalar(trim(item), line_no));
                item.clear();
            } else {
                item += c;
            }
        }
        v.items.push_back(parse_scalar(trim(item), line_no));
        return v;
    }
    return parse_scalar(token, line_no);
}

ConfigNode& descend(ConfigNode& root, const std::string& dotted) {
    ConfigNode* node = &root;
    std::stringstream ss(dotted);
    std::string part;
    while (std::getline(ss, part, '.')) {
        part = trim(part);
        if (part.empty()) throw ConfigError("empty section name in [" + dotted + "]");
        node = &node->children[part];
    }
    return *node;
}

}  // namespace

ConfigNode parse_config(std::string_view text) {
    ConfigNode root;
    ConfigNode* current = &root;
    std::stringstream ss{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(ss, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": malformed section header");
            }
            current = &descend(root, line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": empty key or value");
        }
        current->values[key] = parse_value(value, line_no);
    }
    return root;
}

ConfigNode load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

bool ConfigNode::has(const std::string& key) const { return values.count(key) != 0; }

bool ConfigNode::has_child(const std::string& name) const {
    return children.count(name) != 0;
}

const ConfigNode& ConfigNode::child(const std::string& name) const {
    const auto it = children.find(name);
    if (it == children.end()) throw ConfigError("missing config section [" + name + "]");
    return it->second;
}

namespace {

const ConfigValue& require(const std::map<std::string, ConfigValue>& values,
                           const std::string& key, ConfigValue::Kind kind,
                           const char* what) {
    const auto it = values.find(key);
    if (it == values.end()) throw ConfigError("missing config key '" + key + "'");
    if (it->second.kind != kind) {
        throw ConfigError("config key '" + key + "' must be a " + std::string(what));
    }
    return it->second;
}

}  // namespace

std::string ConfigNode::get_string(const std::string& key) const {
    return require(values, key, ConfigValue::Kind::string, "string").text;
}

std::string ConfigNode::get_string_or(const std::string& key,
                                      const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}

double ConfigNode::get_number(const std::string& key) const {
    return require(values, key, ConfigValue::Kind::number, "number").number;
}

double ConfigNode::get_number_or(const std::string& key, double fallback) const {
    return has(key) ? get_number(key) : fallback;
}

int ConfigNode::get_int(const std::string& key) const {
    const double v = get_number(key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError("config key '" + key + "' must be an integer");
    }
    return i;
}

int ConfigNode::get_int_or(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}

bool ConfigNode::get_bool_or(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    return require(values, key, ConfigValue::Kind::boolean, "boolean").flag;
}

std::vector<std::string> ConfigNode::get_string_list(const std::string& key) const {
    const auto& v = require(values, key, ConfigValue::Kind::array, "array");
    std::vector<std::string> out;
    out.reserve(v.items.size());
    for (const auto& item : v.items) {
        if (item.kind != ConfigValue::Kind::string) {
            throw ConfigError("config key '" + key + "' must be an array of strings");
        }
        out.push_back(item.text);
    }
    return out;
}

std::vector<std::string> ConfigNode::get_string_list_or(const std::string& key) const {
    if (!has(key)) return {};
    return get_string_list(key);
}

}  // namespace fcast
