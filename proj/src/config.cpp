#include "qsymb/config.hpp"

#include "qsymb/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>

namespace qsymb {

namespace {

void apply_env(Config& c) {
    auto get = [](const char* name) -> std::optional<long long> {
        const char* v = std::getenv(name);
        if (!v || !*v) return std::nullopt;
        return std::strtoll(v, nullptr, 10);
    };
    if (auto v = get("QSYMB_CAP_TYPE_A_N")) c.cap_type_a_n = static_cast<int>(*v);
    if (auto v = get("QSYMB_CAP_TYPE_B_N")) c.cap_type_b_n = static_cast<int>(*v);
    if (auto v = get("QSYMB_CAP_COLOURED_TOTAL")) c.cap_coloured_total = static_cast<int>(*v);
    if (auto v = get("QSYMB_CAP_ENUM_ITEMS")) c.cap_enum_items = *v;
    if (auto v = get("QSYMB_DEFAULT_ALPHABET")) c.default_alphabet = static_cast<int>(*v);
}

} // namespace

Config Config::load(const std::optional<std::string>& path) {
    Config c;
    if (path) {
        std::ifstream in(*path);
        if (!in) throw Error("cannot open config file: " + *path);
        nlohmann::json j;
        in >> j;
        if (j.contains("cap_type_a_n")) c.cap_type_a_n = j["cap_type_a_n"].get<int>();
        if (j.contains("cap_type_b_n")) c.cap_type_b_n = j["cap_type_b_n"].get<int>();
        if (j.contains("cap_coloured_total")) c.cap_coloured_total = j["cap_coloured_total"].get<int>();
        if (j.contains("cap_enum_items")) c.cap_enum_items = j["cap_enum_items"].get<long long>();
        if (j.contains("default_alphabet")) c.default_alphabet = j["default_alphabet"].get<int>();
    }
    apply_env(c);
    return c;
}

Config& config() {
    static Config c = Config::load();
    return c;
}

} // namespace qsymb
