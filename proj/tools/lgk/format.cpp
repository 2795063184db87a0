#include "lgk/format.hpp"

#include <vector>

namespace lgk::io {

namespace {

constexpr const char* kBold = "\x1b[1m";
constexpr const char* kReset = "\x1b[0m";

std::string leaf(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool flat(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (e.is_array() || e.is_object()) return false;
    return true;
}

void rows(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) rows(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
        return;
    }
    if (j.is_array() && !flat(j)) {
        if (j.empty()) out.emplace_back(path, "[]");
        for (std::size_t i = 0; i < j.size(); ++i) rows(j[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + leaf(j[i]);
        out.emplace_back(path, s + "]");
        return;
    }
    out.emplace_back(path, leaf(j));
}

}  // namespace

std::string class_count_text(const Int& n) { return n.get_str() + (n == 1 ? " class" : " classes"); }

std::string group_text(const json& target) {
    FinAbGroup g(target.at("free_rank").get<std::size_t>(), vec_from_json(target.at("invariant_factors"), "invariant_factors"));
    return g.to_string();
}

std::string format_table(const json& j, bool color) {
    std::string out;
    auto line = [&](const std::string& key, const std::string& value) {
        out += color ? std::string(kBold) + key + kReset : key;
        out += ": " + value + "\n";
    };
    if (j.is_object() && j.contains("free_rank") && j.contains("invariant_factors")) {
        line("group", group_text(j));
        if (j.contains("count")) out += class_count_text(int_from_json(j["count"], "count")) + "\n";
    }
    std::vector<std::pair<std::string, std::string>> r;
    rows(j, "", r);
    std::size_t width = 0;
    for (const auto& [k, v] : r) width = std::max(width, k.size());
    for (const auto& [k, v] : r) line(k + std::string(width - k.size(), ' '), v);
    return out;
}

}  // namespace lgk::io
