#include "pkn/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace pkn {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

std::vector<std::string> EngineConfig::apply(
    const std::map<std::string, std::string>& kv) {
    std::vector<std::string> unknown;
    for (const auto& [key, value] : kv) {
        if (key == "few_threshold") few_threshold = std::stod(value);
        else if (key == "many_threshold") many_threshold = std::stod(value);
        else if (key == "most_threshold") most_threshold = std::stod(value);
        else if (key == "alpha") alpha = std::stod(value);
        else if (key == "crossfade_fraction") crossfade_fraction = std::stod(value);
        else if (key == "ceiling") ceiling = std::stod(value);
        else if (key == "max_depth" || key == "depth") max_depth = std::stoi(value);
        else if (key == "min_certainty") min_certainty = std::stod(value);
        else if (key == "candidate_cap") candidate_cap = std::stoi(value);
        else if (key == "weight_specialization") weight_specialization = std::stod(value);
        else if (key == "weight_generalization") weight_generalization = std::stod(value);
        else if (key == "weight_similarity") weight_similarity = std::stod(value);
        else if (key == "weight_strength") weight_strength = std::stod(value);
        else if (key == "weight_inverse") weight_inverse = std::stod(value);
        else if (key == "weight_analogy") weight_analogy = std::stod(value);
        else if (key == "undecided_band") undecided_band = std::stod(value);
        else if (key == "functional_descriptors") functional_descriptors = split_list(value);
        else unknown.push_back(key);
    }
    return unknown;
}

bool EngineConfig::load_file(const std::string& path, std::string* error) {
    std::ifstream in(path);
    if (!in) {
        if (error) *error = "cannot open config file: " + path;
        return false;
    }
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (error) *error = "bad config line: " + line;
            return false;
        }
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    auto unknown = apply(kv);
    if (!unknown.empty()) {
        if (error) *error = "unknown config key: " + unknown.front();
        return false;
    }
    return true;
}

void EngineConfig::load_env() {
    static const std::pair<const char*, const char*> vars[] = {
        {"PKN_DEPTH", "max_depth"},
        {"PKN_MIN_CERTAINTY", "min_certainty"},
        {"PKN_ALPHA", "alpha"},
        {"PKN_FEW", "few_threshold"},
        {"PKN_MANY", "many_threshold"},
        {"PKN_MOST", "most_threshold"},
        {"PKN_CEILING", "ceiling"},
        {"PKN_CROSSFADE", "crossfade_fraction"},
        {"PKN_FUNCTIONAL", "functional_descriptors"},
    };
    std::map<std::string, std::string> kv;
    for (const auto& [env, key] : vars) {
        if (const char* v = std::getenv(env)) kv[key] = v;
    }
    apply(kv);
}

}  // namespace pkn
