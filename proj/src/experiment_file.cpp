#include "qlls/experiment_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qlls {
namespace {

std::string trim(const std::string& s) {
    const std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    const std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

long long parse_integer(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long long out = 0;
    try {
        out = std::stoll(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("key '" + key + "' needs an integer, got '" + value + "'");
    }
    if (used != value.size()) {
        throw std::invalid_argument("key '" + key + "' needs an integer, got '" + value + "'");
    }
    return out;
}

std::uint64_t parse_seed(const std::string& value) {
    std::size_t used = 0;
    unsigned long long out = 0;
    try {
        out = std::stoull(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("key 'master_seed' needs an unsigned integer, got '" + value +
                                    "'");
    }
    if (used != value.size()) {
        throw std::invalid_argument("key 'master_seed' needs an unsigned integer, got '" + value +
                                    "'");
    }
    return out;
}

std::vector<long long> parse_integer_list(const std::string& key, const std::string& value) {
    std::vector<long long> out;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        out.push_back(parse_integer(key, trim(item)));
    }
    if (out.empty()) {
        throw std::invalid_argument("key '" + key + "' needs at least one integer");
    }
    return out;
}

const DesignSet& design_from_token(const std::string& token, int n) {
    if (token == "clifford") {
        return clifford_design();
    }
    if (token == "icosahedral") {
        return icosahedral_design();
    }
    if (token == "auto") {
        return n + 1 <= clifford_design().declared_t ? clifford_design() : icosahedral_design();
    }
    throw std::invalid_argument("unknown design '" + token +
                                "' (expected clifford, icosahedral, or auto)");
}

}  // namespace

ExperimentFile ExperimentFile::parse(std::istream& in) {
    static const std::vector<std::string> known = {"n",       "N",      "M",         "M_list",
                                                   "K",       "measure", "design",    "estimator",
                                                   "master_seed", "output"};
    std::map<std::string, std::string> entries;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(line_number) +
                                        ": expected key=value");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw std::invalid_argument("line " + std::to_string(line_number) +
                                        ": unknown key '" + key + "'");
        }
        if (value.empty()) {
            throw std::invalid_argument("line " + std::to_string(line_number) + ": key '" + key +
                                        "' has no value");
        }
        if (!entries.emplace(key, value).second) {
            throw std::invalid_argument("line " + std::to_string(line_number) +
                                        ": duplicate key '" + key + "'");
        }
    }

    for (const char* required : {"n", "K", "measure", "estimator"}) {
        if (entries.find(required) == entries.end()) {
            throw std::invalid_argument(std::string("missing required key '") + required + "'");
        }
    }
    const bool has_m = entries.count("M") != 0;
    const bool has_m_list = entries.count("M_list") != 0;
    if (has_m == has_m_list) {
        throw std::invalid_argument("exactly one of M and M_list is required");
    }

    ExperimentFile out;
    out.base.n = static_cast<int>(parse_integer("n", entries.at("n")));
    out.base.N = entries.count("N") ? static_cast<int>(parse_integer("N", entries.at("N"))) : 50;
    out.base.K = static_cast<int>(parse_integer("K", entries.at("K")));
    out.base.measure = MeasureSpec::from_name(entries.at("measure"));
    out.base.estimator = estimator_from_name(entries.at("estimator"));
    out.base.master_seed = entries.count("master_seed") ? parse_seed(entries.at("master_seed")) : 1;
    out.base.design = &design_from_token(entries.count("design") ? entries.at("design") : "auto",
                                         out.base.n);
    out.m_list = has_m ? parse_integer_list("M", entries.at("M"))
                       : parse_integer_list("M_list", entries.at("M_list"));
    out.base.M = out.m_list.front();
    if (entries.count("output")) {
        out.output = entries.at("output");
    }
    out.base.validate();
    return out;
}

ExperimentFile ExperimentFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    return parse(in);
}

}  // namespace qlls
