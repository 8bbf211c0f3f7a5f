#pragma once
// Plain-text key=value experiment configuration.
//
// Keys: n, N, M (single value or comma list), M_list, K, measure, design,
// estimator, master_seed, output. Unknown or duplicate keys are rejected;
// n, M (or M_list), K, measure, estimator are required. design defaults to
// the smallest set whose order covers n + 1; N defaults to 50.

#include <iosfwd>
#include <string>
#include <vector>

#include "qlls/protocol.hpp"

namespace qlls {

struct ExperimentFile {
    RunConfig base;                  // M mirrors m_list.front()
    std::vector<long long> m_list;   // ascending not required, preserved as given
    std::string output;              // empty = standard output

    static ExperimentFile parse(std::istream& in);
    static ExperimentFile load(const std::string& path);
};

}  // namespace qlls
