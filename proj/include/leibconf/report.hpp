#pragma once

#include <string>
#include <vector>

namespace leibconf {

// One violated identity: which identity, on which basis tuple, and the
// nonzero residual (printed canonical form).
struct Failure {
    std::string identity;
    std::vector<std::string> where;
    std::string residual;
};

struct CheckReport {
    std::string check;
    std::vector<Failure> failures;
    long long checked = 0;
    double wall_ms = 0;

    bool pass() const { return failures.empty(); }
    void add(std::string identity, std::vector<std::string> where, std::string residual) {
        failures.push_back({std::move(identity), std::move(where), std::move(residual)});
    }
    void merge(CheckReport o) {
        checked += o.checked;
        for (auto& f : o.failures) failures.push_back(std::move(f));
    }
    std::string summary() const;
};

std::string join_names(const std::vector<std::string>& names, const std::string& sep = ", ");

}  // namespace leibconf
