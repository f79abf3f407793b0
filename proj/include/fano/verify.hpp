#ifndef FANO_VERIFY_HPP
#define FANO_VERIFY_HPP

#include <string>
#include <vector>

#include "fano/serialize.hpp"

namespace fano {

struct CheckResult {
    std::string id;
    std::string detail;    // what the check establishes
    std::string expected;  // exact expected value, printed
    std::string computed;  // exact computed value, printed
    bool pass = false;
    double ms = 0;
};

struct Report {
    int n = 0;
    std::string suite;
    std::vector<CheckResult> checks;
    double ms = 0;

    bool ok() const;
};

/// Known suite names: lattice, cones, mcd, bridge.
bool known_suite(const std::string& suite);

/// Runs one suite; throws std::invalid_argument for unknown names or odd n.
Report verify_suite(const std::string& suite, int n);

/// Runs every suite, fanning out over a small worker pool. The pool size is
/// read from the FANO_WORKERS environment variable (default: hardware).
std::vector<Report> verify_all(int n);

int worker_count();

json report_json(const Report& r);

}  // namespace fano

#endif
