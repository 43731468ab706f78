#pragma once

#include <string>
#include <vector>

namespace uniton {

struct CheckReport {
    std::string check;
    std::string backend;  // "exact" or "binary128"
    bool applicable = true;
    bool pass = true;
    std::vector<std::string> points;
    /// Float checks: relative residual per point at h; exact checks: 0 or 1 per point.
    std::vector<double> residuals;
    /// Float checks: the same residuals at h/2.
    std::vector<double> residuals_half;
    /// Float checks: residual(h/2) <= factor * residual(h) + floor at every point.
    bool contraction = true;
    std::vector<std::string> details;

    double max_residual() const;
    void fail(std::string why);
    static CheckReport not_applicable(std::string check, std::string backend, std::string why);
};

}  // namespace uniton
