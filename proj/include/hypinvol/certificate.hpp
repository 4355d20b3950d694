#pragma once

#include <map>
#include <string>
#include <vector>

// A named quantitative claim with computed values, residuals, a tolerance
// and a pass/fail verdict. Certificates serialize to JSON with sorted keys
// and 12-significant-digit decimals so reruns are byte-identical.

namespace hypinvol {

struct Certificate {
    std::string claim_id;
    std::map<std::string, double> values;
    std::map<std::string, double> residuals;
    double tolerance = 1e-9;
    std::vector<std::string> caveats;

    // pass iff every |residual| <= tolerance. Caveats do not affect the
    // verdict; they record scope notes alongside a passing claim.
    bool pass() const;
    std::string verdict() const { return pass() ? "pass" : "fail"; }

    std::string to_json() const;
};

// %.12g formatting shared by certificate JSON and spectrum CSV output.
std::string format_real(double v);

std::string json_escape(const std::string& s);

}  // namespace hypinvol
