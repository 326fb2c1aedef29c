#pragma once

#include "grb/presentation.hpp"

#include <string>
#include <vector>

namespace grb {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool pass() const;
    void add(std::string name, bool ok, std::string detail = "");
    void merge(const ValidationReport& o, const std::string& prefix = "");
    std::string summary() const;
};

/// Full structural and semantic validation of a presentation:
/// per-component homogeneity of every law, the tower property,
/// base laws free of fibre coordinates, invertibility declarations
/// for the linear block of every weight class. Structural breakage
/// (duplicate coordinates, weight arity mismatch, missing laws)
/// throws SpecError with a location.
ValidationReport validate(const Presentation& p);

} // namespace grb
