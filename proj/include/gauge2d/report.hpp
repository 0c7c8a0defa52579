#pragma once

#include "gauge2d/cartan.hpp"
#include "gauge2d/pipeline.hpp"

#include <string>
#include <vector>

namespace gauge2d {

// Ordered key/value tree behind both report formats.  Sections carry
// children and no value; leaves carry a value and no children.  Identical
// analyses build identical trees, so the machine rendering is byte-stable.
struct ReportNode {
    std::string key;
    std::string value;
    std::vector<ReportNode> children;

    // The returned reference is only good until the next sibling is added.
    ReportNode& add(std::string k, std::string v = "");
    ReportNode& add(ReportNode child);
};

ReportNode system_report(const CartanSystem& sys);
ReportNode analysis_report(const PipelineResult& r);
ReportNode reduction_report(const PfaffianInput& input, const PfaffianReduction& red);

// Machine rendering: one node per line, two-space indentation, `key = value`
// leaves.  Text rendering: the same tree dressed up for reading.
std::string to_machine(const ReportNode& root);
std::string to_text(const ReportNode& root);

} // namespace gauge2d
