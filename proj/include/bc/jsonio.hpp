#pragma once

#include <string>
#include <vector>

#include "bc/cuts.hpp"

namespace bc {

// Top-level document context carried alongside the cut set.
struct CutSetMeta {
    std::string expression;
    std::string variable = "z";
    std::string method = "auto";
    std::vector<std::string> parameters;
};

// Serializes a cut set with enough exact structure (defining polynomials,
// rational endpoints) that cutset_from_json reproduces it exactly.
std::string cutset_to_json(const CutSet& cs, const CutSetMeta& meta);

struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CutSet cutset_from_json(const std::string& text, CutSetMeta* meta = nullptr);

}  // namespace bc
