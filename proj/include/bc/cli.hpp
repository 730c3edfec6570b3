#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bc/classify.hpp"
#include "bc/render.hpp"

namespace bc {

struct RunConfig {
    std::string expression;
    std::string variable = "z";
    std::vector<std::string> parameters;
    std::map<std::string, double> bindings;
    std::string method = "auto";  // auto | real | parametric
    bool semialgebraic = false;
    bool classify = false;
    bool keep_denested = false;  // disable the sign-certificate removal
    std::optional<std::string> json_path;
    std::optional<std::string> svg_path;
    Viewport viewport;
    ClassifyOptions classify_opts;
};

// Executes one computation: parse, dispatch, report. Cuts go to `out`,
// warnings and errors to `err`. Returns the process exit status: 0 success,
// 1 parse/config error, 2 internal failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bc
