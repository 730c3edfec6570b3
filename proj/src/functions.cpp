#include "bc/functions.hpp"

namespace bc {

const FunctionRegistry& FunctionRegistry::instance() {
    static FunctionRegistry reg;
    return reg;
}

FunctionRegistry::FunctionRegistry() {
    symbols_ = {
        {"log", 0},     {"exp", 0},     {"sin", 0},     {"cos", 0},
        {"arcsin", 0},  {"arccos", 0},  {"arctan", 0},  {"arccot", 0},
        {"arcsinh", 0}, {"arccosh", 0}, {"arctanh", 0}, {"arccoth", 0},
        {"BesselJ", 1},
    };
}

std::optional<FunctionSymbol> FunctionRegistry::find(const std::string& name) const {
    for (const auto& s : symbols_)
        if (s.name == name) return s;
    return std::nullopt;
}

}  // namespace bc
