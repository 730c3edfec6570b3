#include "bc/defining_cuts.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bc {

namespace {

ExtendedInterval iv(Endpoint lo, Endpoint hi) {
    return {std::move(lo), std::move(hi), true, true};
}

DefiningCut real_cut(Endpoint lo, Endpoint hi) {
    return {Axis::Real, iv(std::move(lo), std::move(hi))};
}
DefiningCut imag_cut(Endpoint lo, Endpoint hi) {
    return {Axis::Imag, iv(std::move(lo), std::move(hi))};
}
// Variants with a closed finite endpoint, used where the principal branch
// has a logarithmic singularity at the endpoint (arctan family).
DefiningCut real_cut_closed(Endpoint lo, Endpoint hi, bool lo_open, bool hi_open) {
    return {Axis::Real, {std::move(lo), std::move(hi), lo_open, hi_open}};
}
DefiningCut imag_cut_closed(Endpoint lo, Endpoint hi, bool lo_open, bool hi_open) {
    return {Axis::Imag, {std::move(lo), std::move(hi), lo_open, hi_open}};
}

Endpoint ninf() { return Endpoint::neg_inf(); }
Endpoint pinf() { return Endpoint::pos_inf(); }
Endpoint at(long long r) { return Endpoint::exact(Rat(r)); }

}  // namespace

const DefiningCutTable& DefiningCutTable::instance() {
    static DefiningCutTable table;
    return table;
}

DefiningCutTable::DefiningCutTable() {
    // Conventions follow Maple's FunctionAdvisor table. Endpoints at which the
    // principal branch is continuous (or singular) are open; the table/eval
    // consistency test in the suite is the arbiter for every entry.
    entries_ = {
        {{"log", 0}, {real_cut(ninf(), at(0))}, std::nullopt, "negative real axis"},
        {{"exp", 0}, {}, std::nullopt, "entire"},
        {{"sin", 0}, {}, std::nullopt, "entire"},
        {{"cos", 0}, {}, std::nullopt, "entire"},
        {{"arcsin", 0},
         {real_cut(ninf(), at(-1)), real_cut(at(1), pinf())},
         std::nullopt,
         "real axis beyond +-1"},
        {{"arccos", 0},
         {real_cut(ninf(), at(-1)), real_cut(at(1), pinf())},
         std::nullopt,
         "real axis beyond +-1"},
        {{"arctan", 0},
         {imag_cut_closed(ninf(), at(-1), true, false),
          imag_cut_closed(at(1), pinf(), false, true)},
         std::nullopt,
         "imaginary axis beyond +-i, endpoints included (log singularity)"},
        {{"arccot", 0},
         {imag_cut_closed(ninf(), at(-1), true, false),
          imag_cut_closed(at(1), pinf(), false, true)},
         std::nullopt,
         "imaginary axis beyond +-i; Maple convention (arccot = pi/2 - arctan),"
         " differs from Abramowitz-Stegun; externally sourced"},
        {{"arcsinh", 0},
         {imag_cut(ninf(), at(-1)), imag_cut(at(1), pinf())},
         std::nullopt,
         "imaginary axis beyond +-i"},
        {{"arccosh", 0},
         {real_cut(ninf(), at(1))},
         std::nullopt,
         "real axis left of 1"},
        {{"arctanh", 0},
         {real_cut_closed(ninf(), at(-1), true, false),
          real_cut_closed(at(1), pinf(), false, true)},
         std::nullopt,
         "real axis beyond +-1, endpoints included (log singularity)"},
        {{"arccoth", 0},
         {real_cut_closed(at(-1), at(1), false, false)},
         std::nullopt,
         "real axis between -1 and 1 (arccoth = arctanh(1/z))"},
        {{"BesselJ", 1},
         {real_cut(ninf(), at(0))},
         CutCondition{
             "a is not an integer",
             [](const std::map<std::string, double>& params) -> std::optional<bool> {
                 auto it = params.find("a");
                 if (it == params.end()) return std::nullopt;
                 double v = it->second;
                 return std::abs(v - std::round(v)) > 1e-12;
             }},
         "negative real axis, present only for non-integer order"},
    };
}

const CutTableEntry* DefiningCutTable::entry_for(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.fn.name == name) return &e;
    return nullptr;
}

LookupResult DefiningCutTable::lookup(const FunctionSymbol& fn,
                                      const std::map<std::string, double>& params) const {
    const CutTableEntry* e = entry_for(fn.name);
    if (!e) throw std::invalid_argument("unregistered function symbol: " + fn.name);
    LookupResult out;
    if (!e->condition) {
        out.cuts = e->cuts;
        return out;
    }
    std::optional<bool> v = e->condition->eval(params);
    if (!v.has_value()) {
        out.cuts = e->cuts;
        out.warning = "branch cuts computed which only occur if " + e->condition->description;
    } else if (*v) {
        out.cuts = e->cuts;
    }
    return out;
}

Tri DefiningCutTable::has_cuts(const FunctionSymbol& fn) const {
    const CutTableEntry* e = entry_for(fn.name);
    if (!e) throw std::invalid_argument("unregistered function symbol: " + fn.name);
    if (e->cuts.empty()) return Tri::No;
    return e->condition ? Tri::Conditional : Tri::Yes;
}

std::vector<DefiningCut> radical_power_cuts() {
    return {DefiningCut{Axis::Real, {Endpoint::neg_inf(), Endpoint::exact(Rat(0)), true, true}}};
}

std::string DefiningCutTable::to_json() const {
    std::ostringstream os;
    os << "{\n  \"convention\": \"Maple FunctionAdvisor\",\n  \"functions\": [\n";
    bool first = true;
    for (const auto& e : entries_) {
        if (!first) os << ",\n";
        first = false;
        os << "    {\"name\": \"" << e.fn.name << "\", \"cuts\": [";
        bool fc = true;
        for (const auto& c : e.cuts) {
            if (!fc) os << ", ";
            fc = false;
            os << "{\"axis\": \"" << (c.axis == Axis::Real ? "real" : "imag")
               << "\", \"range\": \"" << c.range.str() << "\"}";
        }
        os << "]";
        if (e.condition)
            os << ", \"condition\": \"" << e.condition->description << "\"";
        if (!e.note.empty()) os << ", \"note\": \"" << e.note << "\"";
        os << "}";
    }
    os << "\n  ]\n}\n";
    return os.str();
}

}  // namespace bc
