#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bc/functions.hpp"
#include "bc/interval.hpp"

namespace bc {

enum class Axis { Real, Imag };

// A function's own conventional cut: a portion of the real or imaginary
// axis, the implementation-wide shape assumption.
struct DefiningCut {
    Axis axis = Axis::Real;
    ExtendedInterval range;
};

enum class Tri { Yes, No, Conditional };

// Parameter-dependent cut condition, three-valued under partial bindings.
struct CutCondition {
    std::string description;  // e.g. "a is not an integer"
    // Returns true/false given a binding, nullopt when undetermined.
    std::function<std::optional<bool>(const std::map<std::string, double>&)> eval;
};

struct CutTableEntry {
    FunctionSymbol fn;
    std::vector<DefiningCut> cuts;
    std::optional<CutCondition> condition;
    std::string note;  // audit note for the serialized table
};

struct LookupResult {
    std::vector<DefiningCut> cuts;
    std::optional<std::string> warning;
};

class DefiningCutTable {
  public:
    static const DefiningCutTable& instance();

    // Conventional cuts of fn under (partial) parameter bindings. When the
    // cut condition cannot be decided the cuts are returned together with a
    // warning; when it is decidably false they are omitted.
    LookupResult lookup(const FunctionSymbol& fn,
                        const std::map<std::string, double>& params) const;

    Tri has_cuts(const FunctionSymbol& fn) const;

    const std::vector<CutTableEntry>& entries() const { return entries_; }
    const CutTableEntry* entry_for(const std::string& name) const;

    // Human-auditable serialization of the table (shipped in data/).
    std::string to_json() const;

  private:
    DefiningCutTable();
    std::vector<CutTableEntry> entries_;
};

// Defining cuts of a radical power z^(p/q), q > 1: same convention as log.
std::vector<DefiningCut> radical_power_cuts();

}  // namespace bc
