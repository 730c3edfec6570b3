#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bc {

// A named function applicable to one complex argument, possibly carrying
// extra parameter slots before the argument (BesselJ(a, w) has one).
struct FunctionSymbol {
    std::string name;
    int param_slots = 0;

    bool operator==(const FunctionSymbol& o) const { return name == o.name; }
};

// Registry of known symbols. Every entry is either present in the
// defining-cut table or registered cut-free there.
class FunctionRegistry {
  public:
    static const FunctionRegistry& instance();

    std::optional<FunctionSymbol> find(const std::string& name) const;
    const std::vector<FunctionSymbol>& all() const { return symbols_; }

  private:
    FunctionRegistry();
    std::vector<FunctionSymbol> symbols_;
};

}  // namespace bc
