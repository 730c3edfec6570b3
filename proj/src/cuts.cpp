#include "bc/cuts.hpp"

#include <sstream>

namespace bc {

std::string cut_method_name(CutMethod m) {
    switch (m) {
        case CutMethod::RealVariables: return "real-variables";
        case CutMethod::RealVariablesSquared: return "real-variables-squared";
        case CutMethod::Parametric: return "parametric";
        case CutMethod::SemiAlgebraic: return "semi-algebraic";
    }
    return "?";
}

std::string spurious_kind_name(SpuriousKind k) {
    switch (k) {
        case SpuriousKind::DeNesting: return "de-nesting";
        case SpuriousKind::Formulation: return "formulation";
        case SpuriousKind::Both: return "de-nesting+formulation";
    }
    return "?";
}

std::string CutClass::verdict_name() const {
    switch (verdict) {
        case Unclassified: return "unclassified";
        case True: return "true";
        case Spurious:
            return spurious_kind ? "spurious (" + spurious_kind_name(*spurious_kind) + ")"
                                 : "spurious";
        case Mixed: return "mixed";
    }
    return "?";
}

std::string SAInequality::str() const {
    std::ostringstream os;
    os << poly.str() << (strict ? " < " : " <= ") << to_string(bound);
    return os.str();
}

std::string SemiAlgSystem::str() const {
    std::ostringstream os;
    os << "{" << equation.str() << " = 0";
    for (const auto& c : conditions) os << ", " << c.str();
    os << "}";
    return os.str();
}

std::string BranchCut::describe() const {
    std::ostringstream os;
    switch (form) {
        case RealCurve: {
            const auto& c = *curve;
            os << "{" << c.dependent() << " = " << re_str(c.expr, std::string(1, c.free_var()))
               << ", " << c.free_var() << " in " << c.validity.str() << "}";
            break;
        }
        case ParamCurve: {
            const auto& p = *parametric;
            os << "{z = " << unparse(p.point) << ", " << p.param << " in "
               << p.range.str() << "}";
            break;
        }
        case SemiAlg:
            os << system->str();
            break;
    }
    return os.str();
}

}  // namespace bc
