#include "bc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "bc/algorithms.hpp"
#include "bc/jsonio.hpp"
#include "bc/parser.hpp"

namespace bc {

namespace {

bool write_file(const std::string& path, const std::string& content,
                std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    f << content;
    return true;
}

void report_cut(std::ostream& out, const BranchCut& cut, bool classified) {
    out << "cut: " << cut.describe();
    if (!cut.provenance.subterm_text.empty())
        out << "  [" << cut.provenance.subterm_text << "]";
    if (classified) out << "  -- " << cut.classification.verdict_name();
    out << "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    for (const auto& p : config.parameters) {
        if (p == config.variable) {
            err << "error: parameter '" << p << "' shadows the variable\n";
            return 1;
        }
    }
    std::vector<std::string> unbound;
    for (const auto& p : config.parameters)
        if (!config.bindings.count(p)) unbound.push_back(p);
    if (config.classify && !unbound.empty()) {
        err << "error: --classify requires bound parameters (missing "
            << unbound.front() << ")\n";
        return 1;
    }

    AnalyzeOptions opts;
    if (config.method == "real")
        opts.method = Method::Real;
    else if (config.method == "parametric")
        opts.method = Method::Parametric;
    else if (config.method == "auto")
        opts.method = Method::Auto;
    else {
        err << "error: unknown method '" << config.method << "'\n";
        return 1;
    }
    opts.semialgebraic = config.semialgebraic;
    opts.remove_denested_branches = !config.keep_denested;
    opts.param_values = config.bindings;

    Expr e;
    try {
        ParseOptions po;
        po.variable = config.variable;
        po.parameters.insert(config.parameters.begin(), config.parameters.end());
        e = parse(config.expression, po);
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }

    CutSet cs;
    try {
        cs = bc_c(e, opts);
        if (config.classify) cs = classify_cutset(e, cs, config.bindings, config.classify_opts);
    } catch (const NotSupported& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << "\n";
        return 2;
    }

    if (cs.cuts.empty() && cs.removed.empty()) out << "no branch cuts\n";
    for (const auto& cut : cs.cuts) report_cut(out, cut, config.classify);
    for (const auto& cut : cs.removed) {
        out << "removed: " << cut.describe();
        if (cut.classification.spurious_kind)
            out << "  -- spurious ("
                << spurious_kind_name(*cut.classification.spurious_kind) << ")";
        out << "\n";
    }
    for (const auto& w : cs.warnings) err << "warning: " << w << "\n";

    if (config.json_path) {
        CutSetMeta meta{config.expression, config.variable, config.method,
                        config.parameters};
        if (!write_file(*config.json_path, cutset_to_json(cs, meta), err)) return 2;
    }
    if (config.svg_path) {
        if (!write_file(*config.svg_path, emit_svg(cs, config.viewport, config.bindings),
                        err))
            return 2;
    }
    return 0;
}

}  // namespace bc
