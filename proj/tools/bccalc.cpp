#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bc/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"bccalc: branch cuts of expressions in one complex variable"};

    bc::RunConfig cfg;
    std::vector<std::string> param_args;
    std::string viewport_arg;

    app.add_option("expression", cfg.expression, "expression to analyze")
        ->required();
    app.add_option("--var", cfg.variable, "complex variable name (default z)");
    app.add_option("--param", param_args,
                   "declare a real parameter, optionally bound: name or name=value");
    app.add_option("--method", cfg.method, "auto | real | parametric")
        ->check(CLI::IsMember({"auto", "real", "parametric"}));
    app.add_flag("--semialgebraic", cfg.semialgebraic,
                 "emit unsolved semi-algebraic systems");
    app.add_flag("--classify", cfg.classify,
                 "numerically classify cuts as true or spurious");
    app.add_flag("--keep-denested", cfg.keep_denested,
                 "keep branches the sign certificate would remove");
    app.add_option("--json", cfg.json_path, "write the cut set as JSON");
    app.add_option("--svg", cfg.svg_path, "write an SVG plot");
    app.add_option("--viewport", viewport_arg, "xmin,xmax,ymin,ymax");
    app.add_option("--resolution", cfg.viewport.resolution,
                   "plot samples per unit (default 100)");
    app.add_option("--eps", cfg.classify_opts.eps,
                   "probe offset for classification (default 1e-6)");
    app.add_option("--samples", cfg.classify_opts.samples,
                   "probe samples per cut (default 33)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    for (const std::string& p : param_args) {
        auto eq = p.find('=');
        if (eq == std::string::npos) {
            cfg.parameters.push_back(p);
        } else {
            std::string name = p.substr(0, eq);
            try {
                cfg.bindings[name] = std::stod(p.substr(eq + 1));
            } catch (const std::exception&) {
                std::cerr << "error: bad parameter binding '" << p << "'\n";
                return 1;
            }
            cfg.parameters.push_back(name);
        }
    }
    if (!viewport_arg.empty()) {
        std::istringstream in(viewport_arg);
        char c1, c2, c3;
        if (!(in >> cfg.viewport.x_min >> c1 >> cfg.viewport.x_max >> c2 >>
              cfg.viewport.y_min >> c3 >> cfg.viewport.y_max) ||
            c1 != ',' || c2 != ',' || c3 != ',' ||
            cfg.viewport.x_min >= cfg.viewport.x_max ||
            cfg.viewport.y_min >= cfg.viewport.y_max) {
            std::cerr << "error: bad --viewport, expected xmin,xmax,ymin,ymax\n";
            return 1;
        }
    }

    return bc::run(cfg, std::cout, std::cerr);
}
