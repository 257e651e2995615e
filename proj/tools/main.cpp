// Command-line front end: validate model files, evaluate pipelines, run the
// law suites. Exit codes: 0 pass, 1 violation, 2 usage or parse error.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "valgebra/composition.hpp"
#include "valgebra/conditional.hpp"
#include "valgebra/laws.hpp"
#include "valgebra/model_io.hpp"
#include "valgebra/pipeline.hpp"

using namespace valgebra;

namespace {

int run_validate(const std::string& path) {
    try {
        ModelFile model = load_model(path);
        std::cout << "OK " << path << ": "
                  << (model.ctx->kind == LatticeKind::subset ? "subset" : "partition")
                  << " context, " << model.valuations.size() << " valuation(s), "
                  << model.quotients.size() << " quotient(s)\n";
        return 0;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::parse_error) {
            std::cerr << "PARSE ERROR " << e.what() << '\n';
            return 2;
        }
        std::cerr << "INVALID " << path << ": " << e.what() << '\n';
        return 1;
    }
}

int run_eval(const std::string& path, const std::string& expr, bool compact) {
    ModelFile model = load_model(path);
    DensityElement result = eval_pipeline(model, expr);
    std::cout << render_element(result, compact) << '\n';
    return 0;
}

int run_condition(const std::string& path, const std::string& name, const std::string& of,
                  const std::string& given, bool compact) {
    ModelFile model = load_model(path);
    const Valuation* base = model.find_valuation(name);
    if (!base) fail(ErrorKind::parse_error, "unknown valuation '" + name + "'");
    Domain x = of.empty() ? base->label() : parse_domain_text(of, model.ctx);
    Domain y = parse_domain_text(given, model.ctx);
    Quotient body = conditional(*base, x, y).body;
    if (auto v = try_reduce(body))
        std::cout << render_valuation(*v, compact) << '\n';
    else
        std::cout << render_quotient(body, compact) << '\n';
    return 0;
}

int run_compose(const std::string& path, const std::string& order, const std::string& project_to,
                bool compact) {
    ModelFile model = load_model(path);
    std::vector<DensityElement> items;
    std::istringstream is(order);
    std::string name;
    while (std::getline(is, name, ',')) {
        if (name.empty()) continue;
        const Valuation* v = model.find_valuation(name);
        if (v) {
            items.push_back(DensityElement::member(*v));
            continue;
        }
        const Quotient* q = model.find_quotient(name);
        if (!q) fail(ErrorKind::parse_error, "unknown name '" + name + "'");
        items.push_back(DensityElement::formal(*q));
    }
    DensityElement result = compose_sequence(items);
    if (!project_to.empty())
        result = project_element(result, parse_domain_text(project_to, model.ctx));
    std::cout << render_element(result, compact) << '\n';
    return 0;
}

InstanceKind parse_instance(const std::string& name) {
    if (name == "potentials" || name == "potential") return InstanceKind::potential;
    if (name == "gaussian" || name == "gaussians") return InstanceKind::gaussian;
    if (name == "belief") return InstanceKind::belief;
    fail(ErrorKind::parse_error, "unknown instance '" + name + "'");
}

int run_laws(const std::string& target, const std::string& suite, std::uint64_t seed, int cases,
             double tol, const std::string& artifacts) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.cases = cases;

    // `target` is a builtin instance name, `lattice`, or a model file whose
    // instance picks the suite subject.
    std::string subject = target;
    if (std::filesystem::exists(target)) {
        ModelFile model = load_model(target);
        subject = to_string(model.instance());
        std::cout << "# model " << target << " -> instance " << subject << '\n';
    }

    LawReport report;
    if (subject == "lattice" || suite == "lattice") {
        const std::string which = subject == "lattice" ? suite : subject;
        if (which == "partition") {
            auto ctx = belief_partition_context();
            report = check_lattice_laws(ctx, enumerate_partitions(ctx), true);
        } else {
            auto ctx = potential_context();
            Rng rng(seed);
            std::vector<Domain> sample;
            for (int i = 0; i < 3 * cases; ++i) sample.push_back(random_domain(rng, ctx));
            report = check_lattice_laws(ctx, sample, false);
        }
    } else {
        InstanceKind kind = parse_instance(subject);
        cfg.tol = tol > 0 ? tol : instance_tolerance(kind);
        if (suite == "axioms") {
            report = check_axioms(kind, cfg);
        } else if (suite == "separative") {
            report = check_separative(kind, cfg);
        } else if (suite == "conditionals") {
            report = check_conditional_laws(kind, cfg);
        } else if (suite == "composition-modular") {
            report = check_composition_laws_modular(kind, cfg);
        } else if (suite == "composition-distributive") {
            report = check_composition_laws_distributive(kind, cfg);
        } else if (suite == "composition-exploration" && kind == InstanceKind::belief) {
            report = check_composition_partition_exploration(cfg);
        } else if (suite == "a5prime" && kind == InstanceKind::gaussian) {
            report = check_a5prime_gaussian(cfg);
        } else if (suite == "cancellativity" && kind == InstanceKind::gaussian) {
            report = check_cancellativity_gaussian(cfg);
        } else if (suite == "regularity" && kind == InstanceKind::potential) {
            report = check_regularity_potentials(cfg);
        } else if (suite == "regularity-witness" && kind == InstanceKind::belief) {
            report = belief_regularity_witness();
        } else if (suite == "all") {
            report = check_axioms(kind, cfg);
            auto append = [&report](const LawReport& more) {
                report.laws.insert(report.laws.end(), more.laws.begin(), more.laws.end());
            };
            append(check_separative(kind, cfg));
            append(check_conditional_laws(kind, cfg));
            append(check_composition_laws_modular(kind, cfg));
            append(check_composition_laws_distributive(kind, cfg));
        } else {
            fail(ErrorKind::parse_error,
                 "unknown suite '" + suite + "' for instance '" + subject + "'");
        }
    }

    std::cout << report.to_text(artifacts);
    for (const auto& law : report.laws) {
        if (!law.counterexample.empty() && artifacts.empty()) {
            std::cout << "detail " << law.name << ":\n";
            std::istringstream lines(law.counterexample);
            std::string line;
            while (std::getline(lines, line)) std::cout << "  | " << line << '\n';
        }
    }
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"separative valuation algebra kernel"};
    app.require_subcommand(1);

    std::string path, expr, name, of, given, order, project_to;
    std::string target, suite, artifacts;
    std::uint64_t seed = 1;
    int cases = 500;
    double tol = 0.0;
    std::string format = "text";

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text|compact")
            ->check(CLI::IsMember({"text", "compact"}));
        cmd->add_option("--tol", tol, "equality tolerance override");
    };

    auto* validate = app.add_subcommand("validate", "check a model file");
    validate->add_option("file", path)->required();

    auto* eval = app.add_subcommand("eval", "evaluate a pipeline expression");
    eval->add_option("file", path)->required();
    eval->add_option("expr", expr, "expression over * @ | > and names")->required();
    add_format(eval);

    auto* condition = app.add_subcommand("condition", "conditional of a valuation");
    condition->add_option("file", path)->required();
    condition->add_option("name", name)->required();
    condition->add_option("--of", of, "upper domain (defaults to the label)");
    condition->add_option("--given", given)->required();
    add_format(condition);

    auto* compose_cmd = app.add_subcommand("compose", "left-fold composition of named items");
    compose_cmd->add_option("file", path)->required();
    compose_cmd->add_option("--order", order, "comma separated names")->required();
    compose_cmd->add_option("--project", project_to, "post-project to a domain");
    add_format(compose_cmd);

    auto* laws = app.add_subcommand("laws", "run a law suite");
    laws->add_option("target", target, "potentials|gaussian|belief|lattice or a model file")
        ->required();
    laws->add_option("suite", suite,
                     "axioms|separative|conditionals|composition-modular|"
                     "composition-distributive|composition-exploration|a5prime|"
                     "cancellativity|regularity|regularity-witness|subset|partition|all")
        ->required();
    laws->add_option("--seed", seed);
    laws->add_option("--n", cases);
    laws->add_option("--tol", tol);
    laws->add_option("--artifacts", artifacts, "directory for counterexample files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const bool compact = format == "compact";
        if (*validate) return run_validate(path);
        if (*eval) return run_eval(path, expr, compact);
        if (*condition) return run_condition(path, name, of, given, compact);
        if (*compose_cmd) return run_compose(path, order, project_to, compact);
        if (*laws) return run_laws(target, suite, seed, cases, tol, artifacts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::parse_error ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
