// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Usage: acceptance <cli-binary> <models-dir> <golden-dir>
//
// Every tolerance and case count is pinned here, not configurable.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "valgebra/composition.hpp"
#include "valgebra/conditional.hpp"
#include "valgebra/laws.hpp"
#include "valgebra/model_io.hpp"

using namespace valgebra;

namespace {

int failures = 0;

void report(const std::string& criterion, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS " : "FAIL ") << criterion;
    if (!pass && !detail.empty()) std::cout << " — " << detail;
    std::cout << '\n';
    if (!pass) ++failures;
}

std::string first_failure(const LawReport& report) {
    for (const auto& law : report.laws)
        if (!law.informational && !law.pass) return law.name + ": " + law.counterexample;
    return "";
}

SuiteConfig config_for(InstanceKind kind, int cases) {
    SuiteConfig cfg;
    cfg.seed = 20240801;
    cfg.cases = cases;
    cfg.tol = instance_tolerance(kind);
    return cfg;
}

constexpr std::array<InstanceKind, 3> kInstances = {
    InstanceKind::potential, InstanceKind::gaussian, InstanceKind::belief};

// --- criterion 1: axiom suites --------------------------------------------

void criterion_axioms() {
    bool pass = true;
    std::string detail;
    for (auto kind : kInstances) {
        auto report = check_axioms(kind, config_for(kind, 1000));
        if (!report.all_pass()) {
            pass = false;
            detail = std::string(to_string(kind)) + " " + first_failure(report);
        }
        if (kind == InstanceKind::gaussian) {
            bool saw_a5prime = false, saw_units_unsupported = false;
            for (const auto& law : report.laws) {
                saw_a5prime |= law.name == "A5-prime" && law.pass;
                saw_units_unsupported |= law.name == "A6-units-unsupported" && law.pass;
            }
            if (!saw_a5prime || !saw_units_unsupported) {
                pass = false;
                detail = "gaussian A5' or unsupported-units check missing";
            }
        }
    }
    report("criterion-1-axiom-suites", pass, detail);
}

// --- criterion 2: separative structure -------------------------------------

void criterion_separative() {
    bool pass = true;
    std::string detail;
    for (auto kind : kInstances) {
        auto report = check_separative(kind, config_for(kind, 500));
        if (!report.all_pass()) {
            pass = false;
            detail = std::string(to_string(kind)) + " " + first_failure(report);
        }
    }
    report("criterion-2-separative-structure", pass, detail);
}

// --- criterion 3: conditionals ---------------------------------------------

void criterion_conditionals() {
    bool pass = true;
    std::string detail;
    for (auto kind : kInstances) {
        auto report = check_conditional_laws(kind, config_for(kind, 500));
        if (!report.all_pass()) {
            pass = false;
            detail = std::string(to_string(kind)) + " " + first_failure(report);
        }
    }
    report("criterion-3-conditional-lemma", pass, detail);
}

// --- criterion 4: composition theorems -------------------------------------

void criterion_composition() {
    bool pass = true;
    std::string detail;
    for (auto kind : kInstances) {
        auto modular = check_composition_laws_modular(kind, config_for(kind, 500));
        if (!modular.all_pass()) {
            pass = false;
            detail = std::string(to_string(kind)) + " " + first_failure(modular);
        }
        auto distributive = check_composition_laws_distributive(kind, config_for(kind, 300));
        if (!distributive.all_pass()) {
            pass = false;
            detail = std::string(to_string(kind)) + " " + first_failure(distributive);
        }
        if (kind == InstanceKind::gaussian) {
            bool saw_addendum = false;
            for (const auto& law : modular.laws)
                saw_addendum |= law.name == "cancellative-commutativity-consistency" && law.pass;
            if (!saw_addendum) {
                pass = false;
                detail = "gaussian commutativity/consistency addendum missing";
            }
        }
    }
    report("criterion-4-composition-theorems", pass, detail);
}

// --- criterion 5: oracle equivalences ---------------------------------------

void criterion_oracles() {
    bool pass = true;
    std::string detail;

    // (a) commonality product route vs mass combination route, 500 pairs
    {
        Rng rng(501);
        auto ctx = belief_partition_context();
        for (int i = 0; i < 500 && pass; ++i) {
            auto m1 = random_mass(rng, random_domain(rng, ctx));
            auto m2 = random_mass(rng, random_domain(rng, ctx));
            auto via_mass = mass_to_commonality(combine_mass(m1, m2));
            auto direct = combine_commonality(mass_to_commonality(m1), mass_to_commonality(m2));
            for (std::size_t s = 0; s < direct.values.size(); ++s)
                if (!nearly_equal(direct.values[s], via_mass.values[s], 1e-12)) {
                    pass = false;
                    detail = "commonality routes disagree";
                }
        }
    }

    // (b) Moebius roundtrip on 500 random masses
    {
        Rng rng(502);
        auto ctx = belief_partition_context();
        for (int i = 0; i < 500 && pass; ++i) {
            auto m = random_mass(rng, random_domain(rng, ctx));
            auto back = commonality_to_mass(mass_to_commonality(m));
            for (std::size_t mask = 0; mask < back.values.size(); ++mask) {
                const double want =
                    m.masses.count(static_cast<std::uint32_t>(mask)) ? m.masses.at(mask) : 0.0;
                if (!nearly_equal(back.values[mask], want, 1e-12)) {
                    pass = false;
                    detail = "Moebius roundtrip broke";
                }
            }
        }
    }

    // (c) gaussian combine/project vs grid integration, 20 cases, 1e-3
    {
        Rng rng(503);
        auto ctx = gaussian_context();
        Domain d1 = Domain::subset(ctx, {0});
        Domain d12 = Domain::subset(ctx, {0, 1});
        auto density = [](const GaussianPotential& g, std::initializer_list<double> pt) {
            std::vector<double> x(pt);
            double quad = 0;
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < x.size(); ++j)
                    quad += (x[i] - g.mean[i]) * g.concentration(i, j) * (x[j] - g.mean[j]);
            return std::exp(-0.5 * quad);
        };
        const double step = 0.01;
        for (int i = 0; i < 10 && pass; ++i) {
            SquareMatrix k1(1), k2(1);
            k1(0, 0) = rng.uniform(0.5, 2.0);
            k2(0, 0) = rng.uniform(0.5, 2.0);
            GaussianPotential g1(d1, {rng.uniform(-1.0, 1.0)}, k1);
            GaussianPotential g2(d1, {rng.uniform(-1.0, 1.0)}, k2);
            auto combined = combine_gaussian(g1, g2);
            double mass = 0, first = 0;
            for (double x = -8; x <= 8; x += step) {
                const double v = density(g1, {x}) * density(g2, {x}) * step;
                mass += v;
                first += x * v;
            }
            const double mean = first / mass;
            double var = 0;
            for (double x = -8; x <= 8; x += step)
                var += (x - mean) * (x - mean) * density(g1, {x}) * density(g2, {x}) * step;
            var /= mass;
            if (std::abs(mean - combined.mean[0]) > 1e-3 ||
                std::abs(1 / var - combined.concentration(0, 0)) > 1e-3) {
                pass = false;
                detail = "gaussian combination disagrees with grid integration";
            }
        }
        for (int i = 0; i < 10 && pass; ++i) {
            SquareMatrix a(2);
            for (auto& v : a.a) v = rng.uniform(-1.0, 1.0);
            SquareMatrix k(2);
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    k(r, c) = a(0, r) * a(0, c) + a(1, r) * a(1, c) + (r == c ? 0.5 : 0.0);
            GaussianPotential g(d12, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}, k);
            auto marg = project_gaussian(g, d1);
            double mass = 0, first = 0;
            std::vector<double> slice;
            for (double x = -8; x <= 8; x += step) {
                double acc = 0;
                for (double y = -8; y <= 8; y += step) acc += density(g, {x, y}) * step;
                slice.push_back(acc);
                mass += acc * step;
                first += x * acc * step;
            }
            const double mean = first / mass;
            double var = 0;
            std::size_t idx = 0;
            for (double x = -8; x <= 8; x += step, ++idx)
                var += (x - mean) * (x - mean) * slice[idx] * step;
            var /= mass;
            if (std::abs(mean - marg.mean[0]) > 1e-3 ||
                std::abs(1 / var - marg.concentration(0, 0)) > 1e-3) {
                pass = false;
                detail = "gaussian projection disagrees with grid integration";
            }
        }
    }

    // (d) the hand-derived composition table
    if (pass) {
        auto ctx = make_subset_context({"A", "B"}, {2, 2});
        DensityElement p =
            DensityElement::member(PotentialTable(Domain::subset(ctx, {0}), {0.2, 0.8}));
        DensityElement q = DensityElement::member(
            PotentialTable(Domain::subset(ctx, {0, 1}), {1, 3, 2, 4}));
        DensityElement r = compose(p, q);
        const std::vector<double> expected = {0.05, 0.15, 0.8 * 2 / 6.0, 0.8 * 4 / 6.0};
        double sum = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (!nearly_equal(r.value().potential().values[i], expected[i], 1e-9)) {
                pass = false;
                detail = "composition example table mismatch";
            }
            sum += r.value().potential().values[i];
        }
        if (!nearly_equal(sum, 1.0, 1e-9)) {
            pass = false;
            detail = "composition example row sum is not 1";
        }
    }

    report("criterion-5-oracle-equivalences", pass, detail);
}

// --- criterion 6: structural trichotomy -------------------------------------

void criterion_trichotomy() {
    bool pass = true;
    std::string detail;

    auto regularity = check_regularity_potentials(config_for(InstanceKind::potential, 500));
    if (!regularity.all_pass()) {
        pass = false;
        detail = first_failure(regularity);
    }

    auto cancellativity = check_cancellativity_gaussian(config_for(InstanceKind::gaussian, 200));
    if (!cancellativity.all_pass()) {
        pass = false;
        detail = first_failure(cancellativity);
    }

    auto witness = belief_regularity_witness();
    if (!witness.all_pass()) {
        pass = false;
        detail = "belief witness unexpectedly reduced";
    } else {
        std::cout << "  stored witness: "
                  << witness.laws[0].counterexample.substr(
                         witness.laws[0].counterexample.rfind('\n') + 1)
                  << '\n';
    }

    report("criterion-6-structural-trichotomy", pass, detail);
}

// --- criterion 7: lattices ---------------------------------------------------

void criterion_lattice() {
    bool pass = true;
    std::string detail;

    auto ctx4 = make_partition_context({1, 2, 3, 4});
    auto all4 = enumerate_partitions(ctx4);
    if (all4.size() != 15) {
        pass = false;
        detail = "expected 15 partitions of a 4-set";
    }
    auto exhaustive = check_lattice_laws(ctx4, all4, true);
    if (!exhaustive.all_pass()) {
        pass = false;
        detail = first_failure(exhaustive);
    }
    bool distributivity_fails = false;
    for (const auto& law : exhaustive.laws)
        if (law.name == "distributive-law") distributivity_fails = !law.pass;
    if (!distributivity_fails) {
        pass = false;
        detail = "no distributivity counterexample on the 4-set partition lattice";
    }

    // join/meet are least/greatest bounds, exhaustively on <= 5 atoms
    for (int n = 3; n <= 5 && pass; ++n) {
        std::vector<int> atoms(n);
        for (int i = 0; i < n; ++i) atoms[i] = i + 1;
        auto ctx = make_partition_context(atoms);
        auto all = enumerate_partitions(ctx);
        for (const auto& x : all) {
            for (const auto& y : all) {
                Domain j = join(x, y);
                Domain m = meet(x, y);
                if (!leq(x, j) || !leq(y, j) || !leq(m, x) || !leq(m, y)) {
                    pass = false;
                    detail = "join/meet are not bounds";
                }
                for (const auto& c : all) {
                    if (leq(x, c) && leq(y, c) && !leq(j, c)) {
                        pass = false;
                        detail = "join is not least";
                    }
                    if (leq(c, x) && leq(c, y) && !leq(c, m)) {
                        pass = false;
                        detail = "meet is not greatest";
                    }
                }
            }
        }
    }

    // subset lattice: 1000 random triples distribute
    {
        Rng rng(701);
        auto ctx = potential_context();
        std::vector<Domain> sample;
        for (int i = 0; i < 3000; ++i) sample.push_back(random_domain(rng, ctx));
        auto subset_report = check_lattice_laws(ctx, sample, false);
        if (!subset_report.all_pass()) {
            pass = false;
            detail = first_failure(subset_report);
        }
    }

    report("criterion-7-lattice", pass, detail);
}

// --- criterion 8: CLI golden files ------------------------------------------

std::string run_command(const std::string& command, int* exit_code) {
    std::string output;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return output;
    }
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
    *exit_code = pclose(pipe) / 256;
    return output;
}

std::string normalize_paths(std::string text, const std::string& models) {
    for (std::size_t at = text.find(models); at != std::string::npos;
         at = text.find(models, at))
        text.replace(at, models.size(), "<models>");
    return text;
}

void criterion_cli(const std::string& cli, const std::string& models, const std::string& golden) {
    bool pass = true;
    std::string detail;

    struct Case {
        const char* golden_file;
        std::string command;
        int expected_exit;
    };
    const std::vector<Case> cases = {
        {"validate_potentials.txt", cli + " validate " + models + "/potentials.json", 0},
        {"validate_gaussian.txt", cli + " validate " + models + "/gaussian.json", 0},
        {"validate_belief.txt", cli + " validate " + models + "/belief.json", 0},
        {"eval_compose.txt", cli + " eval " + models + "/potentials.json \"p > q @ {A,B}\"", 0},
        {"eval_condition.txt",
         cli + " condition " + models + "/potentials.json q --given \"{A}\"", 0},
        {"eval_gaussian.txt", cli + " eval " + models + "/gaussian.json \"g1 * g2\"", 0},
        {"eval_belief.txt",
         cli + " eval " + models + "/belief.json \"m1 * m2 @ [[1,2],[3,4]]\"", 0},
        {"compose_cli.txt", cli + " compose " + models + "/potentials.json --order p,q", 0},
        {"laws_potentials_axioms.txt",
         cli + " laws potentials axioms --seed 7 --n 200", 0},
        {"laws_gaussian_a5prime.txt", cli + " laws gaussian a5prime --seed 7 --n 200", 0},
        {"laws_belief_witness.txt", cli + " laws belief regularity-witness", 0},
    };

    for (const auto& c : cases) {
        int exit_code = 0;
        const std::string got = normalize_paths(run_command(c.command, &exit_code), models);
        int exit_again = 0;
        const std::string again = normalize_paths(run_command(c.command, &exit_again), models);
        if (got != again) {
            pass = false;
            detail = std::string(c.golden_file) + ": output is not deterministic";
            break;
        }
        if (exit_code != c.expected_exit) {
            pass = false;
            detail = std::string(c.golden_file) + ": exit " + std::to_string(exit_code) + "\n" +
                     got;
            break;
        }
        std::ifstream in(golden + "/" + c.golden_file);
        if (!in) {
            pass = false;
            detail = std::string("missing golden file ") + c.golden_file;
            break;
        }
        std::ostringstream want;
        want << in.rdbuf();
        if (want.str() != got) {
            pass = false;
            detail = std::string(c.golden_file) + " drifted:\n--- got ---\n" + got;
            break;
        }
    }

    report("criterion-8-cli-golden", pass, detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 4) {
        std::cerr << "usage: acceptance <cli-binary> <models-dir> <golden-dir>\n";
        return 2;
    }

    criterion_axioms();
    criterion_separative();
    criterion_conditionals();
    criterion_composition();
    criterion_oracles();
    criterion_trichotomy();
    criterion_lattice();
    criterion_cli(argv[1], argv[2], argv[3]);

    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
