#include "voa24/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>

using namespace voa24;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> resolve(const std::vector<std::string>& inputs)
{
    std::vector<std::string> files;
    for (const std::string& p : inputs) {
        if (std::filesystem::is_directory(p)) {
            auto v = scenario_files(p);
            files.insert(files.end(), v.begin(), v.end());
        } else {
            files.push_back(p);
        }
    }
    return files;
}

nlohmann::json to_json(const Report& r)
{
    nlohmann::json j;
    j["scenario"] = r.scenario;
    j["title"] = r.title;
    j["pass"] = r.passed();
    j["v1"] = r.v1;
    j["fixed"] = r.fixed;
    j["result"] = r.result;
    j["assumptions"] = r.assumptions;
    j["notes"] = r.notes;
    if (!r.passed()) j["first_failure"] = r.first_failure();
    for (const Check& c : r.checks) {
        j["checks"].push_back({{"step", c.step}, {"name", c.name}, {"expected", c.expected},
                               {"actual", c.actual}, {"pass", c.pass}});
    }
    return j;
}

void summary(const std::vector<Report>& reports)
{
    std::cout << "\n" << std::left << std::setw(5) << "" << std::setw(22) << "V1" << std::setw(32) << "fixed"
              << std::setw(22) << "new V1" << "status\n";
    for (const Report& r : reports) {
        std::cout << std::setw(5) << r.scenario << std::setw(22) << r.v1 << std::setw(32) << r.fixed << std::setw(22)
                  << r.result << (r.passed() ? "PASS" : "FAIL") << "\n";
    }
}

}

int main(int argc, char** argv)
{
    CLI::App app{"Z2-orbifold checks for holomorphic VOAs of central charge 24"};
    app.require_subcommand(1);
    long terms = kDefaultTerms;
    app.add_option("--terms", terms, "q-series precision in steps of q^(1/2)")->check(CLI::Range(8L, 400L));

    auto* run = app.add_subcommand("run", "verify scenarios");
    std::vector<std::string> inputs{"scenarios"};
    std::string filter;
    bool as_json = false, verbose = false;
    run->add_option("paths", inputs, "scenario files or directories");
    run->add_option("--filter", filter, "only scenarios with this name");
    run->add_flag("--json", as_json, "machine-readable report");
    run->add_flag("-v,--verbose", verbose, "print every check");

    auto* list = app.add_subcommand("list", "list scenarios");
    std::vector<std::string> list_inputs{"scenarios"};
    list->add_option("paths", list_inputs);

    auto* tables = app.add_subcommand("dump-tables", "integral-weight modules of an affine product");
    std::string algebra;
    std::string max_weight = "3";
    tables->add_option("algebra", algebra, "e.g. \"E6,3 G2,1^3\"")->required();
    tables->add_option("--max-weight", max_weight);

    auto* series = app.add_subcommand("dump-series", "the hauptmodul and Z(S tau) for given dimensions");
    long dv1 = 120, dg1 = 72, dhalf = 0;
    series->add_option("--v1", dv1);
    series->add_option("--g1", dg1);
    series->add_option("--half", dhalf);

    app.add_subcommand("dump-lattice", "the A4^6 Niemeier lattice data");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run || *list) {
            std::vector<Scenario> scs;
            const auto files = resolve(*run ? inputs : list_inputs);
            for (const std::string& f : files) {
                Scenario s = load_scenario(f);
                if (filter.empty() || s.name == filter) scs.push_back(std::move(s));
            }
            if (scs.empty() && !files.empty()) {
                std::cerr << "no scenarios selected\n";
                return kExitUsage;
            }
            if (*list) {
                for (const Scenario& s : scs) std::cout << s.name << "\t" << s.title << "\t" << s.origin << "\n";
                return 0;
            }
            std::vector<Report> reports;
            bool ok = true;
            nlohmann::json out = nlohmann::json::array();
            for (const Scenario& s : scs) {
                reports.push_back(run_scenario(s, RunOptions{terms}));
                ok = ok && reports.back().passed();
                if (as_json) out.push_back(to_json(reports.back()));
                else std::cout << format_report(reports.back(), verbose);
            }
            if (as_json) std::cout << out.dump(2) << "\n";
            else summary(reports);
            return ok ? 0 : kExitFail;
        }
        if (*tables) {
            ProductAlgebra a = parse_product_algebra(algebra);
            std::cout << format_table(a, integral_spectrum_table(a, parse_q(max_weight)));
            return 0;
        }
        if (*series) {
            std::cout << "hauptmodul = " << hauptmodul(terms).dump() << "\n";
            CharacterFit fit = character_fit(dg1, dhalf, terms);
            std::cout << "Z(S tau) = " << fit.series.dump() << "\n";
            DimensionIdentities d = dimension_identities(dv1, dg1, dhalf, terms);
            std::cout << "dim V~1 = " << d.dim_tilde1 << "\ndim (V^g)_2 = " << d.dim_g2.get_str() << "\n";
            return 0;
        }
        std::cout << dump_lattice(build_niemeier());
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
