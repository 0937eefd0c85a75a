#pragma once

#include "voa24/lattice.hpp"
#include "voa24/qseries.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace voa24 {

/* Malformed scenario text; the CLI maps it to exit status 2. */
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TableEntry {
    ProductLabel label;
    Q weight;
    bool operator<(const TableEntry& o) const
    {
        return label != o.label ? label < o.label : weight < o.weight;
    }
};

struct BaseWeight {
    long untwisted_weight = 0;   // L(0)-weight of the untwisted vector
    QVec mu;                     // flattened, fundamental-weight coordinates
};

struct SeedSpec {
    enum class Kind { fixed, twisted } kind = Kind::fixed;
    Ideal ideal;
};

struct Scenario {
    std::string name;
    std::string title;
    std::string origin;          // file the scenario came from

    bool lattice = false;        // the A4^6 construction instead of an affine ambient
    ProductAlgebra ambient;
    HVector h;

    Q expect_hh;
    SemisimpleShape expect_fixed;
    long expect_fixed_dim = 0;
    long expect_tilde1 = 0;
    SemisimpleShape expect_result;

    /* regenerated module table; empty `weights` means [0, max_weight] */
    bool has_table = false;
    Q table_max = 0;
    std::set<long> table_weights;
    std::vector<TableEntry> table_expect;

    enum class HalfMethod { lowest_weight, bound } half_method = HalfMethod::lowest_weight;

    std::vector<BaseWeight> base_weights;
    std::vector<SeedSpec> seeds;
    std::vector<std::string> notes;
    std::vector<std::string> assumptions;
};

Scenario parse_scenario(std::istream& in, const std::string& origin);
Scenario load_scenario(const std::string& path);
/* *.scn files of a directory, sorted by file name */
std::vector<std::string> scenario_files(const std::string& dir);

struct Check {
    std::string step;
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Report {
    std::string scenario;
    std::string title;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    std::vector<std::string> assumptions;

    std::string v1;
    std::string fixed;
    std::string result;

    bool passed() const;
    /* first failing step, or empty */
    std::string first_failure() const;
};

struct RunOptions {
    long terms = kDefaultTerms;
};

Report run_scenario(const Scenario& s, const RunOptions& opt = {});

std::string format_report(const Report& r, bool verbose);

/* "E6,3 G2,1^3" style table of a product algebra's integral spectrum, one line per entry */
std::string format_table(const ProductAlgebra& a, const std::vector<SpectrumEntry>& rows);

/* weight per factor: a label such as "2L1+L6" or an integer coefficient list "0 -1" */
IVec parse_weight(const std::string& text, int rank);

}
