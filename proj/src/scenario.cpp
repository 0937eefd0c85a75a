#include "voa24/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace voa24 {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

QVec parse_qlist(const std::string& s)
{
    std::istringstream in(s);
    std::string tok;
    QVec v;
    while (in >> tok) v.push_back(parse_q(tok));
    return v;
}

std::string yes(bool b)
{
    return b ? "yes" : "no";
}

std::string shape_list(const std::vector<SemisimpleShape>& v)
{
    if (v.empty()) return "(none)";
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x.name();
    return s;
}

}

IVec parse_weight(const std::string& text, int rank)
{
    std::string t = trim(text);
    if (t.find('L') != std::string::npos || t == "0") return parse_weight_label(t, rank);
    std::istringstream in(t);
    std::string tok;
    IVec v;
    while (in >> tok) {
        Q q = parse_q(tok);
        if (!is_integer(q)) throw std::invalid_argument("weight coefficient '" + tok + "' is not an integer");
        v.push_back(to_long(q));
    }
    if (static_cast<int>(v.size()) != rank) {
        throw std::invalid_argument("weight '" + t + "' has " + std::to_string(v.size()) + " coefficients, expected " +
                                    std::to_string(rank));
    }
    return v;
}

/* ---------------------------------------------------------------------- */

Scenario parse_scenario(std::istream& in, const std::string& origin)
{
    Scenario s;
    s.origin = origin;
    std::string section, line;
    int lineno = 0;
    std::string ambient_text;
    std::vector<std::string> h_lines, entries, bases;
    std::map<std::string, std::string> expect;
    auto fail = [&](const std::string& msg) { return ParseError(origin + ":" + std::to_string(lineno) + ": " + msg); };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw fail("unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            static const std::set<std::string> known{"scenario", "ambient", "h", "expect", "table",
                                                     "twisted", "seeds", "dimension", "notes", "assumptions"};
            if (!known.count(section)) throw fail("unknown section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw fail("expected key = value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (section.empty()) throw fail("key outside any section");
        try {
            if (section == "scenario") {
                if (key == "name") s.name = val;
                else if (key == "title") s.title = val;
                else throw fail("unknown key " + key);
            } else if (section == "ambient") {
                if (key == "algebra") ambient_text = val;
                else if (key == "lattice") {
                    if (val != "A4^6") throw fail("only the A4^6 lattice is supported");
                    s.lattice = true;
                } else throw fail("unknown key " + key);
            } else if (section == "h") {
                if (key != "factor") throw fail("unknown key " + key);
                parse_qlist(val);
                h_lines.push_back(val);
            } else if (section == "expect") {
                static const std::set<std::string> keys{"hh", "fixed", "fixed_dim", "dim_tilde1", "result"};
                if (!keys.count(key)) throw fail("unknown key " + key);
                // validate here so a malformed value is reported at its line
                if (key == "fixed" || key == "result") SemisimpleShape::parse(val);
                else parse_q(val);
                expect[key] = val;
            } else if (section == "table") {
                s.has_table = true;
                if (key == "max_weight") s.table_max = parse_q(val);
                else if (key == "weights") {
                    for (const Q& q : parse_qlist(val)) s.table_weights.insert(to_long(q));
                } else if (key == "entry") entries.push_back(val);
                else throw fail("unknown key " + key);
            } else if (section == "twisted") {
                if (key != "base") throw fail("unknown key " + key);
                bases.push_back(val);
            } else if (section == "seeds") {
                SeedSpec sp;
                if (key == "fixed") sp.kind = SeedSpec::Kind::fixed;
                else if (key == "twisted") sp.kind = SeedSpec::Kind::twisted;
                else throw fail("unknown key " + key);
                SemisimpleShape one = SemisimpleShape::parse(val);
                if (one.ideals.size() != 1 || one.center_dim) throw fail("a seed is a single simple ideal");
                sp.ideal = one.ideals[0];
                s.seeds.push_back(sp);
            } else if (section == "dimension") {
                if (key != "half") throw fail("unknown key " + key);
                if (val == "lowest_weight") s.half_method = Scenario::HalfMethod::lowest_weight;
                else if (val == "bound") s.half_method = Scenario::HalfMethod::bound;
                else throw fail("half must be lowest_weight or bound");
            } else if (section == "notes") {
                if (key != "note") throw fail("unknown key " + key);
                s.notes.push_back(val);
            } else if (section == "assumptions") {
                if (key != "assume") throw fail("unknown key " + key);
                s.assumptions.push_back(val);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
    }

    lineno = 0;
    if (s.name.empty()) throw fail("missing [scenario] name");
    if (s.lattice == !ambient_text.empty()) throw fail("[ambient] needs exactly one of algebra or lattice");
    for (const char* k : {"hh", "fixed", "fixed_dim", "dim_tilde1", "result"}) {
        if (!expect.count(k)) throw fail(std::string("missing [expect] ") + k);
    }
    try {
        s.expect_hh = parse_q(expect["hh"]);
        s.expect_fixed = SemisimpleShape::parse(expect["fixed"]);
        s.expect_fixed_dim = to_long(parse_q(expect["fixed_dim"]));
        s.expect_tilde1 = to_long(parse_q(expect["dim_tilde1"]));
        s.expect_result = SemisimpleShape::parse(expect["result"]);
        if (!s.lattice) {
            s.ambient = parse_product_algebra(ambient_text);
            if (h_lines.size() != s.ambient.factors.size()) throw fail("[h] needs one factor line per ambient factor");
            for (std::size_t i = 0; i < h_lines.size(); ++i) {
                QVec v = parse_qlist(h_lines[i]);
                if (static_cast<int>(v.size()) != s.ambient.factors[i].type.rank) {
                    throw fail("h factor " + std::to_string(i + 1) + " has the wrong length");
                }
                s.h.push_back(v);
            }
        } else if (!h_lines.empty() || s.has_table || !bases.empty()) {
            throw fail("lattice scenarios take h from the lattice and have no [h], [table] or [twisted]");
        }
        const int nf = static_cast<int>(s.ambient.factors.size());
        for (const std::string& e : entries) {
            auto at = e.find('@');
            if (at == std::string::npos) throw fail("table entry needs '@ weight'");
            auto parts = split(e.substr(0, at), '|');
            if (static_cast<int>(parts.size()) != nf) throw fail("table entry '" + e + "' has the wrong number of factors");
            TableEntry te;
            for (int i = 0; i < nf; ++i) te.label.labels.push_back(parse_weight(parts[i], s.ambient.factors[i].type.rank));
            check_labels(s.ambient, te.label);
            te.weight = parse_q(trim(e.substr(at + 1)));
            s.table_expect.push_back(te);
        }
        for (const std::string& b : bases) {
            auto colon = b.find(':');
            if (colon == std::string::npos) throw fail("base weight needs 'm : weights'");
            BaseWeight bw;
            bw.untwisted_weight = to_long(parse_q(trim(b.substr(0, colon))));
            auto parts = split(b.substr(colon + 1), '|');
            if (static_cast<int>(parts.size()) != nf) throw fail("base weight '" + b + "' has the wrong number of factors");
            for (int i = 0; i < nf; ++i) {
                for (long x : parse_weight(parts[i], s.ambient.factors[i].type.rank)) bw.mu.emplace_back(x);
            }
            s.base_weights.push_back(bw);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw fail(e.what());
    }
    bool has_twisted_seed = std::any_of(s.seeds.begin(), s.seeds.end(),
                                        [](const SeedSpec& x) { return x.kind == SeedSpec::Kind::twisted; });
    if (has_twisted_seed && s.base_weights.empty()) throw fail("a twisted seed needs [twisted] base weights");
    return s;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return parse_scenario(in, path);
}

std::vector<std::string> scenario_files(const std::string& dir)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ParseError(dir + ": not a directory");
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".scn") out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* ---------------------------------------------------------------------- */

bool Report::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::first_failure() const
{
    for (const Check& c : checks) {
        if (!c.pass) return c.step;
    }
    return "";
}

namespace {

class Recorder {
public:
    explicit Recorder(Report& r) : r_(r) {}

    void eq(const std::string& step, const std::string& name, const std::string& want, const std::string& got)
    {
        r_.checks.push_back({step, name, want, got, want == got});
    }
    void truth(const std::string& step, const std::string& name, bool ok, const std::string& got = "")
    {
        r_.checks.push_back({step, name, "yes", got.empty() ? yes(ok) : got, ok});
    }
    /* run a step; an exception becomes a failed check carrying its message */
    template <class F>
    void guard(const std::string& step, F&& f)
    {
        try {
            f();
        } catch (const std::exception& e) {
            r_.checks.push_back({step, "completed", "yes", std::string("error: ") + e.what(), false});
        }
    }

private:
    Report& r_;
};

/* seeds from fixed components, each component used at most once */
std::vector<SeedSubalgebra> pick_fixed_seeds(const std::vector<SeedSpec>& specs, std::vector<SeedSubalgebra> pool,
                                             Recorder& rec)
{
    std::vector<SeedSubalgebra> out;
    for (const SeedSpec& sp : specs) {
        if (sp.kind != SeedSpec::Kind::fixed) continue;
        auto it = std::find_if(pool.begin(), pool.end(), [&](const SeedSubalgebra& c) {
            return c.type == sp.ideal.type && c.level == sp.ideal.level;
        });
        std::string want = sp.ideal.type.name() + "," + std::to_string(sp.ideal.level);
        rec.eq("seeds", "fixed seed " + want, want, it == pool.end() ? "(absent)" : want);
        if (it == pool.end()) continue;
        out.push_back(*it);
        pool.erase(it);
    }
    return out;
}

void finish(const Scenario& s, Report& rep, Recorder& rec, long dim_v1, long dim_fixed, long dim_half, int rank,
            const std::vector<SeedSubalgebra>& seeds, const RunOptions& opt)
{
    long tilde1 = -1;
    rec.guard("dimension", [&] {
        DimensionIdentities d = dimension_identities(dim_v1, dim_fixed, dim_half, opt.terms);
        tilde1 = d.dim_tilde1;
        rec.eq("dimension", "dim V~1 (closed form)", std::to_string(s.expect_tilde1), std::to_string(d.dim_tilde1));
        rec.eq("dimension", "dim V~1 (series route)", std::to_string(s.expect_tilde1), std::to_string(d.series_tilde1));
        rec.eq("dimension", "dim (V^g)_2", Z(dimformula_constant() + Z(2048) * dim_half).get_str(), d.dim_g2.get_str());
        rec.eq("dimension", "q^-1/2 coefficient of Z(S tau)", frac(dim_half, 2).get_str(), d.half_coeff.get_str());
    });
    rec.guard("identify", [&] {
        if (tilde1 <= 24) throw Failure("dimension step produced no usable dim V~1");
        auto shapes = identify(rank, tilde1, seeds);
        rec.eq("identify", "candidate count", "1", std::to_string(shapes.size()));
        rec.eq("identify", "shape", s.expect_result.name(), shape_list(shapes));
        if (shapes.size() == 1) rep.result = shapes[0].name();
    });
}

void run_affine(const Scenario& s, Report& rep, Recorder& rec, const RunOptions& opt)
{
    const ProductAlgebra& a = s.ambient;
    rep.v1 = a.name();
    const Q hh = inner_norm(a, s.h);

    rec.guard("order2", [&] {
        bool half = true, moves = false;
        for (std::size_t i = 0; i < a.factors.size(); ++i) {
            const RootDatum& d = build_root_datum(a.factors[i].type);
            for (const IVec& r : d.roots()) {
                Q p = d.form(s.h[i], r);
                half = half && is_half_integer(p);
                moves = moves || !is_integer(p);
            }
        }
        rec.truth("order2", "(h|alpha) in Z/2 for all roots", half);
        rec.truth("order2", "sigma_h acts nontrivially on V1", moves);
    });
    rec.eq("norm", "<h|h>", s.expect_hh.get_str(), hh.get_str());

    /* every module with integral conformal weight; conformal weights are bounded by the label set */
    std::vector<SpectrumEntry> all = integral_spectrum_table(a, Q(1000));
    std::vector<ProductLabel> all_labels;
    for (const auto& e : all) all_labels.push_back(e.label);

    if (s.has_table) {
        rec.guard("table", [&] {
            auto rows = s.table_weights.empty() ? integral_spectrum_table(a, s.table_max)
                                                : integral_spectrum_table(a, s.table_weights);
            std::set<TableEntry> got, want(s.table_expect.begin(), s.table_expect.end());
            for (const auto& r : rows) got.insert({r.label, r.weight});
            std::string missing, extra;
            for (const auto& w : want) {
                if (!got.count(w)) missing += " " + product_label_string(w.label) + "@" + w.weight.get_str();
            }
            for (const auto& g : got) {
                if (!want.count(g)) extra += " " + product_label_string(g.label) + "@" + g.weight.get_str();
            }
            rec.eq("table", "entry count", std::to_string(want.size()), std::to_string(got.size()));
            rec.eq("table", "missing entries", "(none)", missing.empty() ? "(none)" : trim(missing));
            rec.eq("table", "unexpected entries", "(none)", extra.empty() ? "(none)" : trim(extra));
        });
    }
    rec.guard("order2", [&] {
        rec.truth("order2", "(h|lambda) in Z/2 for all integral-weight modules", spectrum_half_integral(a, s.h, all_labels));
    });

    rec.guard("cft", [&] {
        /* -sum k_i h_i must not be a weight of any module occurring in V */
        std::vector<std::optional<IVec>> target;
        for (std::size_t i = 0; i < a.factors.size(); ++i) {
            QVec v = scale(Q(-a.factors[i].level), s.h[i]);
            bool integral = std::all_of(v.begin(), v.end(), [](const Q& x) { return is_integer(x); });
            if (!integral) {
                target.emplace_back();
                continue;
            }
            IVec iv;
            for (const Q& x : v) iv.push_back(to_long(x));
            target.emplace_back(iv);
        }
        bool hit = false;
        if (std::all_of(target.begin(), target.end(), [](const auto& t) { return t.has_value(); })) {
            for (const ProductLabel& p : all_labels) {
                bool all_in = true;
                for (std::size_t i = 0; i < a.factors.size() && all_in; ++i) {
                    const auto& sup = weight_support(build_root_datum(a.factors[i].type), p.labels[i]);
                    all_in = std::binary_search(sup.begin(), sup.end(), *target[i]);
                }
                hit = hit || all_in;
            }
        }
        rec.truth("cft", "-sum k_i h_i is not a weight of V", !hit);
    });

    FixedSubalgebra fixed;
    bool have_fixed = false;
    rec.guard("fixed", [&] {
        fixed = fixed_subalgebra(a, s.h);
        have_fixed = true;
        rep.fixed = fixed.shape.name();
        rec.eq("fixed", "shape", s.expect_fixed.name(), fixed.shape.name());
        rec.eq("fixed", "dim", std::to_string(s.expect_fixed_dim), std::to_string(fixed.shape.dim()));
        rec.eq("fixed", "rank partition", std::to_string(a.rank()), std::to_string(fixed.shape.rank()));
    });
    if (!have_fixed) return;

    std::vector<SeedSubalgebra> seeds = pick_fixed_seeds(s.seeds, fixed.components, rec);
    if (!s.base_weights.empty()) {
        rec.guard("twisted", [&] {
            std::vector<QVec> mus;
            for (const BaseWeight& b : s.base_weights) {
                Q hmu = plain_form_space(a).pair(flatten(s.h), b.mu);
                Q w = b.untwisted_weight + hmu + hh / 2;
                rec.eq("twisted", "L(0)-weight of base " + str(b.mu), "1", w.get_str());
                mus.push_back(b.mu);
            }
            std::vector<QVec> tw = twisted_sector_roots(a, s.h, mus);
            std::vector<QVec> fixed_roots;
            for (const auto& c : fixed.components) fixed_roots.insert(fixed_roots.end(), c.roots.begin(), c.roots.end());
            SeedSubalgebra psi = assemble_root_subsystem(fixed_roots, tw, dual_form_space(a));
            std::string got = psi.type.name() + "," + std::to_string(psi.level);
            for (const SeedSpec& sp : s.seeds) {
                if (sp.kind != SeedSpec::Kind::twisted) continue;
                std::string want = sp.ideal.type.name() + "," + std::to_string(sp.ideal.level);
                rec.eq("twisted", "assembled subsystem", want, got);
                rec.eq("twisted", "assembled root count", std::to_string(sp.ideal.type.adjoint_dim() - sp.ideal.type.rank),
                       std::to_string(psi.roots.size()));
            }
            seeds.push_back(psi);
        });
    }

    long dim_half = -1;
    rec.guard("half", [&] {
        if (s.half_method == Scenario::HalfMethod::lowest_weight) {
            std::optional<Q> lo;
            for (const ProductLabel& p : all_labels) {
                Q v = product_twisted_lowest(a, p, s.h);
                if (!lo || v < *lo) lo = v;
            }
            rec.eq("half", "lowest L(0)-weight of V^(h)", "1", lo->get_str());
            if (*lo > frac(1, 2)) dim_half = 0;
        } else {
            /* dim V~1 = 3 g1 - V1 + 24 (1 - d) >= g1 */
            Q bound = frac(2 * fixed.shape.dim() - a.dim() + 24, 24);
            rec.truth("half", "d <= (2 dim g1 - dim V1 + 24)/24 < 1", bound < 1 && bound >= 0, bound.get_str());
            if (bound < 1 && bound >= 0) dim_half = 0;
        }
        rec.eq("half", "dim V^(h)_1/2", "0", std::to_string(dim_half));
    });
    if (dim_half < 0) return;
    finish(s, rep, rec, a.dim(), fixed.shape.dim(), dim_half, a.rank(), seeds, opt);
}

void run_lattice(const Scenario& s, Report& rep, Recorder& rec, const RunOptions& opt)
{
    NiemeierLattice n;
    bool built = false;
    rec.guard("lattice", [&] {
        n = build_niemeier();
        built = true;
        auto th = n.theta(1);
        rec.eq("lattice", "glue code order", "125", std::to_string(n.glue.words.size()));
        rec.eq("lattice", "glue generator rank mod 5", "3", std::to_string(n.glue.generator_rank));
        rec.eq("lattice", "Gram determinant", "1", determinant(n.gram).get_str());
        rec.eq("lattice", "roots", "120", th[1].get_str());
    });
    if (!built) return;
    const QVec h = h_vector();
    const Q hh = dot(h, h);
    rec.eq("norm", "<h|h>", s.expect_hh.get_str(), hh.get_str());
    rec.truth("order2", "2h in N", n.contains(scale(Q(2), h)));
    rec.truth("order2", "h not in N", !n.contains(h));
    rec.truth("cft", "-h is not in N", !n.contains(scale(Q(-1), h)));
    for (int eps : {1, -1})
        for (int r : {1, 2}) {
            std::string tag = "(" + std::to_string(eps) + "," + std::to_string(r) + ")";
            rec.eq("twisted", "(h|eps f^r) " + tag, "0", dot(h, twist_shift(eps, r)).get_str());
            rec.eq("twisted", "|S| " + tag, "5", std::to_string(enumerate_S(eps, r).size()));
            rec.eq("twisted", "weight-one dimension " + tag, "5", std::to_string(twisted_weight_one(eps, r).dimension));
        }
    auto mult = tau0_eigen_multiplicities();
    rec.eq("twisted", "twist anomaly", "4/5", twist_anomaly(5, {mult[1], mult[2], mult[3], mult[4]}).get_str());

    FixedA45 f;
    bool have = false;
    rec.guard("fixed", [&] {
        f = fixed_shape_A45(h);
        have = true;
        rep.v1 = f.v1_shape.name();
        rep.fixed = f.fixed_shape.name();
        rec.eq("fixed", "V1 shape", "A4,5^2", f.v1_shape.name());
        rec.eq("fixed", "shape", s.expect_fixed.name(), f.fixed_shape.name());
        rec.eq("fixed", "dim", std::to_string(s.expect_fixed_dim), std::to_string(f.fixed_shape.dim()));
        rec.truth("fixed", "(alpha_i|Lambda) = delta_i4", f.alpha_pattern);
        rec.truth("fixed", "(beta_i|Lambda') = delta_i4", f.beta_pattern);
        rec.truth("fixed", "5 beta_i simple roots of norm 2 under (.|.)/5", f.level5);
    });
    if (!have) return;
    std::vector<SeedSubalgebra> seeds = pick_fixed_seeds(s.seeds, f.seeds, rec);

    long dim_half = -1;
    rec.guard("half", [&] {
        LowestWeightCheck lw = lowest_weight_check(n);
        rec.truth("half", "min (1/2)|alpha+h|^2 > 1/2", lw.untwisted_min > frac(1, 2), lw.untwisted_min.get_str());
        rec.truth("half", "twisted-sector minimum > 1/2", lw.twisted_min > frac(1, 2), lw.twisted_min.get_str());
        rec.truth("half", "half-integral spectrum", lw.half_integral);
        rec.eq("half", "lowest L(0)-weight", "1", lw.lowest.get_str());
        if (lw.lowest == 1) dim_half = 0;
        rec.eq("half", "dim V^(h)_1/2", "0", std::to_string(dim_half));
    });
    if (dim_half < 0) return;
    finish(s, rep, rec, f.v1_shape.dim(), f.fixed_shape.dim(), dim_half, 8, seeds, opt);
}

}

Report run_scenario(const Scenario& s, const RunOptions& opt)
{
    Report rep;
    rep.scenario = s.name;
    rep.title = s.title;
    rep.notes = s.notes;
    rep.assumptions = s.assumptions;
    Recorder rec(rep);
    if (s.lattice) run_lattice(s, rep, rec, opt);
    else run_affine(s, rep, rec, opt);
    return rep;
}

std::string format_report(const Report& r, bool verbose)
{
    std::ostringstream o;
    o << "== " << r.scenario << (r.title.empty() ? "" : ": " + r.title) << "\n";
    for (const std::string& a : r.assumptions) o << "  ASSUMPTION: " << a << "\n";
    for (const std::string& n : r.notes) o << "  note: " << n << "\n";
    for (const Check& c : r.checks) {
        if (!verbose && c.pass) continue;
        o << "  [" << c.step << "] " << c.name << ": expected " << c.expected << ", got " << c.actual << "  "
          << (c.pass ? "PASS" : "FAIL") << "\n";
    }
    o << "  V1 = " << (r.v1.empty() ? "?" : r.v1) << " | fixed = " << (r.fixed.empty() ? "?" : r.fixed)
      << " | new = " << (r.result.empty() ? "?" : r.result) << "\n";
    std::size_t npass = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
    o << "  " << (r.passed() ? "PASS" : "FAIL") << " (" << npass << "/" << r.checks.size() << " checks)";
    if (!r.passed()) o << ", first failing step: " << r.first_failure();
    o << "\n";
    return o.str();
}

std::string format_table(const ProductAlgebra& a, const std::vector<SpectrumEntry>& rows)
{
    std::ostringstream o;
    o << "# " << a.name() << "\n";
    for (const auto& r : rows) o << product_label_string(r.label) << "\t" << r.weight.get_str() << "\n";
    return o.str();
}

}
