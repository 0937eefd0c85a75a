#include "voa24/affine.hpp"

#include <cctype>
#include <sstream>

namespace voa24 {

int ProductAlgebra::rank() const
{
    int r = 0;
    for (const Factor& f : factors) r += f.type.rank;
    return r;
}

long ProductAlgebra::dim() const
{
    long d = 0;
    for (const Factor& f : factors) d += f.type.adjoint_dim();
    return d;
}

std::string ProductAlgebra::name() const
{
    std::string s;
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (!s.empty()) s += " ";
        s += factors[i].type.name() + "," + std::to_string(factors[i].level);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

static void enumerate_rec(const RootDatum& d, int k, int i, long used, IVec& cur, std::vector<AffineLabel>& out)
{
    if (i == d.rank()) {
        out.push_back({d.type(), k, cur});
        return;
    }
    const long c = d.comarks()[i];
    for (long v = 0; used + v * c <= k; ++v) {
        cur[i] = v;
        enumerate_rec(d, k, i + 1, used + v * c, cur, out);
    }
    cur[i] = 0;
}

std::vector<AffineLabel> enumerate_modules(SimpleType t, int k)
{
    if (k < 1) throw std::invalid_argument("level must be positive");
    const RootDatum& d = build_root_datum(t);
    std::vector<AffineLabel> out;
    IVec cur(d.rank(), 0);
    enumerate_rec(d, k, 0, 0, cur, out);
    return out;
}

Q conformal_weight(const AffineLabel& m)
{
    const RootDatum& d = build_root_datum(m.type);
    Q t = d.form(m.lambda, d.theta());
    if (!d.is_dominant(m.lambda) || t > m.level) {
        throw std::invalid_argument("label " + weight_label(m.lambda) + " not admissible at level " + std::to_string(m.level));
    }
    IVec l2 = m.lambda;
    for (long& x : l2) x += 2;
    return d.form(l2, m.lambda) / (2 * (m.level + d.dual_coxeter()));
}

template <class Keep>
static std::vector<SpectrumEntry> spectrum(const ProductAlgebra& a, Keep keep)
{
    std::vector<std::vector<std::pair<IVec, Q>>> per;
    for (const Factor& f : a.factors) {
        std::vector<std::pair<IVec, Q>> v;
        for (const AffineLabel& m : enumerate_modules(f.type, f.level)) v.emplace_back(m.lambda, conformal_weight(m));
        per.push_back(std::move(v));
    }
    std::vector<SpectrumEntry> out;
    std::vector<std::size_t> idx(per.size(), 0);
    for (;;) {
        Q w = 0;
        for (std::size_t i = 0; i < per.size(); ++i) w += per[i][idx[i]].second;
        if (is_integer(w) && w >= 0 && keep(w)) {
            ProductLabel p;
            for (std::size_t i = 0; i < per.size(); ++i) p.labels.push_back(per[i][idx[i]].first);
            out.push_back({std::move(p), w});
        }
        std::size_t i = per.size();
        while (i > 0) {
            --i;
            if (++idx[i] < per[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (per.empty()) return out;
    }
}

std::vector<SpectrumEntry> integral_spectrum_table(const ProductAlgebra& a, const Q& max_weight)
{
    if (max_weight < 0) throw std::invalid_argument("max_weight must be nonnegative");
    return spectrum(a, [&](const Q& w) { return w <= max_weight; });
}

std::vector<SpectrumEntry> integral_spectrum_table(const ProductAlgebra& a, const std::set<long>& weights)
{
    return spectrum(a, [&](const Q& w) { return weights.count(w.get_num().get_si()) > 0; });
}

Q inner_norm(const ProductAlgebra& a, const HVector& h)
{
    Q s = 0;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        const RootDatum& d = build_root_datum(a.factors[i].type);
        s += a.factors[i].level * d.form(h[i], h[i]);
    }
    return s;
}

Q pairing(const ProductAlgebra& a, const HVector& h, const ProductLabel& mu)
{
    Q s = 0;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        s += build_root_datum(a.factors[i].type).form(h[i], mu.labels[i]);
    }
    return s;
}

void check_labels(const ProductAlgebra& a, const ProductLabel& p)
{
    if (p.labels.size() != a.factors.size()) throw std::invalid_argument("label has wrong number of factors");
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        const RootDatum& d = build_root_datum(a.factors[i].type);
        if (static_cast<int>(p.labels[i].size()) != d.rank() || !d.is_dominant(p.labels[i]) ||
            d.form(p.labels[i], d.theta()) > a.factors[i].level) {
            throw std::invalid_argument("label " + weight_label(p.labels[i]) + " not admissible for " +
                                        a.factors[i].type.name() + " at level " +
                                        std::to_string(a.factors[i].level));
        }
    }
}

Q product_twisted_lowest(const ProductAlgebra& a, const ProductLabel& m, const HVector& h)
{
    check_labels(a, m);
    Q s = 0;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        const Factor& f = a.factors[i];
        const RootDatum& d = build_root_datum(f.type);
        s += conformal_weight({f.type, f.level, m.labels[i]});
        s += min_pairing(d, h[i], m.labels[i]);
        s += f.level * d.form(h[i], h[i]) / 2;
    }
    return s;
}

bool spectrum_half_integral(const ProductAlgebra& a, const HVector& h, const std::vector<ProductLabel>& labels)
{
    for (const ProductLabel& p : labels) {
        if (!is_half_integer(pairing(a, h, p))) return false;
    }
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        const RootDatum& d = build_root_datum(a.factors[i].type);
        for (const IVec& r : d.positive_roots()) {
            if (!is_half_integer(d.form(h[i], r))) return false;
        }
    }
    return true;
}

PositivityCertificate twisted_positivity_certificate(const AffineLabel& m, const QVec& h)
{
    const RootDatum& d = build_root_datum(m.type);
    PositivityCertificate c;
    for (const IVec& r : d.roots()) {
        if (d.form(h, r) < -1) {
            c.kind = PositivityCertificate::Kind::precondition_violated;
            return c;
        }
    }
    c.value = conformal_weight(m) + min_pairing(d, h, m.lambda) + m.level * d.form(h, h) / 2;
    if (c.value > 0) {
        c.kind = PositivityCertificate::Kind::positive;
    } else if (c.value < 0) {
        c.kind = PositivityCertificate::Kind::negative_violation;
    } else {
        c.kind = PositivityCertificate::Kind::zero_with_witness;
        bool vac = is_zero(h);
        for (long x : m.lambda) vac = vac && x == 0;
        if (vac) {
            c.witness = 0;
            return c;
        }
        /* the weight only depends on the Weyl orbit of h, so h = -Lambda_j is
         * read up to W: the dominant representative of -h must be Lambda_j */
        bool integral = true;
        IVec neg(d.rank(), 0);
        for (int i = 0; i < d.rank(); ++i) {
            integral = integral && is_integer(h[i]);
            if (integral) neg[i] = -to_long(h[i]);
        }
        const IVec dom = integral ? d.dominant_rep(neg) : IVec{};
        for (int j = 0; integral && j < d.rank(); ++j) {
            bool ok = true;
            for (int i = 0; i < d.rank(); ++i) {
                ok = ok && m.lambda[i] == (i == j ? m.level : 0) && dom[i] == (i == j ? 1 : 0);
            }
            if (ok) {
                c.witness = j + 1;
                return c;
            }
        }
        throw Failure("twisted lowest weight 0 for " + weight_label(m.lambda) + " without a witness");
    }
    return c;
}

IVec parse_weight_label(const std::string& raw, int rank)
{
    IVec v(rank, 0);
    std::string s;
    for (char ch : raw) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s == "0") return v;
    std::size_t i = 0;
    auto read_int = [&](long dflt) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) return dflt;
        long x = std::stol(s.substr(i, j - i));
        i = j;
        return x;
    };
    auto fail = [&]() { return std::invalid_argument("malformed weight label '" + raw + "'"); };
    if (s.empty()) throw fail();
    while (i < s.size()) {
        if (s[i] == '+') {
            ++i;
            if (i == s.size()) throw fail();
        }
        long c = read_int(1);
        if (i >= s.size() || s[i] != 'L') throw fail();
        ++i;
        long idx = read_int(0);
        if (idx < 1 || idx > rank) throw fail();
        if (i < s.size() && s[i] == '^') {
            ++i;
            long e = read_int(0);
            if (e < 1) throw fail();
            c *= e;
        }
        v[idx - 1] += c;
    }
    return v;
}

std::string weight_label(const IVec& lambda)
{
    std::string s;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] == 0) continue;
        if (!s.empty()) s += lambda[i] > 0 ? "+" : "";
        if (lambda[i] == -1) s += "-";
        else if (lambda[i] != 1) s += std::to_string(lambda[i]);
        s += "L" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

std::string product_label_string(const ProductLabel& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
        if (i) s += ", ";
        s += weight_label(p.labels[i]);
    }
    return s + ")";
}

ProductAlgebra parse_product_algebra(const std::string& s)
{
    ProductAlgebra a;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("factor '" + tok + "' lacks a level");
        std::string rest = tok.substr(comma + 1);
        int mult = 1;
        auto caret = rest.find('^');
        if (caret != std::string::npos) {
            mult = static_cast<int>(to_long(parse_q(rest.substr(caret + 1))));
            rest = rest.substr(0, caret);
        }
        int level = static_cast<int>(to_long(parse_q(rest)));
        if (level < 1 || mult < 1) throw std::invalid_argument("bad level or multiplicity in '" + tok + "'");
        Factor f{SimpleType::parse(tok.substr(0, comma)), level};
        for (int i = 0; i < mult; ++i) a.factors.push_back(f);
    }
    if (a.factors.empty()) throw std::invalid_argument("empty product algebra");
    return a;
}

}
