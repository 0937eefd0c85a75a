#include "voa24/orbifold.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace voa24 {

Q FormSpace::pair(const QVec& a, const QVec& b) const
{
    Q s = 0;
    const std::size_t n = gram.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] != 0 && gram[i][j] != 0) s += a[i] * gram[i][j] * b[j];
        }
    }
    return s;
}

static FormSpace product_space(const ProductAlgebra& a, bool divide_by_level)
{
    FormSpace s;
    const int n = a.rank();
    s.gram.assign(n, QVec(n, Q(0)));
    int off = 0;
    for (const Factor& f : a.factors) {
        const RootDatum& d = build_root_datum(f.type);
        for (int i = 0; i < d.rank(); ++i)
            for (int j = 0; j < d.rank(); ++j) {
                s.gram[off + i][off + j] = d.weight_form()[i][j];
                if (divide_by_level) s.gram[off + i][off + j] /= f.level;
            }
        off += d.rank();
    }
    return s;
}

FormSpace dual_form_space(const ProductAlgebra& a)
{
    return product_space(a, true);
}

FormSpace plain_form_space(const ProductAlgebra& a)
{
    return product_space(a, false);
}

QVec flatten(const HVector& h)
{
    QVec v;
    for (const QVec& x : h) v.insert(v.end(), x.begin(), x.end());
    return v;
}

HVector unflatten(const ProductAlgebra& a, const QVec& v)
{
    HVector h;
    std::size_t off = 0;
    for (const Factor& f : a.factors) {
        h.emplace_back(v.begin() + off, v.begin() + off + f.type.rank);
        off += f.type.rank;
    }
    return h;
}

std::vector<QVec> factor_roots(const ProductAlgebra& a, std::size_t i)
{
    std::size_t off = 0;
    for (std::size_t j = 0; j < i; ++j) off += a.factors[j].type.rank;
    std::vector<QVec> out;
    for (const IVec& r : build_root_datum(a.factors[i].type).roots()) {
        QVec v(a.rank(), Q(0));
        for (std::size_t k = 0; k < r.size(); ++k) v[off + k] = r[k];
        out.push_back(std::move(v));
    }
    return out;
}

/* ---------------------------------------------------------------------- */

std::vector<std::vector<QVec>> split_components(const std::vector<QVec>& roots, const FormSpace& s)
{
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s.pair(roots[i], roots[j]) != 0) parent[find(i)] = find(j);
        }
    std::vector<std::vector<QVec>> comps;
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        auto it = slot.find(r);
        if (it == slot.end()) {
            it = slot.emplace(r, comps.size()).first;
            comps.emplace_back();
        }
        comps[it->second].push_back(roots[i]);
    }
    return comps;
}

static Q functional(const QVec& v)
{
    /* weights far apart so that no small rational vector is annihilated */
    Q s = 0, w = 1;
    for (const Q& x : v) {
        s += x * w;
        w *= 1000003;
    }
    return s;
}

std::vector<QVec> simple_system(const std::vector<QVec>& roots, const FormSpace&)
{
    std::set<QVec> pos;
    for (const QVec& r : roots) {
        Q f = functional(r);
        if (f == 0) throw Failure("positivity functional vanishes on a root");
        if (f > 0) pos.insert(r);
    }
    std::vector<QVec> simple;
    for (const QVec& a : pos) {
        bool decomposable = false;
        for (const QVec& b : pos) {
            if (b == a) continue;
            if (pos.count(sub(a, b))) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(a);
    }
    return simple;
}

std::vector<IVec> cartan_of(const std::vector<QVec>& simple, const FormSpace& s)
{
    const std::size_t n = simple.size();
    std::vector<IVec> c(n, IVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Q v = 2 * s.pair(simple[i], simple[j]) / s.norm(simple[j]);
            if (!is_integer(v)) throw Failure("non-integral Cartan entry");
            c[i][j] = v.get_num().get_si();
        }
    return c;
}

static std::vector<SimpleType> catalog(int max_rank)
{
    std::vector<SimpleType> out;
    for (int n = 1; n <= max_rank; ++n) {
        out.push_back({'A', n});
        if (n >= 3) out.push_back({'B', n});
        if (n >= 2) out.push_back({'C', n});
        if (n >= 4) out.push_back({'D', n});
        if (n >= 6 && n <= 8) out.push_back({'E', n});
        if (n == 4) out.push_back({'F', 4});
        if (n == 2) out.push_back({'G', 2});
    }
    return out;
}

static bool match_perm(const std::vector<IVec>& a, const std::vector<IVec>& c, std::vector<int>& perm,
                       std::vector<bool>& used, std::size_t i)
{
    const std::size_t n = a.size();
    if (i == n) return true;
    for (std::size_t p = 0; p < n; ++p) {
        if (used[p] || a[i][i] != c[p][p]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
            ok = a[i][j] == c[p][perm[j]] && a[j][i] == c[perm[j]][p];
        }
        if (!ok) continue;
        used[p] = true;
        perm[i] = static_cast<int>(p);
        if (match_perm(a, c, perm, used, i + 1)) return true;
        used[p] = false;
    }
    return false;
}

SimpleType classify_cartan(const std::vector<IVec>& cartan)
{
    const int n = static_cast<int>(cartan.size());
    if (n < 1 || n > 12) throw Failure("cannot classify a Cartan matrix of rank " + std::to_string(n));
    for (const SimpleType& t : catalog(n)) {
        if (t.rank != n) continue;
        const auto& c = build_root_datum(t).cartan();
        std::vector<int> perm(n);
        std::vector<bool> used(n, false);
        if (match_perm(cartan, c, perm, used, 0)) return t;
    }
    throw Failure("Cartan matrix matches no simple type");
}

bool is_root_system(const std::vector<QVec>& roots, const FormSpace& s, std::string* why)
{
    std::set<QVec> all(roots.begin(), roots.end());
    for (const QVec& a : roots) {
        Q na = s.norm(a);
        if (na <= 0) {
            if (why) *why = "non-positive norm for " + str(a);
            return false;
        }
        for (const QVec& b : roots) {
            Q c = 2 * s.pair(b, a) / na;
            if (!is_integer(c)) {
                if (why) *why = "non-integral pairing between " + str(a) + " and " + str(b);
                return false;
            }
            if (!all.count(sub(b, scale(c, a)))) {
                if (why) *why = "reflection of " + str(b) + " in " + str(a) + " leaves the set";
                return false;
            }
        }
    }
    return true;
}

bool is_simple_system(const std::vector<QVec>& cand, const std::vector<QVec>& roots, const FormSpace& s)
{
    std::set<QVec> all(roots.begin(), roots.end());
    for (const QVec& c : cand) {
        if (!all.count(c)) return false;
    }
    const std::size_t n = cand.size();
    QMat g(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = s.pair(cand[i], cand[j]);
    QMat gi;
    try {
        gi = inverse(g);
    } catch (const Failure&) {
        return false;
    }
    for (const QVec& r : roots) {
        QVec p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = s.pair(cand[i], r);
        QVec coef(n, Q(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) coef[i] += gi[i][j] * p[j];
        QVec back(r.size(), Q(0));
        for (std::size_t i = 0; i < n; ++i) back = add(back, scale(coef[i], cand[i]));
        if (back != r) return false;
        bool pos = true, neg = true;
        for (const Q& x : coef) {
            if (!is_integer(x)) return false;
            if (x < 0) pos = false;
            if (x > 0) neg = false;
        }
        if (!pos && !neg) return false;
    }
    return true;
}

/* ---------------------------------------------------------------------- */

void SemisimpleShape::normalize()
{
    std::sort(ideals.begin(), ideals.end(), [](const Ideal& a, const Ideal& b) {
        if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
        if (a.type.letter != b.type.letter) return a.type.letter < b.type.letter;
        return a.level < b.level;
    });
}

long SemisimpleShape::dim() const
{
    long d = center_dim;
    for (const Ideal& i : ideals) d += i.type.adjoint_dim();
    return d;
}

int SemisimpleShape::rank() const
{
    int r = center_dim;
    for (const Ideal& i : ideals) r += i.type.rank;
    return r;
}

std::string SemisimpleShape::name() const
{
    SemisimpleShape c = *this;
    c.normalize();
    std::string s;
    for (std::size_t i = 0; i < c.ideals.size();) {
        std::size_t j = i;
        while (j < c.ideals.size() && c.ideals[j] == c.ideals[i]) ++j;
        if (!s.empty()) s += " ";
        s += c.ideals[i].type.name() + "," + std::to_string(c.ideals[i].level);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    if (c.center_dim > 0) {
        if (!s.empty()) s += " ";
        s += "U1";
        if (c.center_dim > 1) s += "^" + std::to_string(c.center_dim);
    }
    return s.empty() ? "0" : s;
}

SemisimpleShape SemisimpleShape::parse(const std::string& text)
{
    SemisimpleShape sh;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int mult = 1;
        auto caret = tok.find('^');
        std::string base = tok;
        if (caret != std::string::npos) {
            mult = static_cast<int>(to_long(parse_q(tok.substr(caret + 1))));
            base = tok.substr(0, caret);
        }
        if (mult < 1) throw std::invalid_argument("bad multiplicity in '" + tok + "'");
        if (base == "U1") {
            sh.center_dim += mult;
            continue;
        }
        auto comma = base.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("ideal '" + tok + "' lacks a level");
        Ideal id{SimpleType::parse(base.substr(0, comma)), static_cast<int>(to_long(parse_q(base.substr(comma + 1))))};
        if (id.level < 1) throw std::invalid_argument("bad level in '" + tok + "'");
        for (int i = 0; i < mult; ++i) sh.ideals.push_back(id);
    }
    sh.normalize();
    return sh;
}

bool SemisimpleShape::operator==(const SemisimpleShape& o) const
{
    SemisimpleShape a = *this, b = o;
    a.normalize();
    b.normalize();
    return a.ideals == b.ideals && a.center_dim == b.center_dim;
}

/* ---------------------------------------------------------------------- */

int level_transfer(const SeedSubalgebra& seed, const Factor& ambient)
{
    if (seed.ambient_long_norm == 2) {
        if (!seed.long_in_ambient) throw Failure("seed marked short but its long roots have norm 2");
        return ambient.level;
    }
    int ratio = 0;
    switch (ambient.type.letter) {
    case 'B':
    case 'C':
    case 'F': ratio = 2; break;
    case 'G': ratio = 3; break;
    default: throw Failure("short seed inside simply-laced " + ambient.type.name());
    }
    if (seed.long_in_ambient || seed.ambient_long_norm != frac(2, ratio)) {
        throw Failure("seed norms inconsistent with ambient " + ambient.type.name());
    }
    return ambient.level * ratio;
}

FixedSubalgebra fixed_subalgebra(const ProductAlgebra& a, const HVector& h)
{
    if (h.size() != a.factors.size()) throw std::invalid_argument("h has wrong number of factors");
    FixedSubalgebra out;
    const FormSpace plain = plain_form_space(a);
    const FormSpace dual = dual_form_space(a);
    const QVec hf = flatten(h);
    int used_rank = 0;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        std::vector<QVec> fixed;
        for (const QVec& r : factor_roots(a, i)) {
            Q p = plain.pair(hf, r);
            if (!is_half_integer(p)) throw std::invalid_argument("(h|alpha) not in Z/2 for a root of factor " + std::to_string(i + 1));
            if (is_integer(p)) fixed.push_back(r);
        }
        for (const auto& comp : split_components(fixed, plain)) {
            std::vector<QVec> simple = simple_system(comp, plain);
            SeedSubalgebra seed;
            seed.type = classify_cartan(cartan_of(simple, plain));
            seed.roots = comp;
            Q ln = 0;
            for (const QVec& r : comp) ln = std::max(ln, plain.norm(r));
            seed.ambient_long_norm = ln;
            seed.long_in_ambient = ln == 2;
            seed.level = level_transfer(seed, a.factors[i]);
            auto longest = std::find_if(comp.begin(), comp.end(), [&](const QVec& r) { return plain.norm(r) == ln; });
            if (dual.norm(*longest) != frac(2, seed.level)) {
                throw Failure("level of a fixed component disagrees with its dual-form norm");
            }
            seed.origin = "fixed:" + std::to_string(i + 1);
            if (static_cast<long>(comp.size()) != seed.type.adjoint_dim() - seed.type.rank) {
                throw Failure("fixed component has the wrong number of roots for " + seed.type.name());
            }
            used_rank += seed.type.rank;
            out.shape.ideals.push_back({seed.type, seed.level});
            out.components.push_back(std::move(seed));
        }
    }
    out.shape.center_dim = a.rank() - used_rank;
    out.shape.normalize();
    return out;
}

std::vector<QVec> twisted_sector_roots(const ProductAlgebra& a, const HVector& h, const std::vector<QVec>& base)
{
    HVector kh = h;
    for (std::size_t i = 0; i < a.factors.size(); ++i) kh[i] = scale(Q(a.factors[i].level), h[i]);
    QVec shift = flatten(kh);
    std::vector<QVec> out;
    for (const QVec& mu : base) {
        if (mu.size() != shift.size()) throw std::invalid_argument("base weight has wrong length");
        out.push_back(add(mu, shift));
    }
    return out;
}

SeedSubalgebra assemble_root_subsystem(const std::vector<QVec>& fixed_roots, const std::vector<QVec>& twisted_roots,
                                       const FormSpace& s)
{
    std::set<QVec> fixed_set(fixed_roots.begin(), fixed_roots.end());
    std::set<QVec> uni = fixed_set;
    std::set<QVec> tw;
    for (const QVec& t : twisted_roots) {
        tw.insert(t);
        tw.insert(scale(Q(-1), t));
    }
    uni.insert(tw.begin(), tw.end());
    std::vector<QVec> all(uni.begin(), uni.end());
    std::string why;
    if (!is_root_system(all, s, &why)) throw Failure("not a root system: " + why);
    const std::vector<QVec>* hit = nullptr;
    auto comps = split_components(all, s);
    for (const auto& c : comps) {
        bool meets = std::any_of(c.begin(), c.end(), [&](const QVec& v) { return tw.count(v) > 0; });
        if (!meets) continue;
        if (hit) throw Failure("twisted roots spread over several components");
        hit = &c;
    }
    if (!hit) throw Failure("no twisted roots given");
    SeedSubalgebra seed;
    seed.roots = *hit;
    seed.type = classify_cartan(cartan_of(simple_system(*hit, s), s));
    Q ln = 0;
    for (const QVec& r : *hit) ln = std::max(ln, s.norm(r));
    Q lev = 2 / ln;
    if (!is_integer(lev)) throw Failure("assembled component has non-integral level");
    bool witnessed = std::any_of(hit->begin(), hit->end(), [&](const QVec& v) { return fixed_set.count(v) && s.norm(v) == ln; });
    if (!witnessed) throw Failure("assembled component contains no long fixed-sector root to fix its level");
    seed.level = static_cast<int>(to_long(lev));
    seed.origin = "twisted";
    return seed;
}

/* ---------------------------------------------------------------------- */

namespace {

struct RootTable {
    std::vector<int> norm6;
    std::vector<std::vector<int>> g6;   // 6 (alpha|beta)
};

const RootTable& root_table(SimpleType y)
{
    static std::mutex mu;
    static std::map<SimpleType, std::unique_ptr<RootTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(y);
    if (it != cache.end()) return *it->second;
    const RootDatum& d = build_root_datum(y);
    auto t = std::make_unique<RootTable>();
    const auto& r = d.roots();
    t->g6.assign(r.size(), std::vector<int>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i; j < r.size(); ++j) {
            int v = static_cast<int>(to_long(6 * d.form(r[i], r[j])));
            t->g6[i][j] = t->g6[j][i] = v;
        }
        t->norm6.push_back(t->g6[i][i]);
    }
    return *cache.emplace(y, std::move(t)).first->second;
}

struct EmbedSearch {
    const RootTable& table;
    std::vector<std::vector<int>> target;
    std::vector<int> order;
    std::vector<int> chosen;
    bool long_only;

    bool run(std::size_t pos)
    {
        if (pos == order.size()) return true;
        const int i = order[pos];
        const int want = target[i][i];
        for (std::size_t r = 0; r < table.norm6.size(); ++r) {
            if (table.norm6[r] != want || (long_only && want != 12)) continue;
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                ok = table.g6[r][chosen[order[q]]] == target[i][order[q]];
            }
            if (!ok) continue;
            chosen[i] = static_cast<int>(r);
            if (run(pos + 1)) return true;
            /* all roots of one length form a single Weyl orbit: the first node may be fixed */
            if (pos == 0) return false;
        }
        return false;
    }
};

bool embed_gram(const QMat& gram, SimpleType y, bool long_only)
{
    static std::mutex mu;
    static std::map<std::tuple<std::string, SimpleType, bool>, bool> cache;
    std::string key;
    for (const auto& row : gram)
        for (const Q& x : row) key += x.get_str() + ",";
    auto ck = std::make_tuple(key, y, long_only);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(ck);
        if (it != cache.end()) return it->second;
    }
    const std::size_t n = gram.size();
    bool result = false;
    if (static_cast<int>(n) <= y.rank) {
        EmbedSearch s{root_table(y), {}, {}, std::vector<int>(n, -1), long_only};
        s.target.assign(n, std::vector<int>(n));
        bool integral = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Q v = 6 * gram[i][j];
                integral = integral && is_integer(v);
                if (integral) s.target[i][j] = static_cast<int>(to_long(v));
            }
        if (integral) {
            /* breadth-first order inside each connected piece */
            std::vector<bool> seen(n, false);
            for (std::size_t st = 0; st < n; ++st) {
                if (seen[st]) continue;
                std::deque<std::size_t> q{st};
                seen[st] = true;
                while (!q.empty()) {
                    std::size_t u = q.front();
                    q.pop_front();
                    s.order.push_back(static_cast<int>(u));
                    for (std::size_t v = 0; v < n; ++v) {
                        if (!seen[v] && s.target[u][v] != 0) {
                            seen[v] = true;
                            q.push_back(v);
                        }
                    }
                }
            }
            result = s.run(0);
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[ck] = result;
    return result;
}

QMat block_gram(const std::vector<std::pair<SimpleType, Q>>& parts)
{
    std::size_t n = 0;
    for (const auto& p : parts) n += p.first.rank;
    QMat g(n, QVec(n, Q(0)));
    std::size_t off = 0;
    for (const auto& [t, sc] : parts) {
        QMat b = simple_root_gram(t);
        for (int i = 0; i < t.rank; ++i)
            for (int j = 0; j < t.rank; ++j) g[off + i][off + j] = sc * b[i][j];
        off += t.rank;
    }
    return g;
}

Q short_norm(SimpleType y)
{
    switch (y.letter) {
    case 'B':
    case 'C':
    case 'F': return 1;
    case 'G': return frac(2, 3);
    default: return 2;
    }
}

}

bool embeds(const std::vector<SimpleType>& x, SimpleType y, bool long_only)
{
    std::vector<std::pair<SimpleType, Q>> parts;
    for (const SimpleType& t : x) parts.emplace_back(t, Q(1));
    return embed_gram(block_gram(parts), y, long_only);
}

bool embeds(SimpleType x, SimpleType y, bool long_only)
{
    return embeds(std::vector<SimpleType>{x}, y, long_only);
}

bool embeds_short(const std::vector<SimpleType>& x, SimpleType y)
{
    if (y.simply_laced()) return false;
    std::vector<std::pair<SimpleType, Q>> parts;
    for (const SimpleType& t : x) {
        if (!t.simply_laced()) return false;
        parts.emplace_back(t, short_norm(y) / 2);
    }
    return embed_gram(block_gram(parts), y, false);
}

/* ---------------------------------------------------------------------- */

namespace {

struct Assignment {
    std::vector<std::vector<std::pair<SimpleType, Q>>> per_ideal;
};

bool assign_seeds(const std::vector<Ideal>& ideals, const std::vector<SeedSubalgebra>& seeds, std::size_t k,
                  Assignment& asg)
{
    if (k == seeds.size()) return true;
    const SeedSubalgebra& s = seeds[k];
    for (std::size_t j = 0; j < ideals.size(); ++j) {
        const Ideal& id = ideals[j];
        /* branch 1: long roots of the seed stay long, level unchanged */
        std::vector<Q> scales;
        if (id.level == s.level) scales.push_back(1);
        /* branch 2: seed inside the short roots, level divided by the length ratio */
        if (!id.type.simply_laced() && s.type.simply_laced()) {
            int ratio = id.type.letter == 'G' ? 3 : 2;
            if (id.level * ratio == s.level) scales.push_back(short_norm(id.type) / 2);
        }
        for (const Q& sc : scales) {
            asg.per_ideal[j].emplace_back(s.type, sc);
            if (embed_gram(block_gram(asg.per_ideal[j]), id.type, false) && assign_seeds(ideals, seeds, k + 1, asg)) {
                return true;
            }
            asg.per_ideal[j].pop_back();
        }
    }
    return false;
}

void enumerate_shapes(const std::vector<Ideal>& cands, std::size_t from, int rank_left, long dim_left,
                      std::vector<Ideal>& cur, const std::vector<SeedSubalgebra>& seeds,
                      std::vector<SemisimpleShape>& out)
{
    if (rank_left == 0 && dim_left == 0) {
        Assignment asg;
        asg.per_ideal.resize(cur.size());
        if (assign_seeds(cur, seeds, 0, asg)) {
            SemisimpleShape sh;
            sh.ideals = cur;
            sh.normalize();
            out.push_back(sh);
        }
        return;
    }
    for (std::size_t i = from; i < cands.size(); ++i) {
        const Ideal& c = cands[i];
        if (c.type.rank > rank_left || c.type.adjoint_dim() > dim_left) continue;
        cur.push_back(c);
        enumerate_shapes(cands, i, rank_left - c.type.rank, dim_left - c.type.adjoint_dim(), cur, seeds, out);
        cur.pop_back();
    }
}

}

std::vector<SemisimpleShape> identify(int rank_budget, long dim_target, const std::vector<SeedSubalgebra>& seeds)
{
    if (dim_target <= 24) throw std::invalid_argument("identify needs dim_target > 24");
    const Q ratio = frac(dim_target - 24, 24);
    std::vector<Ideal> cands;
    for (const SimpleType& t : catalog(std::min(rank_budget, 12))) {
        if (t.adjoint_dim() > dim_target) continue;
        Q k = Q(build_root_datum(t).dual_coxeter()) / ratio;
        if (is_integer(k) && k > 0) cands.push_back({t, static_cast<int>(to_long(k))});
    }
    std::vector<SemisimpleShape> out;
    std::vector<Ideal> cur;
    enumerate_shapes(cands, 0, rank_budget, dim_target, cur, seeds, out);
    std::sort(out.begin(), out.end(), [](const SemisimpleShape& a, const SemisimpleShape& b) { return a.name() < b.name(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/* ---------------------------------------------------------------------- */

Fusion verlinde_simple_current(int a)
{
    if (a != 1 && a != -1) throw std::invalid_argument("a must be 1 or -1");
    const Q h(1, 2);
    const std::array<std::array<Q, 4>, 4> S = {{{h, h, h, h}, {h, h, -h, -h}, {h, -h, a * h, -a * h}, {h, -h, -a * h, a * h}}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Q v = 0;
            for (int k = 0; k < 4; ++k) v += S[i][k] * S[k][j];
            if (v != (i == j ? 1 : 0)) throw Failure("S^2 is not the identity");
        }
    Fusion n{};
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            for (int r = 0; r < 4; ++r) {
                Q v = 0;
                for (int x = 0; x < 4; ++x) v += S[p][x] * S[q][x] * S[r][x] / S[0][x];
                if (!is_integer(v) || v < 0) throw Failure("fusion number " + v.get_str() + " is not a nonnegative integer");
                n[p][q][r] = static_cast<int>(to_long(v));
            }
    for (int p = 0; p < 4; ++p)
        for (int r = 0; r < 4; ++r) {
            if (n[p][p][r] != (r == 0 ? 1 : 0)) throw Failure("module " + std::to_string(p) + " is not a self-dual simple current");
        }
    return n;
}

}
