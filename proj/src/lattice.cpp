#include "voa24/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace voa24 {

namespace {

long floor_q(const Q& q)
{
    Z f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f.get_si();
}

long ceil_q(const Q& q)
{
    Z c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c.get_si();
}

int mod5(long x)
{
    return static_cast<int>(((x % 5) + 5) % 5);
}

Word add_words(const Word& a, const Word& b)
{
    Word c;
    for (int i = 0; i < kBlocks; ++i) c[i] = (a[i] + b[i]) % 5;
    return c;
}

int rank_mod5(std::vector<Word> rows)
{
    int r = 0;
    for (int col = 0; col < kBlocks && r < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][col] % 5 != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        int inv = 1;
        while ((rows[r][col] * inv) % 5 != 1) ++inv;
        for (int& x : rows[r]) x = (x * inv) % 5;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            int f = rows[i][col];
            for (int j = 0; j < kBlocks; ++j) rows[i][j] = mod5(rows[i][j] - f * rows[r][j]);
        }
        ++r;
    }
    return r;
}

QVec concat_blocks(const std::vector<QVec>& blocks)
{
    QVec v;
    for (const QVec& b : blocks) v.insert(v.end(), b.begin(), b.end());
    return v;
}

ZMat scaled_rows(const std::vector<QVec>& vs, long factor)
{
    ZMat m;
    for (const QVec& v : vs) {
        std::vector<Z> row;
        for (const Q& x : v) {
            Q y = x * factor;
            if (!is_integer(y)) throw Failure("vector not in (1/" + std::to_string(factor) + ")Z^n: " + str(v));
            row.push_back(y.get_num());
        }
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<QVec> unscale_rows(const ZMat& m, long factor)
{
    std::vector<QVec> out;
    for (const auto& row : m) {
        QVec v;
        for (const Z& x : row) v.push_back(frac(x, factor));
        out.push_back(std::move(v));
    }
    return out;
}

/* smallest norm in shift + A4 */
Q coset_min(const QVec& shift)
{
    for (Q bound = 2;; bound *= 2) {
        auto ys = enumerate_coset(shift, bound);
        if (ys.empty()) continue;
        Q m = dot(ys[0], ys[0]);
        for (const QVec& y : ys) m = std::min(m, Q(dot(y, y)));
        return m;
    }
}

std::vector<QVec> a4_roots()
{
    std::vector<QVec> out;
    for (const QVec& y : enumerate_coset(QVec(kBlockDim, Q(0)), 2)) {
        if (dot(y, y) == 2) out.push_back(y);
    }
    return out;
}

}

/* ---------------------------------------------------------------------- */

bool GlueCode::contains(const Word& w) const
{
    return std::binary_search(words.begin(), words.end(), w);
}

GlueCode build_glue_code()
{
    GlueCode c;
    c.generators = {{1, 0, 1, 4, 4, 1}, {1, 1, 0, 1, 4, 4}, {1, 4, 1, 0, 1, 4}, {1, 4, 4, 1, 0, 1}};
    std::set<Word> seen{Word{}};
    std::vector<Word> frontier{Word{}};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (const Word& g : c.generators) {
                Word s = add_words(w, g);
                if (seen.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    c.words.assign(seen.begin(), seen.end());
    c.generator_rank = rank_mod5(c.generators);
    if (c.words.size() != 125) throw Failure("glue code has order " + std::to_string(c.words.size()) + ", expected 125");
    return c;
}

/* ---------------------------------------------------------------------- */

QVec a4_simple_root(int i)
{
    if (i < 1 || i > 4) throw std::invalid_argument("A4 simple root index out of range");
    QVec v(kBlockDim, Q(0));
    v[i - 1] = 1;
    v[i] = -1;
    return v;
}

QVec a4_glue(int g)
{
    g = mod5(g);
    QVec v(kBlockDim, frac(g, 5));
    v[4] = frac(-4 * g, 5);
    return v;
}

int a4_dual_class(const QVec& v)
{
    if (v.size() != kBlockDim) return -1;
    Q sum = 0;
    int cls = -1;
    for (const Q& x : v) {
        Q y = 5 * x;
        if (!is_integer(y)) return -1;
        int c = mod5(y.get_num().get_si());
        if (cls >= 0 && c != cls) return -1;
        cls = c;
        sum += x;
    }
    return sum == 0 ? cls : -1;
}

std::vector<QVec> enumerate_coset(const QVec& shift, const Q& bound)
{
    if (shift.size() != kBlockDim) throw std::invalid_argument("coset shift must have 5 coordinates");
    Q s = 0;
    for (const Q& x : shift) s += x;
    if (s != 0) throw std::invalid_argument("coset shift must lie in the sum-zero hyperplane");
    long R = 0;
    while (Q(R * R) < bound) ++R;
    std::vector<QVec> out;
    QVec y(kBlockDim);
    auto rec = [&](auto&& self, int j, Q partial, Q msum) -> void {
        if (partial > bound) return;
        if (j == kBlockDim - 1) {
            y[j] = shift[j] - msum;
            Q n = partial + y[j] * y[j];
            if (n <= bound) out.push_back(y);
            return;
        }
        for (long m = ceil_q(-R - shift[j]); m <= floor_q(R - shift[j]); ++m) {
            y[j] = shift[j] + m;
            self(self, j + 1, partial + y[j] * y[j], msum + m);
        }
    };
    rec(rec, 0, Q(0), Q(0));
    std::sort(out.begin(), out.end());
    return out;
}

std::array<Q, 5> a4_coset_min_norms()
{
    std::array<Q, 5> m;
    for (int g = 0; g < 5; ++g) m[g] = coset_min(a4_glue(g));
    return m;
}

QVec block(const QVec& v, int b)
{
    return QVec(v.begin() + b * kBlockDim, v.begin() + (b + 1) * kBlockDim);
}

QVec with_block(const QVec& b1, int b)
{
    QVec v(kAmbient, Q(0));
    std::copy(b1.begin(), b1.end(), v.begin() + b * kBlockDim);
    return v;
}

/* ---------------------------------------------------------------------- */

ZMat integer_row_basis(ZMat rows)
{
    if (rows.empty()) return rows;
    const std::size_t ncol = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncol && r < rows.size(); ++col) {
        for (;;) {
            std::size_t piv = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col])) piv = i;
            }
            if (piv == rows.size()) break;
            std::swap(rows[piv], rows[r]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
                for (std::size_t j = col; j < ncol; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (r >= rows.size() || rows[r][col] == 0) continue;
        if (rows[r][col] < 0) {
            for (Z& x : rows[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Z q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
            if (q != 0) {
                for (std::size_t j = col; j < ncol; ++j) rows[i][j] -= q * rows[r][j];
            }
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

bool NiemeierLattice::contains(const QVec& v) const
{
    if (v.size() != kAmbient) return false;
    Word w;
    for (int b = 0; b < kBlocks; ++b) {
        int c = a4_dual_class(block(v, b));
        if (c < 0) return false;
        w[b] = c;
    }
    return glue.contains(w);
}

std::vector<Z> NiemeierLattice::theta(int max_half) const
{
    /* per-class distributions of 5|y|^2, convolved over the six blocks of each codeword */
    const Q bound = 2 * max_half;
    const long cap = 10 * max_half;
    std::array<std::map<long, Z>, 5> dist;
    for (int g = 0; g < 5; ++g) {
        for (const QVec& y : enumerate_coset(a4_glue(g), bound)) dist[g][to_long(5 * dot(y, y))] += 1;
    }
    std::vector<Z> out(max_half + 1, Z(0));
    for (const Word& w : glue.words) {
        std::map<long, Z> acc{{0, Z(1)}};
        for (int b = 0; b < kBlocks; ++b) {
            std::map<long, Z> nxt;
            for (const auto& [n1, c1] : acc)
                for (const auto& [n2, c2] : dist[w[b]]) {
                    if (n1 + n2 <= cap) nxt[n1 + n2] += c1 * c2;
                }
            acc = std::move(nxt);
        }
        for (const auto& [n, c] : acc) {
            if (n % 10 != 0) throw Failure("odd norm in the lattice");
            out[n / 10] += c;
        }
    }
    return out;
}

NiemeierLattice build_niemeier()
{
    NiemeierLattice n;
    n.glue = build_glue_code();
    std::vector<QVec> gens;
    for (int b = 0; b < kBlocks; ++b)
        for (int i = 1; i <= 4; ++i) gens.push_back(with_block(a4_simple_root(i), b));
    for (const Word& w : n.glue.generators) {
        std::vector<QVec> bl;
        for (int b = 0; b < kBlocks; ++b) bl.push_back(a4_glue(w[b]));
        gens.push_back(concat_blocks(bl));
    }
    n.basis = unscale_rows(integer_row_basis(scaled_rows(gens, 5)), 5);
    if (n.basis.size() != 24) throw Failure("lattice basis has rank " + std::to_string(n.basis.size()));
    n.gram.assign(24, QVec(24));
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) n.gram[i][j] = dot(n.basis[i], n.basis[j]);
    for (int i = 0; i < 24; ++i) {
        if (!n.contains(n.basis[i])) throw Failure("basis vector outside the glued lattice");
        for (int j = 0; j < 24; ++j) {
            if (!is_integer(n.gram[i][j])) throw Failure("lattice is not integral");
        }
        if (n.gram[i][i].get_num() % 2 != 0) throw Failure("lattice is not even");
    }
    if (determinant(n.gram) != 1) throw Failure("lattice is not unimodular");
    auto th = n.theta(1);
    if (th[1] != 120) throw Failure("lattice has " + th[1].get_str() + " roots, expected 120");
    return n;
}

/* ---------------------------------------------------------------------- */

QVec tau0(const QVec& v)
{
    QVec w = v;
    for (int b = 1; b < kBlocks; ++b) {
        int to = b == kBlocks - 1 ? 1 : b + 1;
        std::copy(v.begin() + b * kBlockDim, v.begin() + (b + 1) * kBlockDim, w.begin() + to * kBlockDim);
    }
    return w;
}

QVec project_fixed(const QVec& v)
{
    QVec w = v;
    for (int j = 0; j < kBlockDim; ++j) {
        Q avg = 0;
        for (int b = 1; b < kBlocks; ++b) avg += v[b * kBlockDim + j];
        avg /= kBlocks - 1;
        for (int b = 1; b < kBlocks; ++b) w[b * kBlockDim + j] = avg;
    }
    return w;
}

std::vector<QVec> fixed_projection_basis(const NiemeierLattice& n)
{
    std::vector<QVec> img;
    for (const QVec& v : n.basis) img.push_back(project_fixed(v));
    ZMat got = integer_row_basis(scaled_rows(img, 5));

    /* {(5a, b, b, b, b, b)/5 : a in A4^*, b in A4} */
    std::vector<QVec> expect;
    for (int i = 1; i <= 4; ++i) expect.push_back(with_block(a4_simple_root(i), 0));
    expect.push_back(with_block(a4_glue(1), 0));
    for (int i = 1; i <= 4; ++i) {
        QVec b = scale(frac(1, 5), a4_simple_root(i));
        expect.push_back(concat_blocks({QVec(kBlockDim, Q(0)), b, b, b, b, b}));
    }
    ZMat want = integer_row_basis(scaled_rows(expect, 5));
    if (got != want) throw Failure("P_0(N) differs from {(5a, b,b,b,b,b)/5}");
    return unscale_rows(got, 5);
}

std::array<int, 5> tau0_eigen_multiplicities()
{
    /* block permutation of tau_0; a k-cycle of rank-4 blocks contributes 4 to
     * every k-th root of unity */
    std::array<int, kBlocks> perm{0, 2, 3, 4, 5, 1};
    std::array<int, 5> m{};
    std::array<bool, kBlocks> seen{};
    for (int s = 0; s < kBlocks; ++s) {
        if (seen[s]) continue;
        int k = 0;
        for (int x = s; !seen[x]; x = perm[x]) {
            seen[x] = true;
            ++k;
        }
        if (5 % k != 0) throw Failure("tau_0 cycle length does not divide 5");
        for (int t = 0; t < k; ++t) m[t * (5 / k)] += 4;
    }
    return m;
}

/* ---------------------------------------------------------------------- */

QVec delta(int r)
{
    if (r == 1) return {frac(2, 5), frac(1, 5), Q(0), frac(-1, 5), frac(-2, 5)};
    if (r == 2) return {frac(-1, 5), frac(2, 5), Q(0), frac(-2, 5), frac(1, 5)};
    throw std::invalid_argument("r must be 1 or 2");
}

QVec twist_shift(int eps, int r)
{
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be 1 or -1");
    return with_block(scale(Q(eps), delta(r)), 0);
}

std::vector<QVec> beta_vectors()
{
    auto v = [](std::initializer_list<long> xs) {
        QVec out;
        for (long x : xs) out.push_back(frac(x, 5));
        return out;
    };
    return {v({-2, 2, 1, 0, -1}), v({0, -1, -2, 2, 1}), v({2, 1, 0, -1, -2}), v({-1, -2, 2, 1, 0}),
            v({1, 0, -1, -2, 2})};
}

std::vector<QVec> enumerate_S(int eps, int r)
{
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be 1 or -1");
    const QVec d = scale(Q(eps), delta(r));
    std::vector<QVec> out;
    for (int g = 0; g < 5; ++g) {
        int hits = 0;
        /* |a + d|^2 = 2/5 forces |a|^2 <= 8/5 */
        for (const QVec& a : enumerate_coset(a4_glue(g), frac(8, 5))) {
            QVec y = add(a, d);
            if (dot(y, y) == frac(2, 5)) {
                out.push_back(y);
                ++hits;
            }
        }
        if (hits != 1) throw Failure("coset " + std::to_string(g) + " has " + std::to_string(hits) + " solutions");
    }
    if (out.size() != 5) throw Failure("|S| != 5");
    return out;
}

Q twist_anomaly(int n, const std::vector<int>& m)
{
    if (n < 1) throw std::invalid_argument("order must be positive");
    Q s = 0;
    for (std::size_t j = 1; j <= m.size(); ++j) {
        Q t = frac(static_cast<long>(j), n);
        s += m[j - 1] * t * (1 - t);
    }
    return s / 4;
}

std::vector<Z> twisted_heisenberg_dims(int max_index)
{
    const auto mult = tau0_eigen_multiplicities();
    std::vector<Z> a(max_index + 1, Z(0));
    a[0] = 1;
    auto bosons = [&](int k, int c) {
        for (int rep = 0; rep < c; ++rep)
            for (int i = k; i <= max_index; ++i) a[i] += a[i - k];
    };
    /* modes (j/5 + n) on the 1/15 grid: index 3j + 15n */
    for (int n = 1; 15 * n <= max_index; ++n) bosons(15 * n, mult[0]);
    for (int j = 1; j < 5; ++j)
        for (int n = 0; 3 * j + 15 * n <= max_index; ++n) bosons(3 * j + 15 * n, mult[j]);
    return a;
}

namespace {

const std::vector<QVec>& verified_p0_basis()
{
    static std::once_flag once;
    static std::vector<QVec> b;
    std::call_once(once, [] { b = fixed_projection_basis(build_niemeier()); });
    return b;
}

}

TwistedWeightOne twisted_weight_one(int eps, int r)
{
    verified_p0_basis();
    const auto mult = tau0_eigen_multiplicities();
    const Q anomaly = twist_anomaly(5, {mult[1], mult[2], mult[3], mult[4]});
    const Q room = 1 - anomaly;                // l + |x + eps f|^2 / 2
    const QVec d = scale(Q(eps), delta(r));
    const auto heis = twisted_heisenberg_dims(to_long(15 * room));
    TwistedWeightOne out;
    /* x = (5a, b,b,b,b,b)/5, |x + eps f|^2 = |a + eps delta|^2 + |b|^2/5 */
    std::vector<QVec> bs = enumerate_coset(QVec(kBlockDim, Q(0)), 5 * 2 * room);
    for (int g = 0; g < 5; ++g) {
        for (const QVec& y : enumerate_coset(add(a4_glue(g), d), 2 * room)) {
            for (const QVec& b : bs) {
                Q nrm = dot(y, y) + dot(b, b) / 5;
                Q ell = room - nrm / 2;
                if (ell < 0) continue;
                Q idx = 15 * ell;
                if (!is_integer(idx)) continue;
                Z dim = heis[to_long(idx)];
                if (dim == 0) continue;
                QVec bb = scale(frac(1, 5), b);
                out.x.push_back(concat_blocks({sub(y, d), bb, bb, bb, bb, bb}));
                out.weights.push_back(y);
                out.dimension += dim.get_si();
            }
        }
    }
    return out;
}

/* ---------------------------------------------------------------------- */

QVec lambda_block()
{
    return a4_glue(1);
}

QVec lambda_prime()
{
    const auto b = beta_vectors();
    QVec v(kBlockDim, Q(0));
    for (int i = 1; i <= 4; ++i) v = add(v, scale(Q(i), b[i]));
    return v;
}

QVec h_vector()
{
    const QVec l = lambda_block();
    return scale(frac(1, 2), concat_blocks({lambda_prime(), l, l, l, l, l}));
}

std::optional<Q> min_norm_shifted(const NiemeierLattice& n, const QVec& h, const Q& bound)
{
    if (h.size() != kAmbient) throw std::invalid_argument("h must have 30 coordinates");
    std::map<std::pair<int, int>, std::optional<Q>> cache;
    auto block_min = [&](int g, int b) -> std::optional<Q> {
        auto key = std::make_pair(g, b);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::optional<Q> m;
        for (const QVec& y : enumerate_coset(add(a4_glue(g), block(h, b)), bound)) {
            Q v = dot(y, y);
            if (!m || v < *m) m = v;
        }
        cache[key] = m;
        return m;
    };
    std::optional<Q> best;
    for (const Word& w : n.glue.words) {
        Q total = 0;
        bool ok = true;
        for (int b = 0; b < kBlocks && ok; ++b) {
            auto m = block_min(w[b], b);
            if (!m) ok = false;
            else total += *m;
        }
        if (ok && total <= bound && (!best || total < *best)) best = total;
    }
    return best;
}

Q min_norm_twisted(const QVec& h, int eps, int r)
{
    for (int b = 2; b < kBlocks; ++b) {
        if (block(h, b) != block(h, 1)) throw std::invalid_argument("h is not tau_0-fixed");
    }
    /* |(a + h_1 + eps delta) |^2 + 5 |b/5 + h_2|^2, a in A4^*, b in A4 */
    const QVec first = add(block(h, 0), scale(Q(eps), delta(r)));
    std::optional<Q> ma;
    for (int g = 0; g < 5; ++g) {
        Q m = coset_min(add(a4_glue(g), first));
        if (!ma || m < *ma) ma = m;
    }
    Q mb = coset_min(scale(Q(5), block(h, 1))) / 5;
    return *ma + mb;
}

LowestWeightCheck lowest_weight_check(const NiemeierLattice& n)
{
    const QVec h = h_vector();
    LowestWeightCheck c;
    auto m = min_norm_shifted(n, h, dot(h, h));
    if (!m) throw Failure("no vector of N + h within |h|^2");
    c.untwisted_min = *m / 2;
    const auto mult = tau0_eigen_multiplicities();
    const Q anomaly = twist_anomaly(5, {mult[1], mult[2], mult[3], mult[4]});
    std::optional<Q> tw;
    for (int eps : {1, -1})
        for (int r : {1, 2}) {
            Q v = anomaly + min_norm_twisted(h, eps, r) / 2;
            if (!tw || v < *tw) tw = v;
        }
    c.twisted_min = *tw;
    c.half_integral = true;
    for (const QVec& v : n.basis) c.half_integral = c.half_integral && is_half_integer(dot(h, v));
    for (const QVec& v : verified_p0_basis()) c.half_integral = c.half_integral && is_half_integer(dot(h, v));
    const Q vacuum = dot(h, h) / 2;
    /* with half-integral weights, everything above 1/2 is at least 1 */
    if (c.half_integral && c.untwisted_min > frac(1, 2) && c.twisted_min > frac(1, 2)) {
        c.lowest = std::min(vacuum, Q(1));
    } else {
        c.lowest = std::min(c.untwisted_min, c.twisted_min);
    }
    return c;
}

/* ---------------------------------------------------------------------- */

FixedA45 fixed_shape_A45(const QVec& h)
{
    FormSpace plain;
    plain.gram.assign(kAmbient, QVec(kAmbient, Q(0)));
    for (int i = 0; i < kAmbient; ++i) plain.gram[i][i] = 1;

    std::vector<QVec> roots;
    for (int eps : {1, -1})
        for (int r : {1, 2})
            for (const QVec& s : enumerate_S(eps, r)) roots.push_back(with_block(s, 0));
    for (const QVec& a : a4_roots()) roots.push_back(project_fixed(with_block(a, 1)));
    std::string why;
    if (!is_root_system(roots, plain, &why)) throw Failure("weight-one roots do not form a root system: " + why);

    FixedA45 out;
    auto shape_of = [&](const std::vector<QVec>& rs, std::vector<SeedSubalgebra>* seeds) {
        SemisimpleShape sh;
        int rank = 0;
        for (const auto& comp : split_components(rs, plain)) {
            SimpleType t = classify_cartan(cartan_of(simple_system(comp, plain), plain));
            Q ln = 0;
            for (const QVec& v : comp) ln = std::max(ln, plain.norm(v));
            Q lev = 2 / ln;
            if (!is_integer(lev)) throw Failure("non-integral level " + lev.get_str());
            sh.ideals.push_back({t, static_cast<int>(to_long(lev))});
            rank += t.rank;
            if (seeds) {
                SeedSubalgebra s;
                s.type = t;
                s.level = static_cast<int>(to_long(lev));
                s.roots = comp;
                s.ambient_long_norm = ln;
                s.origin = "lattice";
                seeds->push_back(std::move(s));
            }
        }
        sh.center_dim = 8 - rank;
        sh.normalize();
        return sh;
    };
    out.v1_shape = shape_of(roots, nullptr);

    std::vector<QVec> fixed;
    for (const QVec& r : roots) {
        Q p = dot(h, r);
        if (!is_half_integer(p)) throw Failure("(h|root) not in Z/2");
        if (is_integer(p)) fixed.push_back(r);
    }
    out.fixed_shape = shape_of(fixed, &out.seeds);

    const QVec lam = lambda_block(), lamp = lambda_prime();
    const auto beta = beta_vectors();
    out.alpha_pattern = out.beta_pattern = true;
    for (int i = 1; i <= 4; ++i) {
        Q want = i == 4 ? 1 : 0;
        out.alpha_pattern = out.alpha_pattern && dot(a4_simple_root(i), lam) == want;
        out.beta_pattern = out.beta_pattern && dot(beta[i], lamp) == want;
    }
    /* (.|.)_0 = (.|.)/5 on the first block; 5 beta_i should be simple roots of norm 2 */
    FormSpace scaled;
    scaled.gram.assign(kBlockDim, QVec(kBlockDim, Q(0)));
    for (int i = 0; i < kBlockDim; ++i) scaled.gram[i][i] = frac(1, 5);
    std::vector<QVec> tb;
    for (int i = 1; i <= 4; ++i) tb.push_back(scale(Q(5), beta[i]));
    out.level5 = std::all_of(tb.begin(), tb.end(), [&](const QVec& v) { return scaled.norm(v) == 2; });
    if (out.level5) {
        try {
            out.level5 = classify_cartan(cartan_of(tb, scaled)) == SimpleType{'A', 4};
        } catch (const Failure&) {
            out.level5 = false;
        }
    }
    return out;
}

std::string dump_lattice(const NiemeierLattice& n)
{
    std::ostringstream o;
    o << "# basis (rows, 30 coordinates)\n";
    for (const QVec& v : n.basis) {
        for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "\t" : "") << v[i].get_str();
        o << "\n";
    }
    o << "# gram\n";
    for (const QVec& row : n.gram) {
        for (std::size_t i = 0; i < row.size(); ++i) o << (i ? "\t" : "") << row[i].get_str();
        o << "\n";
    }
    return o.str();
}

}
