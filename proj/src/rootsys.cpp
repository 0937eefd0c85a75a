#include "voa24/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace voa24 {

bool SimpleType::valid() const
{
    if (rank < 1 || rank > 12) return false;
    switch (letter) {
    case 'A': return true;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
    }
}

std::string SimpleType::name() const
{
    return std::string(1, letter) + std::to_string(rank);
}

long SimpleType::adjoint_dim() const
{
    const long n = rank;
    switch (letter) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return n == 6 ? 78 : n == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
    }
    return 0;
}

SimpleType SimpleType::parse(const std::string& s)
{
    if (s.size() < 2 || s.size() > 3) throw std::invalid_argument("bad simple type '" + s + "'");
    SimpleType t;
    t.letter = s[0];
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw std::invalid_argument("bad simple type '" + s + "'");
        }
    }
    t.rank = std::stoi(s.substr(1));
    if (!t.valid()) throw std::invalid_argument("invalid simple type '" + s + "'");
    return t;
}

QMat simple_root_gram(SimpleType t)
{
    if (!t.valid()) throw std::invalid_argument("invalid simple type " + t.name());
    const int n = t.rank;
    QMat g(n, QVec(n, Q(0)));
    auto link = [&](int i, int j, Q v) {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    for (int i = 0; i < n; ++i) g[i][i] = 2;
    switch (t.letter) {
    case 'A':
        for (int i = 1; i < n; ++i) link(i, i + 1, -1);
        break;
    case 'B':
        for (int i = 1; i < n; ++i) link(i, i + 1, -1);
        g[n - 1][n - 1] = 1;
        break;
    case 'C':
        for (int i = 1; i < n; ++i) g[i - 1][i - 1] = 1;
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, frac(-1, 2));
        link(n - 1, n, -1);
        break;
    case 'D':
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
        link(n - 2, n, -1);
        break;
    case 'E':
        link(1, 3, -1);
        link(2, 4, -1);
        for (int i = 3; i < n; ++i) link(i, i + 1, -1);
        break;
    case 'F':
        link(1, 2, -1);
        link(2, 3, -1);
        link(3, 4, frac(-1, 2));
        g[2][2] = 1;
        g[3][3] = 1;
        break;
    case 'G':
        g[0][0] = frac(2, 3);
        link(1, 2, -1);
        break;
    }
    return g;
}

RootDatum::RootDatum(SimpleType t) : type_(t)
{
    if (!t.valid()) throw std::invalid_argument("invalid simple type " + t.name());
    const int n = t.rank;
    gram_ = simple_root_gram(t);
    cartan_.assign(n, IVec(n, 0));
    QMat cq(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Q a = 2 * gram_[i][j] / gram_[j][j];
            cartan_[i][j] = to_long(a);
            cq[i][j] = a;
        }
    cartan_inv_ = inverse(cq);
    wform_.assign(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) wform_[i][j] = cartan_inv_[i][j] * gram_[j][j] / 2;

    /* roots: Weyl orbits of the simple roots */
    std::unordered_set<IVec, IVecHash> seen;
    std::deque<IVec> queue;
    for (int i = 0; i < n; ++i) {
        if (seen.insert(cartan_[i]).second) queue.push_back(cartan_[i]);
    }
    while (!queue.empty()) {
        IVec mu = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            IVec nu = reflect(mu, i);
            if (seen.insert(nu).second) queue.push_back(nu);
        }
    }
    struct Keyed {
        QVec coords;
        IVec mu;
    };
    std::vector<Keyed> all;
    for (const IVec& mu : seen) all.push_back({root_coords(mu), mu});
    std::sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) {
        Q ha = 0, hb = 0;
        for (const Q& x : a.coords) ha += x;
        for (const Q& x : b.coords) hb += x;
        if (ha != hb) return ha < hb;
        return a.coords < b.coords;
    });
    for (const Keyed& k : all) {
        roots_.push_back(k.mu);
        bool pos = true, neg = true;
        for (const Q& x : k.coords) {
            if (!is_integer(x)) throw Failure("non-integral root coordinates in " + t.name());
            if (x < 0) pos = false;
            if (x > 0) neg = false;
        }
        if (pos == neg) throw Failure("root neither positive nor negative in " + t.name());
        if (pos) {
            positive_.push_back(k.mu);
            Q dnorm = norm(k.mu) / 2;
            IVec co(n);
            for (int i = 0; i < n; ++i) co[i] = to_long(k.coords[i] * (gram_[i][i] / 2) / dnorm);
            coroots_.push_back(co);
        }
    }

    if (static_cast<long>(roots_.size()) != t.adjoint_dim() - n) {
        throw Failure("root count mismatch for " + t.name());
    }
    bool found_theta = false;
    for (const IVec& a : positive_) {
        Q nn = norm(a);
        if (nn != 2 && nn != 1 && nn != frac(2, 3)) throw Failure("unexpected root norm in " + t.name());
        if (is_dominant(a) && nn == 2) {
            if (found_theta) throw Failure("two dominant long roots in " + t.name());
            theta_ = a;
            found_theta = true;
        }
    }
    if (!found_theta) throw Failure("no highest root for " + t.name());
    for (const IVec& a : roots_) {
        IVec m = a;
        for (long& x : m) x = -x;
        if (!seen.count(m)) throw Failure("root set not closed under negation");
    }
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            Q v = 2 * form(fundamental_weight(j), cartan_[i]) / gram_[i][i];
            if (v != (i == j ? 1 : 0)) throw Failure("fundamental weights not dual to coroots");
        }
    theta_comarks_.resize(n);
    for (int i = 0; i < n; ++i) theta_comarks_[i] = to_long(form(theta_, fundamental_weight(i)));
    Q hv = form(theta_, theta_) / 2 + form(theta_, rho());
    dual_coxeter_ = static_cast<int>(to_long(hv));
}

Q RootDatum::form(const QVec& a, const QVec& b) const
{
    Q s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) s += a[i] * wform_[i][j] * b[j];
    }
    return s;
}

Q RootDatum::form(const QVec& a, const IVec& b) const
{
    Q s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) {
            if (b[j] != 0) s += a[i] * wform_[i][j] * b[j];
        }
    }
    return s;
}

Q RootDatum::form(const IVec& a, const IVec& b) const
{
    Q s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) {
            if (b[j] != 0) s += wform_[i][j] * (a[i] * b[j]);
        }
    }
    return s;
}

QVec RootDatum::dual(const QVec& h) const
{
    QVec w(rank(), Q(0));
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) w[j] += h[i] * wform_[i][j];
    return w;
}

IVec RootDatum::fundamental_weight(int i) const
{
    IVec v(rank(), 0);
    v[i] = 1;
    return v;
}

QVec RootDatum::root_coords(const IVec& mu) const
{
    QVec c(rank(), Q(0));
    for (int i = 0; i < rank(); ++i) {
        if (mu[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) c[j] += mu[i] * cartan_inv_[i][j];
    }
    return c;
}

long RootDatum::coroot_pairing(const IVec& mu, std::size_t k) const
{
    long s = 0;
    const IVec& c = coroots_[k];
    for (int i = 0; i < rank(); ++i) s += c[i] * mu[i];
    return s;
}

IVec RootDatum::reflect(const IVec& mu, int i) const
{
    IVec r = mu;
    const long m = mu[i];
    if (m == 0) return r;
    for (int j = 0; j < rank(); ++j) r[j] -= m * cartan_[i][j];
    return r;
}

bool RootDatum::is_dominant(const IVec& mu) const
{
    return std::all_of(mu.begin(), mu.end(), [](long x) { return x >= 0; });
}

IVec RootDatum::dominant_rep(IVec mu) const
{
    for (;;) {
        int i = 0;
        while (i < rank() && mu[i] >= 0) ++i;
        if (i == rank()) return mu;
        mu = reflect(mu, i);
    }
}

const RootDatum& build_root_datum(SimpleType t)
{
    static std::mutex mu;
    static std::map<SimpleType, std::unique_ptr<RootDatum>> cache;
    if (!t.valid()) throw std::invalid_argument("invalid simple type " + t.name());
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, std::make_unique<RootDatum>(t)).first;
    return *it->second;
}

static void require_dominant(const RootDatum& d, const IVec& lambda)
{
    if (static_cast<int>(lambda.size()) != d.rank() || !d.is_dominant(lambda)) {
        throw std::invalid_argument("weight " + str(lambda) + " is not dominant integral for " + d.type().name());
    }
}

/*
 * Dominant weights of V(lambda). For dominant mu and a positive root alpha with
 * m = <mu, alpha^vee> > 0 the whole string mu - t alpha (0 <= t <= m) lies in
 * the support; strings through non-dominant weights are Weyl images of these,
 * so closing the dominant set under "string then dominant_rep" is enough.
 */
std::vector<IVec> dominant_weights(const RootDatum& d, const IVec& lambda)
{
    require_dominant(d, lambda);
    std::unordered_set<IVec, IVecHash> seen{lambda};
    std::deque<IVec> queue{lambda};
    const auto& pos = d.positive_roots();
    while (!queue.empty()) {
        IVec mu = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < pos.size(); ++k) {
            long m = d.coroot_pairing(mu, k);
            IVec nu = mu;
            for (long t = 1; t <= m; ++t) {
                for (int j = 0; j < d.rank(); ++j) nu[j] -= pos[k][j];
                IVec rep = d.dominant_rep(nu);
                if (seen.insert(rep).second) queue.push_back(rep);
            }
        }
    }
    std::vector<IVec> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

static std::vector<IVec> compute_support(const RootDatum& d, const IVec& lambda)
{
    std::unordered_set<IVec, IVecHash> seen;
    std::vector<IVec> stack;
    for (const IVec& mu : dominant_weights(d, lambda)) {
        seen.insert(mu);
        stack.push_back(mu);
    }
    while (!stack.empty()) {
        IVec mu = std::move(stack.back());
        stack.pop_back();
        for (int i = 0; i < d.rank(); ++i) {
            if (mu[i] <= 0) continue;   // only walk down; the orbit is still covered
            IVec nu = d.reflect(mu, i);
            if (seen.insert(nu).second) stack.push_back(std::move(nu));
        }
    }
    std::vector<IVec> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<IVec>& weight_support(const RootDatum& d, const IVec& lambda)
{
    require_dominant(d, lambda);
    static std::mutex mu;
    static std::map<std::pair<SimpleType, IVec>, std::vector<IVec>> cache;
    auto key = std::make_pair(d.type(), lambda);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<IVec> s = compute_support(d, lambda);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(s)).first->second;
}

Z weyl_dimension(const RootDatum& d, const IVec& lambda)
{
    require_dominant(d, lambda);
    IVec lr = lambda;
    for (long& x : lr) x += 1;
    const IVec rho = d.rho();
    Z num = 1, den = 1;
    for (std::size_t k = 0; k < d.positive_roots().size(); ++k) {
        num *= d.coroot_pairing(lr, k);
        den *= d.coroot_pairing(rho, k);
    }
    if (num % den != 0) throw Failure("Weyl dimension is not an integer");
    return num / den;
}

static Q extreme_pairing(const RootDatum& d, const QVec& h, const IVec& lambda, bool want_min)
{
    if (static_cast<int>(h.size()) != d.rank()) throw std::invalid_argument("h has wrong length");
    QVec w = d.dual(h);
    Z l = 1;
    for (const Q& x : w) l = lcm(l, Z(x.get_den()));
    std::vector<Z> wi;
    for (const Q& x : w) wi.push_back(Z(x * l));
    bool first = true;
    Z best;
    Z v;
    for (const IVec& mu : weight_support(d, lambda)) {
        v = 0;
        for (int i = 0; i < d.rank(); ++i) {
            if (mu[i] != 0) v += wi[i] * mu[i];
        }
        if (first || (want_min ? v < best : v > best)) {
            best = v;
            first = false;
        }
    }
    return frac(best, l);
}

Q min_pairing(const RootDatum& d, const QVec& h, const IVec& lambda)
{
    return extreme_pairing(d, h, lambda, true);
}

Q max_pairing(const RootDatum& d, const QVec& h, const IVec& lambda)
{
    return extreme_pairing(d, h, lambda, false);
}

std::map<IVec, Z> dominant_multiplicities(const RootDatum& d, const IVec& lambda)
{
    std::vector<IVec> dom = dominant_weights(d, lambda);
    /* process from the top: sort by depth lambda - mu */
    auto depth = [&](const IVec& mu) {
        IVec diff(d.rank());
        for (int i = 0; i < d.rank(); ++i) diff[i] = lambda[i] - mu[i];
        Q h = 0;
        for (const Q& x : d.root_coords(diff)) h += x;
        return h;
    };
    std::sort(dom.begin(), dom.end(), [&](const IVec& a, const IVec& b) {
        Q da = depth(a), db = depth(b);
        if (da != db) return da < db;
        return a < b;
    });
    std::map<IVec, Z> mult;
    IVec lr = lambda;
    for (long& x : lr) x += 1;
    const Q top = d.form(lr, lr);
    for (const IVec& mu : dom) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        Q sum = 0;
        for (const IVec& a : d.positive_roots()) {
            IVec nu = mu;
            for (;;) {
                for (int j = 0; j < d.rank(); ++j) nu[j] += a[j];
                auto it = mult.find(d.dominant_rep(nu));
                if (it == mult.end()) break;
                sum += Q(it->second) * d.form(nu, a);
            }
        }
        IVec mr = mu;
        for (long& x : mr) x += 1;
        Q m = 2 * sum / (top - d.form(mr, mr));
        if (!is_integer(m) || m <= 0) throw Failure("Freudenthal multiplicity is not a positive integer");
        mult[mu] = m.get_num();
    }
    return mult;
}

}
