#include "voa24/qseries.hpp"

#include <algorithm>
#include <vector>

namespace voa24 {

QSeries::QSeries(int denom, long trunc) : denom_(denom), trunc_(trunc)
{
    if (denom < 1) throw std::invalid_argument("series denominator must be positive");
}

QSeries QSeries::constant(int denom, const Q& c, long trunc)
{
    return monomial(denom, 0, c, trunc);
}

QSeries QSeries::monomial(int denom, long n, const Q& c, long trunc)
{
    QSeries s(denom, trunc);
    if (n < trunc) s.set(n, c);
    return s;
}

Q QSeries::coeff(long n) const
{
    if (n >= trunc_) {
        throw Failure("coefficient at " + std::to_string(n) + "/" + std::to_string(denom_) +
                      " is beyond the truncation");
    }
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Q(0) : it->second;
}

void QSeries::set(long n, const Q& c)
{
    if (n >= trunc_) return;
    if (c == 0) coeffs_.erase(n);
    else coeffs_[n] = c;
}

long QSeries::valuation() const
{
    if (coeffs_.empty()) throw Failure("series has no known nonzero coefficient");
    return coeffs_.begin()->first;
}

void QSeries::check_compatible(const QSeries& o) const
{
    if (denom_ != o.denom_) throw std::invalid_argument("series with different denominators");
}

QSeries QSeries::operator+(const QSeries& o) const
{
    check_compatible(o);
    QSeries r(denom_, std::min(trunc_, o.trunc_));
    for (const auto& [n, c] : coeffs_) r.set(n, c);
    for (const auto& [n, c] : o.coeffs_) {
        if (n < r.trunc_) r.set(n, r.coeff(n) + c);
    }
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const
{
    return *this + o * Q(-1);
}

QSeries QSeries::operator*(const Q& c) const
{
    QSeries r(denom_, trunc_);
    if (c == 0) return r;
    for (const auto& [n, x] : coeffs_) r.coeffs_[n] = x * c;
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const
{
    check_compatible(o);
    /* a zero-known factor carries no valuation; treat its valuation as its truncation */
    long va = coeffs_.empty() ? trunc_ : valuation();
    long vb = o.coeffs_.empty() ? o.trunc_ : o.valuation();
    QSeries r(denom_, std::min(trunc_ + vb, o.trunc_ + va));
    for (const auto& [n, x] : coeffs_) {
        for (const auto& [m, y] : o.coeffs_) {
            if (n + m >= r.trunc_) break;
            r.coeffs_[n + m] += x * y;
        }
    }
    for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();) {
        if (it->second == 0) it = r.coeffs_.erase(it);
        else ++it;
    }
    return r;
}

QSeries QSeries::inverse() const
{
    const long v = valuation();
    const Q lead = coeffs_.begin()->second;
    const long rel = trunc_ - v;   // known relative steps
    QSeries r(denom_, -v + rel);
    /* (sum a_k x^k)^{-1} = sum b_k x^k with b_0 = 1/a_0, b_k = -(1/a_0) sum_{j>=1} a_j b_{k-j} */
    std::vector<Q> a(rel), b(rel);
    for (long k = 0; k < rel; ++k) a[k] = coeff(v + k);
    for (long k = 0; k < rel; ++k) {
        Q s = k == 0 ? Q(1) : Q(0);
        for (long j = 1; j <= k; ++j) {
            if (a[j] != 0) s -= a[j] * b[k - j];
        }
        b[k] = s / lead;
        r.set(-v + k, b[k]);
    }
    return r;
}

QSeries QSeries::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return constant(denom_, 1, trunc_ - valuation());
    QSeries r = *this;
    --e;
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

QSeries QSeries::rescale(long s) const
{
    if (s < 1) throw std::invalid_argument("rescale factor must be positive");
    QSeries r(denom_, trunc_ * s);
    for (const auto& [n, c] : coeffs_) r.coeffs_[n * s] = c;
    return r;
}

QSeries QSeries::truncated(long terms) const
{
    long v = coeffs_.empty() ? trunc_ : valuation();
    QSeries r(denom_, std::min(trunc_, v + terms));
    for (const auto& [n, c] : coeffs_) r.set(n, c);
    return r;
}

std::string QSeries::dump() const
{
    std::string out;
    for (const auto& [n, c] : coeffs_) {
        out += std::to_string(n) + "/" + std::to_string(denom_) + "\t" + c.get_num().get_str() + "/" +
               c.get_den().get_str() + "\n";
    }
    return out;
}

/* prod_{m>=1} (1 - x^m)^24 in x, exponents below `terms` */
static std::vector<Z> euler24(long terms)
{
    std::vector<Z> p(std::max<long>(terms, 1), 0);
    p[0] = 1;
    for (long m = 1; m < terms; ++m) {
        for (int rep = 0; rep < 24; ++rep) {
            for (long k = terms - 1; k >= m; --k) p[k] -= p[k - m];
        }
    }
    return p;
}

QSeries eta24(const Q& scale, long terms)
{
    long step;   // exponent of q^(scale) in units of q^(1/2)
    if (scale == frac(1, 2)) step = 1;
    else if (scale == 1) step = 2;
    else if (scale == 2) step = 4;
    else throw std::invalid_argument("eta24: unsupported scale " + scale.get_str());
    if (terms < 1) throw std::invalid_argument("eta24: terms must be positive");
    /* eta(s tau)^24 = q^s prod (1 - q^{s m})^24 */
    std::vector<Z> p = euler24((terms + step - 1) / step);
    QSeries r(2, step + terms);
    for (std::size_t k = 0; k < p.size(); ++k) r.set(step + static_cast<long>(k) * step, Q(p[k]));
    return r;
}

QSeries hauptmodul(long terms)
{
    if (terms < 1) throw std::invalid_argument("hauptmodul: terms must be positive");
    return (eta24(1, terms + 4) * eta24(2, terms + 4).inverse()).truncated(terms);
}

QSeries hauptmodul_S_power(int n, long terms)
{
    if (terms < 1) throw std::invalid_argument("hauptmodul_S_power: terms must be positive");
    QSeries g = eta24(1, terms + 4) * eta24(frac(1, 2), terms + 4).inverse() * Q(4096);
    switch (n) {
    case 1: return g.truncated(terms);
    case -1: return g.inverse().truncated(terms);
    case -2: return g.inverse().pow(2).truncated(terms);
    default: throw std::invalid_argument("hauptmodul_S_power: n must be 1, -1 or -2");
    }
}

QSeries t_transform(const QSeries& s)
{
    if (s.denom() != 2) throw std::invalid_argument("t_transform needs exponent denominator 2");
    QSeries r(2, s.trunc());
    for (const auto& [n, c] : s.coeffs()) r.set(n, (n % 2 == 0) ? c : Q(-c));
    return r;
}

static const Q two23 = Q(Z(1) << 23);

CharacterFit character_fit(long dim_g1, long dim_half, long terms)
{
    if (dim_g1 < 0 || dim_half < 0) throw std::invalid_argument("character_fit: dimensions must be nonnegative");
    CharacterFit fit{Q(dim_g1 + 24), Q(4096) * (frac(dim_half, 2) + 24), QSeries(2, 0)};
    QSeries f = hauptmodul(terms + 8);
    QSeries fi = f.inverse();
    fit.series = (f + QSeries::constant(2, fit.c0, f.trunc()) + fi * fit.c_minus1 + fi.pow(2) * two23).truncated(terms);
    if (fit.series.coeff(-2) != 1 || fit.series.coeff(0) != dim_g1) {
        throw Failure("character fit does not reproduce q^-1 + dim_g1");
    }
    return fit;
}

Z dimformula_constant()
{
    return Z(24 * 23 / 2) + Z(24) * 4096;
}

DimensionIdentities dimension_identities(long dim_V1, long dim_g1, long dim_half, long terms)
{
    if (dim_V1 < 0 || dim_g1 < 0 || dim_half < 0) {
        throw std::invalid_argument("dimension_identities: inputs must be nonnegative");
    }
    DimensionIdentities d;
    d.dim_tilde1 = 3 * dim_g1 + 24 * (1 - dim_half) - dim_V1;
    d.dim_g2 = dimformula_constant() + Z(2048) * dim_half;

    const long work = std::max<long>(terms, 8);
    CharacterFit fit = character_fit(dim_g1, dim_half, work);
    QSeries fs = hauptmodul_S_power(1, work + 4);
    QSeries fs1 = hauptmodul_S_power(-1, work + 4);
    QSeries fs2 = hauptmodul_S_power(-2, work + 4);
    QSeries zs = fs + QSeries::constant(2, fit.c0, fs.trunc()) + fs1 * fit.c_minus1 + fs2 * two23;
    QSeries zst = t_transform(zs);
    QSeries sum = fit.series + zs + zst;

    d.half_coeff = zs.coeff(-1);
    d.sum_constant = sum.coeff(0);
    d.series_tilde1 = to_long(d.sum_constant) - dim_V1;
    d.series_g2 = fit.series.coeff(2).get_num();
    if (!is_integer(fit.series.coeff(2))) throw Failure("dim (V^g)_2 from the series is not an integer");

    if (sum.coeff(-2) != 2) throw Failure("leading coefficient of Z_V + Z_Vtilde is not 2");
    for (long n = -2; n < std::min<long>(sum.trunc(), 8); ++n) {
        if (n % 2 != 0 && sum.coeff(n) != 0) throw Failure("Z_V + Z_Vtilde has a half-integral exponent");
    }
    if (d.half_coeff != frac(dim_half, 2)) throw Failure("q^-1/2 coefficient of Z(S tau) is not dim_half/2");
    if (d.series_tilde1 != d.dim_tilde1 || d.series_g2 != d.dim_g2) {
        throw Failure("closed-form and series dimension routes disagree");
    }
    return d;
}

}
