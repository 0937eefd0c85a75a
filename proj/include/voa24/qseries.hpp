#pragma once

#include "voa24/rational.hpp"

#include <map>
#include <string>

namespace voa24 {

/* default relative precision, counted in steps of q^(1/2) */
constexpr long kDefaultTerms = 24;

/*
 * Truncated Laurent series in q^(1/D). Coefficients at exponents n/D with
 * n >= trunc() are unknown; everything below is exact.
 */
class QSeries {
public:
    QSeries(int denom, long trunc);

    static QSeries constant(int denom, const Q& c, long trunc);
    static QSeries monomial(int denom, long n, const Q& c, long trunc);

    int denom() const { return denom_; }
    long trunc() const { return trunc_; }
    const std::map<long, Q>& coeffs() const { return coeffs_; }

    Q coeff(long n) const;
    void set(long n, const Q& c);
    /* smallest exponent with a nonzero coefficient; throws when none is known */
    long valuation() const;
    bool known_zero() const { return coeffs_.empty(); }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const Q& c) const;
    QSeries inverse() const;
    QSeries pow(long e) const;
    /* q -> q^s, s a positive integer */
    QSeries rescale(long s) const;
    /* keep at most `terms` steps starting at the valuation */
    QSeries truncated(long terms) const;

    std::string dump() const;

private:
    void check_compatible(const QSeries& o) const;
    int denom_;
    long trunc_;
    std::map<long, Q> coeffs_;
};

QSeries eta24(const Q& scale, long terms = kDefaultTerms);
QSeries hauptmodul(long terms = kDefaultTerms);
QSeries hauptmodul_S_power(int n, long terms = kDefaultTerms);
QSeries t_transform(const QSeries& s);

struct CharacterFit {
    Q c0;
    Q c_minus1;
    QSeries series;
};

CharacterFit character_fit(long dim_g1, long dim_half, long terms = kDefaultTerms);

struct DimensionIdentities {
    long dim_tilde1 = 0;   // closed form
    Z dim_g2;              // 98580 + 2^11 dim_half
    long series_tilde1 = 0;
    Z series_g2;
    Q half_coeff;          // q^(-1/2) coefficient of Z_{V^g}(S tau)
    Q sum_constant;        // constant term of Z(tau)+Z(S tau)+Z(ST tau)
};

/* throws Failure if the closed form and the series route disagree */
DimensionIdentities dimension_identities(long dim_V1, long dim_g1, long dim_half, long terms = kDefaultTerms);

/* 98580 = C(24,2) + 24*2^12 */
Z dimformula_constant();

}
