#include "oracles.hpp"
#include "voa24/qseries.hpp"

#include <doctest.h>

using namespace voa24;
using oracle::product_series;

namespace {

const Q two12 = Q(4096);

// q-exponent m (integer) -> half-step index 2m
Q at_q(const QSeries& s, long m)
{
    return s.coeff(2 * m);
}

}

TEST_CASE("eta^24 against the product expansion")
{
    auto p = product_series(-1, 24, 14);
    CHECK(p[1] == -24);
    CHECK(p[2] == 252);
    QSeries e1 = eta24(1, 30);
    QSeries e2 = eta24(2, 60);
    QSeries eh = eta24(frac(1, 2), 30);
    CHECK(e1.denom() == 2);
    for (long m = 0; m < 12; ++m) {
        CAPTURE(m);
        REQUIRE(2 * (m + 1) < e1.trunc());
        CHECK(at_q(e1, m + 1) == Q(p[m]));
        CHECK(e2.coeff(4 * (m + 1)) == Q(p[m]));
        CHECK(eh.coeff(m + 1) == Q(p[m]));
    }
    for (const auto& [n, c] : e1.coeffs()) CHECK(is_integer(c));
    CHECK(e1.coeff(3) == 0);
    CHECK_THROWS_AS(eta24(Q(3), 10), std::invalid_argument);
}

TEST_CASE("hauptmodul coefficients")
{
    // f = q^-1 prod (1+q^n)^-24
    auto p = product_series(1, -24, 14);
    QSeries f = hauptmodul(30);
    CHECK(f.valuation() == -2);
    CHECK(at_q(f, -1) == 1);
    CHECK(at_q(f, 0) == -24);
    CHECK(at_q(f, 1) == Q(oracle::binom(24, 2)));
    CHECK(at_q(f, 2) == -2048);
    for (long m = 0; m < 12; ++m) CHECK(at_q(f, m - 1) == Q(p[m]));
    for (long n = -1; n < 20; n += 2) CHECK(f.coeff(n) == 0);
}

TEST_CASE("S-transformed hauptmodul powers")
{
    // f(S tau) = 2^12 t prod (1+t^n)^24 with t = q^(1/2)
    auto plus = product_series(1, 24, 14);
    auto minus = product_series(1, -24, 14);
    auto minus2 = product_series(1, -48, 14);
    QSeries s1 = hauptmodul_S_power(1, 30);
    QSeries sm1 = hauptmodul_S_power(-1, 30);
    QSeries sm2 = hauptmodul_S_power(-2, 30);
    for (long k = 0; k < 12; ++k) {
        CAPTURE(k);
        CHECK(s1.coeff(k + 1) == two12 * Q(plus[k]));
        CHECK(sm1.coeff(k - 1) == Q(minus[k]) / two12);
        CHECK(sm2.coeff(k - 2) == Q(minus2[k]) / (two12 * two12));
    }
    CHECK(s1.coeff(1) == two12);
    CHECK(s1.coeff(2) == 24 * two12);
    CHECK(sm1.coeff(-1) == 1 / two12);
    CHECK(sm1.coeff(0) == -24 / two12);
    CHECK(sm1.coeff(1) == Q(oracle::binom(24, 2)) / two12);
    CHECK(sm2.coeff(-2) == 1 / (two12 * two12));
    CHECK(sm2.coeff(-1) == -48 / (two12 * two12));
    CHECK(sm2.coeff(0) == Q(oracle::binom(48, 2)) / (two12 * two12));
    CHECK(oracle::binom(48, 2) == 1128);
    CHECK_THROWS_AS(hauptmodul_S_power(2, 10), std::invalid_argument);
}

TEST_CASE("unit-inverse identities")
{
    QSeries f = hauptmodul(30);
    QSeries one = f * f.inverse();
    CHECK(one.coeff(0) == 1);
    for (long n = 1; n < one.trunc(); ++n) CHECK(one.coeff(n) == 0);

    QSeries s1 = hauptmodul_S_power(1, 30), sm1 = hauptmodul_S_power(-1, 30), sm2 = hauptmodul_S_power(-2, 30);
    QSeries p = s1 * sm1;
    CHECK(p.coeff(0) == 1);
    for (long n = 1; n < p.trunc(); ++n) CHECK(p.coeff(n) == 0);
    QSeries sq = sm1 * sm1;
    for (long n = -2; n < std::min(sq.trunc(), sm2.trunc()); ++n) CHECK(sq.coeff(n) == sm2.coeff(n));

    QSeries zero(2, 10);
    CHECK_THROWS(zero.inverse());
}

TEST_CASE("truncation propagates")
{
    QSeries a = QSeries::monomial(2, -2, Q(1), 6);
    QSeries b = QSeries::monomial(2, 0, Q(1), 20);
    CHECK((a + b).trunc() == 6);
    CHECK((a * b).trunc() == 6);   // min(6 + 0, 20 - 2)
    CHECK_THROWS(QSeries(2, 5) + QSeries(3, 5));
}

TEST_CASE("T transform")
{
    QSeries s = QSeries::monomial(2, 1, Q(1), 10);
    CHECK(t_transform(s).coeff(1) == -1);
    QSeries u = QSeries::monomial(2, -2, Q(1), 10);
    CHECK(t_transform(u).coeff(-2) == 1);
    QSeries fs = t_transform(hauptmodul_S_power(1, 20));
    CHECK(fs.coeff(1) == -two12);
    CHECK(fs.coeff(2) == 24 * two12);
    CHECK_THROWS_AS(t_transform(QSeries(1, 5)), std::invalid_argument);
}

TEST_CASE("character fit")
{
    CharacterFit f = character_fit(88, 0);
    CHECK(f.c0 == 112);
    CHECK(f.c_minus1 == 24 * two12);
    CHECK(f.series.coeff(-2) == 1);
    CHECK(f.series.coeff(0) == 88);
    CHECK(character_fit(0, 0).series.coeff(0) == 0);
    CHECK(character_fit(32, 0).series.coeff(0) == 32);
    for (long half : {0L, 2L, 8L}) {
        CharacterFit g = character_fit(40, half);
        for (const auto& [n, c] : g.series.coeffs()) CHECK(is_integer(c));
    }
}

TEST_CASE("dimension identities")
{
    struct Row {
        long v1, g1, half, tilde1;
    };
    for (Row r : {Row{120, 72, 0, 120}, Row{120, 88, 0, 168}, Row{168, 80, 0, 96}, Row{72, 32, 0, 48},
                  Row{48, 32, 0, 72}}) {
        DimensionIdentities d = dimension_identities(r.v1, r.g1, r.half);
        CHECK(d.dim_tilde1 == r.tilde1);
        CHECK(d.series_tilde1 == r.tilde1);
        CHECK(d.dim_g2 == 98580);
        CHECK(d.series_g2 == 98580);
    }
    CHECK(dimformula_constant() == oracle::binom(24, 2) + 24 * Z(4096));
    CHECK(dimformula_constant() == 98580);
    // nonzero half-weight space: both routes still agree
    DimensionIdentities d = dimension_identities(100, 60, 4);
    CHECK(d.dim_tilde1 == 3 * 60 + 24 * (1 - 4) - 100);
    CHECK(d.series_tilde1 == d.dim_tilde1);
    CHECK(d.half_coeff == 2);
    CHECK(d.dim_g2 == 98580 + 2048 * 4);
    // q^-1/2 coefficient of Z(S tau) is dim_half/2
    for (long half : {0L, 1L, 3L}) CHECK(dimension_identities(24, 24, half).half_coeff == frac(half, 2));
    CHECK_THROWS_AS(dimension_identities(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("dump format")
{
    QSeries s = QSeries::monomial(2, -1, frac(3, 4), 4);
    CHECK(s.dump() == "-1/2\t3/4\n");
}
