#pragma once

// Independent reference data and brute-force oracles shared by the unit tests
// and the acceptance binary.  Nothing here calls into the library's q-series or
// weight machinery.

#include "voa24/rational.hpp"

#include <string>
#include <vector>

namespace oracle {

using voa24::Q;
using voa24::Z;

// power series in q with integer coefficients, index = exponent
using ZSeries = std::vector<Z>;

inline ZSeries mul(const ZSeries& a, const ZSeries& b, std::size_t n)
{
    ZSeries r(n, 0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// prod_{m>=1} (1 + s q^m)^e, e may be negative, through n terms
inline ZSeries product_series(int s, int e, std::size_t n)
{
    ZSeries r(n, 0);
    r[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        // factor (1 + s q^m)^{|e|}, or its inverse as a geometric series
        ZSeries f(n, 0);
        if (e >= 0) {
            ZSeries base(n, 0);
            base[0] = 1;
            base[m] = s;
            f[0] = 1;
            for (int k = 0; k < e; ++k) f = mul(f, base, n);
        } else {
            ZSeries g(n, 0);
            for (std::size_t k = 0; k * m < n; ++k) g[k * m] = (k % 2 == 1 && s == 1) ? -1 : 1;
            f[0] = 1;
            for (int k = 0; k < -e; ++k) f = mul(f, g, n);
        }
        r = mul(r, f, n);
    }
    return r;
}

struct WeightRow {
    const char* type;
    int level;
    const char* label;
    const char* weight;
};

// lowest conformal weights of the irreducible level-k modules, transcribed
inline const std::vector<WeightRow>& conformal_weight_tables()
{
    static const std::vector<WeightRow> rows = {
        // E6 level 3
        {"E6", 3, "0", "0"}, {"E6", 3, "L1", "26/45"}, {"E6", 3, "L6", "26/45"}, {"E6", 3, "L2", "4/5"},
        {"E6", 3, "L3", "10/9"}, {"E6", 3, "L5", "10/9"}, {"E6", 3, "L4", "8/5"},
        {"E6", 3, "L1+L2", "13/9"}, {"E6", 3, "L2+L6", "13/9"}, {"E6", 3, "L1+L3", "9/5"},
        {"E6", 3, "L5+L6", "9/5"}, {"E6", 3, "L1+L5", "16/9"}, {"E6", 3, "L3+L6", "16/9"},
        {"E6", 3, "L1+L6", "6/5"}, {"E6", 3, "2L1+L6", "86/45"}, {"E6", 3, "L1+2L6", "86/45"},
        {"E6", 3, "2L1", "56/45"}, {"E6", 3, "2L6", "56/45"}, {"E6", 3, "3L1", "2"}, {"E6", 3, "3L6", "2"},
        // G2 levels 1 and 2
        {"G2", 1, "0", "0"}, {"G2", 1, "L1", "2/5"},
        {"G2", 2, "0", "0"}, {"G2", 2, "L1", "1/3"}, {"G2", 2, "L2", "2/3"}, {"G2", 2, "2L1", "7/9"},
        // D7 level 3
        {"D7", 3, "0", "0"}, {"D7", 3, "L1", "13/30"}, {"D7", 3, "L2", "4/5"}, {"D7", 3, "L3", "11/10"},
        {"D7", 3, "L4", "4/3"}, {"D7", 3, "L5", "3/2"}, {"D7", 3, "L6", "91/120"}, {"D7", 3, "L7", "91/120"},
        {"D7", 3, "2L1", "14/15"}, {"D7", 3, "3L1", "3/2"}, {"D7", 3, "L1+L2", "13/10"},
        {"D7", 3, "L1+L3", "8/5"}, {"D7", 3, "L1+L4", "11/6"}, {"D7", 3, "L1+L5", "2"},
        {"D7", 3, "L1+L6", "49/40"}, {"D7", 3, "L1+L7", "49/40"}, {"D7", 3, "2L1+L6", "211/120"},
        {"D7", 3, "2L1+L7", "211/120"}, {"D7", 3, "L1+2L6", "32/15"}, {"D7", 3, "L1+2L7", "32/15"},
        {"D7", 3, "L1+L6+L7", "21/10"}, {"D7", 3, "L2+L6", "13/8"}, {"D7", 3, "L2+L7", "13/8"},
        {"D7", 3, "L3+L6", "47/24"}, {"D7", 3, "L3+L7", "47/24"}, {"D7", 3, "L4+L6", "89/40"},
        {"D7", 3, "L4+L7", "89/40"}, {"D7", 3, "L5+L6", "97/40"}, {"D7", 3, "L5+L7", "97/40"},
        {"D7", 3, "2L6", "49/30"}, {"D7", 3, "2L7", "49/30"}, {"D7", 3, "3L6", "21/8"}, {"D7", 3, "3L7", "21/8"},
        {"D7", 3, "L6+L7", "8/5"}, {"D7", 3, "2L6+L7", "307/120"}, {"D7", 3, "L6+2L7", "307/120"},
        // A3 level 1
        {"A3", 1, "0", "0"}, {"A3", 1, "L1", "3/8"}, {"A3", 1, "L2", "1/2"}, {"A3", 1, "L3", "3/8"},
        // E7 level 3
        {"E7", 3, "0", "0"}, {"E7", 3, "L1", "6/7"}, {"E7", 3, "L2", "5/4"}, {"E7", 3, "L3", "12/7"},
        {"E7", 3, "L5", "55/28"}, {"E7", 3, "L6", "4/3"}, {"E7", 3, "L7", "19/28"}, {"E7", 3, "L1+L7", "19/12"},
        {"E7", 3, "L2+L7", "2"}, {"E7", 3, "L6+L7", "59/28"}, {"E7", 3, "2L7", "10/7"}, {"E7", 3, "3L7", "9/4"},
        // A5 level 1
        {"A5", 1, "0", "0"}, {"A5", 1, "L1", "5/12"}, {"A5", 1, "L2", "2/3"}, {"A5", 1, "L3", "3/4"},
        {"A5", 1, "L4", "2/3"}, {"A5", 1, "L5", "5/12"},
        // C5 level 3, monomial notation as printed
        {"C5", 3, "0", "0"}, {"C5", 3, "L1", "11/36"}, {"C5", 3, "L2", "5/9"}, {"C5", 3, "L3", "3/4"},
        {"C5", 3, "L4", "8/9"}, {"C5", 3, "L5", "35/36"}, {"C5", 3, "L1^2", "2/3"},
        {"C5", 3, "L1L2", "11/12"}, {"C5", 3, "L1L3", "10/9"}, {"C5", 3, "L1L4", "5/4"},
        {"C5", 3, "L1L5", "4/3"}, {"C5", 3, "L2^2", "11/9"}, {"C5", 3, "L2L3", "17/12"},
        {"C5", 3, "L2L4", "14/9"}, {"C5", 3, "L2L5", "59/36"}, {"C5", 3, "L3^2", "5/3"},
        {"C5", 3, "L3L4", "65/36"}, {"C5", 3, "L3L5", "17/9"}, {"C5", 3, "L4^2", "2"},
        {"C5", 3, "L4L5", "25/12"}, {"C5", 3, "L5^2", "20/9"}, {"C5", 3, "L1^3", "13/12"},
        {"C5", 3, "L1^2L2", "4/3"}, {"C5", 3, "L1^2L3", "55/36"}, {"C5", 3, "L1^2L4", "5/3"},
        {"C5", 3, "L1^2L5", "7/4"}, {"C5", 3, "L1L2^2", "59/36"}, {"C5", 3, "L1L2L3", "11/6"},
        {"C5", 3, "L1L2L4", "71/36"}, {"C5", 3, "L1L2L5", "37/18"}, {"C5", 3, "L1L3^2", "25/12"},
        {"C5", 3, "L1L3L4", "20/9"}, {"C5", 3, "L1L3L5", "83/36"}, {"C5", 3, "L1L4^2", "29/12"},
        {"C5", 3, "L1L4L5", "5/2"}, {"C5", 3, "L1L5^2", "95/36"}, {"C5", 3, "L2^3", "2"},
        {"C5", 3, "L2^2L3", "79/36"}, {"C5", 3, "L2^2L4", "7/3"}, {"C5", 3, "L2^2L5", "29/12"},
        {"C5", 3, "L2L3^2", "22/9"}, {"C5", 3, "L2L3L4", "31/12"}, {"C5", 3, "L2L3L5", "8/3"},
        {"C5", 3, "L2L4^2", "25/9"}, {"C5", 3, "L2L4L5", "103/36"}, {"C5", 3, "L2L5^2", "3"},
        {"C5", 3, "L3^3", "11/4"}, {"C5", 3, "L3^2L4", "26/9"}, {"C5", 3, "L3^2L5", "107/36"},
        {"C5", 3, "L3L4^2", "37/12"}, {"C5", 3, "L3L4L5", "19/6"}, {"C5", 3, "L3L5^2", "119/36"},
        {"C5", 3, "L4^3", "10/3"}, {"C5", 3, "L4^2L5", "41/12"}, {"C5", 3, "L4L5^2", "32/9"},
        {"C5", 3, "L5^3", "15/4"},
        // A1 level 1
        {"A1", 1, "0", "0"}, {"A1", 1, "L1", "1/4"},
    };
    return rows;
}

struct ModuleCount {
    const char* type;
    int level;
    std::size_t count;
};

inline const std::vector<ModuleCount>& module_counts()
{
    static const std::vector<ModuleCount> c = {
        {"E6", 3, 20}, {"D7", 3, 36}, {"E7", 3, 12}, {"C5", 3, 56}, {"A5", 1, 6},
        {"A3", 1, 4},  {"G2", 1, 2},  {"G2", 2, 4},  {"A1", 1, 2},
    };
    return c;
}

// binomial coefficient, used for the constants C(24,2) and C(48,2)
inline Z binom(long n, long k)
{
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}
