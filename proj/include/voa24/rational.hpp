#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace voa24 {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using IVec = std::vector<long>;
using QMat = std::vector<QVec>;

/* Raised when a computed invariant does not hold. */
class Failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* canonical a/b; the two-argument mpq_class constructor does not reduce */
Q frac(const Z& a, const Z& b);

Q parse_q(const std::string& s);
std::string str(const Q& q);
std::string str(const QVec& v);
std::string str(const IVec& v);

bool is_integer(const Q& q);
bool is_half_integer(const Q& q);   // q in (1/2)Z
long to_long(const Q& q);           // q must be an integer that fits

QVec to_qvec(const IVec& v);
Q dot(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Q& c, const QVec& a);
bool is_zero(const QVec& v);

/* Exact inverse of a square matrix; throws Failure when singular. */
QMat inverse(const QMat& m);
Q determinant(QMat m);
QMat mul(const QMat& a, const QMat& b);

struct IVecHash {
    std::size_t operator()(const IVec& v) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (long x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}
