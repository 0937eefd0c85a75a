#include "voa24/rational.hpp"

#include <cctype>
#include <climits>

namespace voa24 {

Q frac(const Z& a, const Z& b)
{
    if (b == 0) throw std::invalid_argument("zero denominator");
    Q q(a, b);
    q.canonicalize();
    return q;
}

Q parse_q(const std::string& raw)
{
    std::string s;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto digits = [](const std::string& t, bool sign_ok) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false)) {
        throw std::invalid_argument("malformed rational '" + raw + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    Z n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
    Q q(n, d);
    q.canonicalize();
    return q;
}

std::string str(const Q& q)
{
    return q.get_str();
}

std::string str(const QVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string str(const IVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

bool is_integer(const Q& q)
{
    return q.get_den() == 1;
}

bool is_half_integer(const Q& q)
{
    return q.get_den() == 1 || q.get_den() == 2;
}

long to_long(const Q& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p()) {
        throw Failure("expected a machine integer, got " + q.get_str());
    }
    return q.get_num().get_si();
}

QVec to_qvec(const IVec& v)
{
    QVec r;
    r.reserve(v.size());
    for (long x : v) r.emplace_back(x);
    return r;
}

Q dot(const QVec& a, const QVec& b)
{
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec add(const QVec& a, const QVec& b)
{
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec sub(const QVec& a, const QVec& b)
{
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec scale(const Q& c, const QVec& a)
{
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero(const QVec& v)
{
    for (const Q& x : v) {
        if (x != 0) return false;
    }
    return true;
}

QMat inverse(const QMat& m)
{
    const std::size_t n = m.size();
    QMat a = m;
    QMat inv(n, QVec(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Failure("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Q p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Q f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Q determinant(QMat a)
{
    const std::size_t n = a.size();
    Q det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Q f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

QMat mul(const QMat& a, const QMat& b)
{
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    QMat r(n, QVec(m, Q(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

}
