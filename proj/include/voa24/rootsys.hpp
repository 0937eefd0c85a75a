#pragma once

#include "voa24/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace voa24 {

struct SimpleType {
    char letter = 'A';
    int rank = 1;

    bool valid() const;
    std::string name() const;
    long adjoint_dim() const;
    bool simply_laced() const { return letter == 'A' || letter == 'D' || letter == 'E'; }

    /* "E6", "A1", "D7"; throws std::invalid_argument on anything else */
    static SimpleType parse(const std::string& s);

    auto operator<=>(const SimpleType&) const = default;
};

/*
 * Weights are stored in the basis of fundamental weights (Dynkin labels).
 * Integral weights use IVec, arbitrary rational ones (such as h) use QVec.
 * The simple roots are the rows of the Cartan matrix in this basis and the
 * form on the weight space is (Lambda_i|Lambda_j) = (A^-1)_ij (alpha_j|alpha_j)/2,
 * normalised so that long roots have norm 2.
 */
class RootDatum {
public:
    explicit RootDatum(SimpleType t);

    SimpleType type() const { return type_; }
    int rank() const { return type_.rank; }

    const QMat& simple_gram() const { return gram_; }
    const std::vector<IVec>& cartan() const { return cartan_; }
    const QMat& weight_form() const { return wform_; }

    Q form(const QVec& a, const QVec& b) const;
    Q form(const QVec& a, const IVec& b) const;
    Q form(const IVec& a, const IVec& b) const;
    /* F*h, so that (h|mu) = sum_i (F*h)_i mu_i */
    QVec dual(const QVec& h) const;

    const std::vector<IVec>& roots() const { return roots_; }
    const std::vector<IVec>& positive_roots() const { return positive_; }
    IVec simple_root(int i) const { return cartan_[i]; }
    IVec fundamental_weight(int i) const;
    IVec rho() const { return IVec(rank(), 1); }
    const IVec& theta() const { return theta_; }
    int dual_coxeter() const { return dual_coxeter_; }
    const IVec& comarks() const { return theta_comarks_; }

    /* coefficients in the basis of simple roots */
    QVec root_coords(const IVec& mu) const;
    /* <mu, alpha^vee> for the k-th positive root */
    long coroot_pairing(const IVec& mu, std::size_t k) const;
    const IVec& coroot(std::size_t k) const { return coroots_[k]; }

    IVec reflect(const IVec& mu, int i) const;
    bool is_dominant(const IVec& mu) const;
    IVec dominant_rep(IVec mu) const;
    Q norm(const IVec& mu) const { return form(mu, mu); }

private:
    SimpleType type_;
    QMat gram_;
    std::vector<IVec> cartan_;
    QMat cartan_inv_;
    QMat wform_;
    std::vector<IVec> roots_;
    std::vector<IVec> positive_;
    std::vector<IVec> coroots_;   // coroot of positive_[k] in the simple-coroot basis
    IVec theta_;
    IVec theta_comarks_;          // (theta|Lambda_i)
    int dual_coxeter_ = 0;
};

/* Cached; the returned reference stays valid for the program lifetime. */
const RootDatum& build_root_datum(SimpleType t);

/* Gram matrix (alpha_i|alpha_j) of the simple roots in the numbering used
 * throughout (chain 1-3-4-5-6(-7-8) with 2 on 4 for E, spin nodes n-1, n
 * for D, alpha_n long for C, alpha_1 short for G). */
QMat simple_root_gram(SimpleType t);

std::vector<IVec> dominant_weights(const RootDatum& d, const IVec& lambda);
const std::vector<IVec>& weight_support(const RootDatum& d, const IVec& lambda);
Z weyl_dimension(const RootDatum& d, const IVec& lambda);
Q min_pairing(const RootDatum& d, const QVec& h, const IVec& lambda);
Q max_pairing(const RootDatum& d, const QVec& h, const IVec& lambda);

/* Freudenthal multiplicities of the dominant weights of V(lambda). */
std::map<IVec, Z> dominant_multiplicities(const RootDatum& d, const IVec& lambda);

}
