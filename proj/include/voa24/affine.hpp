#pragma once

#include "voa24/rootsys.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace voa24 {

struct AffineLabel {
    SimpleType type;
    int level = 1;
    IVec lambda;
};

struct Factor {
    SimpleType type;
    int level = 1;
    auto operator<=>(const Factor&) const = default;
};

struct ProductAlgebra {
    std::vector<Factor> factors;

    int rank() const;
    long dim() const;
    std::string name() const;   // "E6,3 G2,1^3"
};

/* one dominant weight per factor */
struct ProductLabel {
    std::vector<IVec> labels;
    auto operator<=>(const ProductLabel&) const = default;
};

/* h_i per factor, in fundamental-weight coordinates */
using HVector = std::vector<QVec>;

std::vector<AffineLabel> enumerate_modules(SimpleType t, int k);
Q conformal_weight(const AffineLabel& m);

struct SpectrumEntry {
    ProductLabel label;
    Q weight;
};

/* integral total weights in [0, max_weight] */
std::vector<SpectrumEntry> integral_spectrum_table(const ProductAlgebra& a, const Q& max_weight);
/* integral total weights restricted to an explicit set */
std::vector<SpectrumEntry> integral_spectrum_table(const ProductAlgebra& a, const std::set<long>& weights);

/* <h|h> = sum k_i (h_i|h_i) */
Q inner_norm(const ProductAlgebra& a, const HVector& h);
/* (h|mu) = sum (h_i|mu_i) */
Q pairing(const ProductAlgebra& a, const HVector& h, const ProductLabel& mu);

Q product_twisted_lowest(const ProductAlgebra& a, const ProductLabel& m, const HVector& h);
bool spectrum_half_integral(const ProductAlgebra& a, const HVector& h, const std::vector<ProductLabel>& labels);

struct PositivityCertificate {
    enum class Kind { positive, zero_with_witness, negative_violation, precondition_violated };
    Kind kind = Kind::positive;
    Q value;
    int witness = -1;   // 0 for the vacuum case, j (1-based) for lambda = k Lambda_j, h = -Lambda_j
};

PositivityCertificate twisted_positivity_certificate(const AffineLabel& m, const QVec& h);

/* "0", "L4", "2L1+L6", also the monomial form "L1^2L4" */
IVec parse_weight_label(const std::string& s, int rank);
std::string weight_label(const IVec& lambda);
std::string product_label_string(const ProductLabel& p);

ProductAlgebra parse_product_algebra(const std::string& s);   // "E6,3 G2,1^3"
void check_labels(const ProductAlgebra& a, const ProductLabel& p);

}
