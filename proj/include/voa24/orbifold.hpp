#pragma once

#include "voa24/affine.hpp"

#include <array>
#include <string>
#include <vector>

namespace voa24 {

/* A rational vector space with a symmetric bilinear form given by its Gram matrix. */
struct FormSpace {
    QMat gram;
    Q pair(const QVec& a, const QVec& b) const;
    Q norm(const QVec& a) const { return pair(a, a); }
};

/* sum_i (x_i|y_i)/k_i on the flattened product Cartan; roots of a level-k
 * ideal whose long roots have norm 2/k in this form */
FormSpace dual_form_space(const ProductAlgebra& a);
/* sum_i (x_i|y_i) */
FormSpace plain_form_space(const ProductAlgebra& a);

QVec flatten(const HVector& h);
HVector unflatten(const ProductAlgebra& a, const QVec& v);
/* roots of factor i, embedded in the flattened product */
std::vector<QVec> factor_roots(const ProductAlgebra& a, std::size_t i);

/* ---- root subsystems given by explicit vectors ---- */

std::vector<std::vector<QVec>> split_components(const std::vector<QVec>& roots, const FormSpace& s);
/* positivity sweep with a fixed generic functional */
std::vector<QVec> simple_system(const std::vector<QVec>& roots, const FormSpace& s);
std::vector<IVec> cartan_of(const std::vector<QVec>& simple, const FormSpace& s);
/* type whose Cartan matrix equals the given one up to simultaneous permutation */
SimpleType classify_cartan(const std::vector<IVec>& cartan);
/* reflection closure; on failure fills `why` with the offending pair */
bool is_root_system(const std::vector<QVec>& roots, const FormSpace& s, std::string* why = nullptr);
/* candidate is a base: every root is an integral combination with all
 * coefficients of one sign */
bool is_simple_system(const std::vector<QVec>& candidate, const std::vector<QVec>& roots, const FormSpace& s);

/* ---- shapes and seeds ---- */

struct Ideal {
    SimpleType type;
    int level = 1;
    auto operator<=>(const Ideal&) const = default;
};

struct SemisimpleShape {
    std::vector<Ideal> ideals;
    int center_dim = 0;

    void normalize();
    long dim() const;
    int rank() const;
    std::string name() const;   // "D5,3 G2,1 A1,1^2 A1,3^2 U1"
    static SemisimpleShape parse(const std::string& s);
    bool operator==(const SemisimpleShape& o) const;
};

struct SeedSubalgebra {
    SimpleType type;
    int level = 1;
    std::vector<QVec> roots;     // flattened ambient vectors
    bool long_in_ambient = true;
    Q ambient_long_norm = 2;     // norm of its long roots in the ambient normalized form
    std::string origin;
};

struct FixedSubalgebra {
    SemisimpleShape shape;
    std::vector<SeedSubalgebra> components;
};

FixedSubalgebra fixed_subalgebra(const ProductAlgebra& a, const HVector& h);
int level_transfer(const SeedSubalgebra& seed, const Factor& ambient_ideal);

/* mu + (k_i h_i)_i for each base weight */
std::vector<QVec> twisted_sector_roots(const ProductAlgebra& a, const HVector& h, const std::vector<QVec>& base_weights);
/* union of the fixed roots and the twisted roots (with negatives); the
 * component meeting the twisted roots is returned with its level */
SeedSubalgebra assemble_root_subsystem(const std::vector<QVec>& fixed_roots, const std::vector<QVec>& twisted_roots,
                                       const FormSpace& dual_space);

/* ---- embeddings and identification ---- */

bool embeds(const std::vector<SimpleType>& x, SimpleType y, bool long_only);
bool embeds(SimpleType x, SimpleType y, bool long_only);
/* x simply laced, realised inside the short roots of y */
bool embeds_short(const std::vector<SimpleType>& x, SimpleType y);

std::vector<SemisimpleShape> identify(int rank_budget, long dim_target, const std::vector<SeedSubalgebra>& seeds);

/* ---- the 4x4 simple-current check ---- */

using Fusion = std::array<std::array<std::array<int, 4>, 4>, 4>;
/* N[p][q][r] = N_{p,q}^r */
Fusion verlinde_simple_current(int a);

}
