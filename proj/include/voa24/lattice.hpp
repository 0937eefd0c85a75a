#pragma once

#include "voa24/orbifold.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace voa24 {

/* The Niemeier lattice with root system A4^6.  Vectors live in Q^30: six
 * blocks, each in the sum-zero hyperplane of Q^5 with the standard dot product. */

constexpr int kBlocks = 6;
constexpr int kBlockDim = 5;
constexpr int kAmbient = kBlocks * kBlockDim;

using Word = std::array<int, kBlocks>;
using ZMat = std::vector<std::vector<Z>>;

struct GlueCode {
    std::vector<Word> generators;
    std::vector<Word> words;   // sorted
    int generator_rank = 0;    // rank of the generator rows over Z/5

    bool contains(const Word& w) const;
};

GlueCode build_glue_code();

/* ---- one A4 block ---- */

QVec a4_simple_root(int i);          // i = 1..4
QVec a4_glue(int g);                 // g (1,1,1,1,-4)/5
/* coset class of a vector of A4^*, or -1 if it is not in A4^* */
int a4_dual_class(const QVec& v);
/* all y in shift + A4 with |y|^2 <= bound; shift must have coordinate sum 0 */
std::vector<QVec> enumerate_coset(const QVec& shift, const Q& bound);
// minimal norms of the five cosets of A4^* modulo A4
std::array<Q, 5> a4_coset_min_norms();

QVec block(const QVec& v, int b);
QVec with_block(const QVec& b1, int b);   // zero vector with block b filled

/* ---- the lattice ---- */

struct NiemeierLattice {
    GlueCode glue;
    std::vector<QVec> basis;   // 24 vectors
    QMat gram;

    bool contains(const QVec& v) const;
    /* number of lattice vectors of each norm 0, 2, ..., 2*max_half */
    std::vector<Z> theta(int max_half) const;
};

/* Row basis of the Z-span of integer rows (Hermite normal form, zero rows dropped). */
ZMat integer_row_basis(ZMat rows);

NiemeierLattice build_niemeier();

/* tau_0: the 5-cycle on blocks 2..6 */
QVec tau0(const QVec& v);
/* orthogonal projection to the tau_0-fixed space */
QVec project_fixed(const QVec& v);
/* P_0 applied to the lattice basis, with a check against {(5a, b,b,b,b,b)/5} */
std::vector<QVec> fixed_projection_basis(const NiemeierLattice& n);
/* multiplicities of exp(2 pi i j / 5), j = 0..4, for tau_0 acting on Q (x) N */
std::array<int, 5> tau0_eigen_multiplicities();

/* ---- twists ---- */

QVec delta(int r);                         // delta^1, delta^2 in one block
QVec twist_shift(int eps, int r);          // eps f^r
std::vector<QVec> beta_vectors();          // beta_0..beta_4
std::vector<QVec> enumerate_S(int eps, int r);

/* conformal weight of the twisted ground state: 1/4 sum_j m_j (j/n)(1 - j/n) */
Q twist_anomaly(int n, const std::vector<int>& m);

struct TwistedWeightOne {
    long dimension = 0;
    std::vector<QVec> x;        // elements of P_0(N)
    std::vector<QVec> weights;  // a + eps delta^r, block 1
};
/* graded dimensions of the tau_0-twisted Heisenberg space on the (1/15)Z grid,
 * indices 0..max_index */
std::vector<Z> twisted_heisenberg_dims(int max_index);
TwistedWeightOne twisted_weight_one(int eps, int r);

/* ---- the order-2 inner automorphism ---- */

QVec lambda_block();       // (1,1,1,1,-4)/5
QVec lambda_prime();       // beta_1 + 2 beta_2 + 3 beta_3 + 4 beta_4
QVec h_vector();           // (Lambda', Lambda, ..., Lambda)/2

/* min |alpha + h|^2 over alpha in N, if some value is <= bound */
std::optional<Q> min_norm_shifted(const NiemeierLattice& n, const QVec& h, const Q& bound);
/* min |x + h + eps f^r|^2 over x in P_0(N) */
Q min_norm_twisted(const QVec& h, int eps, int r);

struct LowestWeightCheck {
    Q untwisted_min;           // min (1/2)|alpha + h|^2
    Q twisted_min;             // 4/5 + min (1/2)|x + h + eps f|^2 over the four sectors
    bool half_integral = false;
    Q lowest;                  // lowest L(0)-weight of the twisted module
};
LowestWeightCheck lowest_weight_check(const NiemeierLattice& n);

struct FixedA45 {
    SemisimpleShape v1_shape;       // A4,5^2
    SemisimpleShape fixed_shape;    // A3,5^2 U1^2
    std::vector<SeedSubalgebra> seeds;
    bool alpha_pattern = false;     // (alpha_i|Lambda) = delta_{i4}
    bool beta_pattern = false;      // (beta_i|Lambda') = delta_{i4}
    bool level5 = false;            // 5 beta_i: norm 2 and A4 Cartan under (.|.)/5
};
FixedA45 fixed_shape_A45(const QVec& h);

std::string dump_lattice(const NiemeierLattice& n);

}
