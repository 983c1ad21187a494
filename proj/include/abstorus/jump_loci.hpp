#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abstorus/chain_complex.hpp"
#include "abstorus/torus.hpp"

namespace abstorus {

/// A complex of scalar matrices over a cyclotomic field, the result of
/// substituting a point into a Laurent complex.
struct SpecializedComplex {
    std::vector<size_t> ranks;
    std::vector<Mat<CyclotomicNumber>> diffs;
};

/// Substitutes t_j -> p_j; every coordinate must be nonzero (Laurent entries
/// need inverses).
SpecializedComplex specialize(const LaurentChainComplex& c,
                              const std::vector<CyclotomicNumber>& point);
SpecializedComplex specialize(const LaurentChainComplex& c, const TorsionPoint& point);

/// dim H^i for all i, at an invertible cyclotomic point:
/// rank_i - rank d^i(p) - rank d^{i-1}(p).
std::vector<long long> cohomology_dims(const LaurentChainComplex& c,
                                       const std::vector<CyclotomicNumber>& point);
std::vector<long long> cohomology_dims(const LaurentChainComplex& c, const TorsionPoint& point);

/// Rank of d^i restricted to the coset, computed symbolically: the coset is
/// parametrized by t_j = zeta^{q_j} prod_k s_k^{M_kj} with M a basis of the
/// integer orthogonal of the character lattice and q the canonical torsion
/// lift of phi; the rank is taken over the fraction field in the s variables.
/// Every point of the coset specializes to a rank <= this one.
long long generic_rank_on_coset(const LaurentChainComplex& c, long i, const TorsionCoset& coset);

/// dim H^i for all i at the generic point of the coset.
std::vector<long long> generic_cohomology_dims(const LaurentChainComplex& c,
                                               const TorsionCoset& coset);

/// A sound symbolic witness that a coset lies inside V^i_k: the generic
/// cohomology dimension on the coset already reaches k.
struct JumpCertificate {
    TorsionCoset coset;
    long i;
    long long k;
    long long rank_d_i;
    long long rank_d_prev;
    long long generic_dim;
    bool holds() const { return generic_dim >= k; }
};

JumpCertificate coset_jump_certify(const LaurentChainComplex& c, long i, long long k,
                                   const TorsionCoset& coset);

struct JumpLocusReport {
    AbsoluteSet locus;
    long i = 0;
    long long k = 0;
    long long search_level = 1;
    std::vector<JumpCertificate> certificates;
    std::string completeness_note;
};

inline constexpr unsigned long long kDefaultGridCeiling = 1000000;

/// Reconstructs V^i_k from its torsion points of order dividing search_level:
/// observe the jump set on the grid, greedily merge point cosets into larger
/// certified cosets (joins processed by increasing dimension, then canonical
/// order), and emit the certified maximal cosets.  Sound for every emitted
/// coset; complete relative to the search level.
JumpLocusReport jump_locus_reconstruct(const LaurentChainComplex& c, long i, long long k,
                                       long long search_level,
                                       unsigned long long grid_ceiling = kDefaultGridCeiling);

/// Smallest torsion coset containing both inputs that is visible from their
/// canonical torsion lifts: the direction is the affine span of the two lifted
/// families, the character lattice its saturated integer annihilator.
TorsionCoset coset_join(const TorsionCoset& a, const TorsionCoset& b);

struct Verdict {
    bool pass = false;
    std::string detail;
    std::optional<TorsionPoint> witness_point;
    std::optional<TorsionCoset> witness_coset;
};

/// Checks a claimed locus: every closure component must certify symbolically,
/// and the claim must match the observed jump set on the order-dividing-M
/// grid.
Verdict verify_absolute(const LaurentChainComplex& c, long i, long long k,
                        const AbsoluteSet& claimed, long long level,
                        unsigned long long grid_ceiling = kDefaultGridCeiling);

/// Samples torsion points of order dividing level and asserts
/// dim H^i(p) >= generic dim H^i for each; the sampled face of upper
/// semicontinuity.
Verdict semicontinuity_check(const LaurentChainComplex& c, long i, size_t sample_count,
                             long long level, unsigned long long seed = 0x5eedULL);

/// For complexes with rational coefficients: dim H^i(p) = dim H^i(p^{-1}) on
/// the whole grid, and the reconstructed locus equals its inversion.
Verdict symmetry_check(const LaurentChainComplex& c, long i, long long k, long long level,
                       unsigned long long grid_ceiling = kDefaultGridCeiling);

/// dim H^i(p) >= k at a general invertible cyclotomic point; exhibits jump
/// points that are not torsion.
bool non_torsion_probe(const LaurentChainComplex& c, long i, long long k,
                       const std::vector<CyclotomicNumber>& point);

}  // namespace abstorus
