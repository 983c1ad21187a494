#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abstorus/chain_complex.hpp"
#include "abstorus/torus.hpp"

namespace abstorus {

/// A finite group presentation.  Letters are (generator index, +-1); relators
/// are freely reduced on load.
struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<std::vector<std::pair<int, int>>> relators;

    /// Text format: a "gens: a b" line followed by zero or more
    /// "rel: a b a^-1 ..." lines; '#' starts a comment.
    static GroupPresentation parse(const std::string& text);
};

/// The cochain complex of the presentation 2-complex with coefficients in a
/// rank-one local system, as a function of the character: ranks (1, s, r),
/// d^0 the column of g_i - 1, d^1 the Fox Jacobian of the relators.
/// Characters factor through H_1 = Z^{b_1} x torsion; the free part gives the
/// Laurent variables and each torsion character selects one connected
/// component of the character variety.
class FoxComplex {
public:
    size_t generator_count() const { return gen_free_.size(); }
    size_t relator_count() const { return d1_terms_.size(); }
    long long free_rank() const { return b1_; }
    /// Elementary divisors > 1 of the torsion part of H_1.
    const std::vector<long long>& torsion() const { return torsion_; }
    long long component_count() const;

    /// The complex twisted by the torsion character with the given value
    /// tuple (c_i against torsion order d_i, i.e. the character sends the
    /// i-th torsion coordinate to exp(2*pi*i*c_i/d_i)).
    LaurentChainComplex component(const std::vector<long long>& torsion_char) const;
    /// Components indexed 0..component_count()-1 in mixed-radix order;
    /// index 0 is the identity component (integer coefficients).
    LaurentChainComplex component_by_index(long long idx) const;
    LaurentChainComplex identity_component() const {
        return component(std::vector<long long>(torsion_.size(), 0));
    }

    friend FoxComplex fox_complex(const GroupPresentation& p);

private:
    long long b1_ = 0;
    std::vector<long long> torsion_;
    // Image of each generator in H_1: free exponent vector and torsion
    // residues.
    std::vector<std::vector<long long>> gen_free_;
    std::vector<std::vector<long long>> gen_torsion_;
    // Fox entries as formal sums sum sign * (prefix word) with the prefix
    // recorded by its exponent vector in Z^s.
    using GroupRingElem = std::vector<std::pair<int, std::vector<long long>>>;
    std::vector<GroupRingElem> d0_terms_;                // one per generator
    std::vector<std::vector<GroupRingElem>> d1_terms_;   // [relator][generator]

    CycLaurent evaluate(const GroupRingElem& elem,
                        const std::vector<long long>& torsion_char) const;
};

FoxComplex fox_complex(const GroupPresentation& p);

}  // namespace abstorus
