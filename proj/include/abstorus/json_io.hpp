#pragma once

#include <json.hpp>

#include "abstorus/exp_bridge.hpp"
#include "abstorus/jump_loci.hpp"
#include "abstorus/lattice.hpp"
#include "abstorus/torus.hpp"

namespace abstorus::io {

using json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings beyond that; both are accepted on input.  Rationals are
// always "a/b" strings.

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json to_json(const SnfDecomposition& s);

json to_json(const TorsionPoint& p);
TorsionPoint point_from_json(const json& j);

json coset_to_json(const TorsionCoset& c, bool with_ambient);
/// Accepts any consistent character system; it must cut out a single
/// irreducible coset (saturated span).
TorsionCoset coset_from_json(const json& j, size_t ambient_rank);
TorsionCoset coset_from_json(const json& j);  // reads ambient_rank field

json to_json(const AbsoluteSet& s);
AbsoluteSet set_from_json(const json& j);

json to_json(const RationalAffineSubspace& v);
/// Direction entries may be integers, "a/b" strings (denominators are
/// cleared per row), or declared irrational tokens, which raise
/// IrrationalDirectionError.
RationalAffineSubspace subspace_from_json(const json& j);

/// Rational (level-1) coefficients only; the torsion-component twists exist
/// only in memory.
json to_json(const LaurentChainComplex& c);
LaurentChainComplex complex_from_json(const json& j);

json to_json(const JumpLocusReport& r);

/// Parse with line/column diagnostics (ParseError).
json parse_text(const std::string& text);

/// Canonical dump: sorted keys (container order), two-space indent, trailing
/// newline.  Identical values produce identical bytes.
std::string dump_canonical(const json& j);

}  // namespace abstorus::io
