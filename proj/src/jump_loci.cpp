#include "abstorus/jump_loci.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "abstorus/errors.hpp"

namespace abstorus {

namespace {

void check_point_arity(const LaurentChainComplex& c, size_t got) {
    if (got != static_cast<size_t>(c.vars()))
        throw RankMismatchError("specialize: point arity does not match variable count");
}

CyclotomicNumber power_at(const CyclotomicNumber& base, const CyclotomicNumber& base_inv,
                          long long e) {
    if (e >= 0) return base.pow(e);
    return base_inv.pow(-e);
}

Mat<CyclotomicNumber> specialize_matrix(const Mat<CycLaurent>& m,
                                        const std::vector<CyclotomicNumber>& p,
                                        const std::vector<CyclotomicNumber>& p_inv) {
    Mat<CyclotomicNumber> out(m.rows, m.cols);
    for (size_t idx = 0; idx < m.e.size(); ++idx) {
        CyclotomicNumber acc;
        for (const auto& [e, coef] : m.e[idx].terms()) {
            CyclotomicNumber term = coef;
            for (size_t j = 0; j < p.size(); ++j)
                if (e[j] != 0) term = term * power_at(p[j], p_inv[j], e[j]);
            acc = acc + term;
        }
        out.e[idx] = acc;
    }
    return out;
}

Mat<CyclotomicNumber> specialize_matrix(const Mat<CycLaurent>& m, const TorsionPoint& p) {
    Mat<CyclotomicNumber> out(m.rows, m.cols);
    for (size_t idx = 0; idx < m.e.size(); ++idx) {
        CyclotomicNumber acc;
        for (const auto& [e, coef] : m.e[idx].terms()) {
            Rational phase = 0;
            for (size_t j = 0; j < p.coords.size(); ++j)
                if (e[j] != 0) phase += Rational(e[j]) * p.coords[j].value();
            acc = acc + coef * CyclotomicNumber::root_of_unity(QmodZ(phase));
        }
        out.e[idx] = acc;
    }
    return out;
}

std::vector<long long> dims_from_ranks(const std::vector<size_t>& ranks,
                                       const std::vector<long long>& d_ranks) {
    std::vector<long long> dims(ranks.size());
    for (size_t i = 0; i < ranks.size(); ++i) {
        long long above = i < d_ranks.size() ? d_ranks[i] : 0;
        long long below = i > 0 ? d_ranks[i - 1] : 0;
        dims[i] = static_cast<long long>(ranks[i]) - above - below;
    }
    return dims;
}

long long dim_at_degree(const std::vector<long long>& dims, long i) {
    if (i < 0 || static_cast<size_t>(i) >= dims.size()) return 0;
    return dims[i];
}

}  // namespace

SpecializedComplex specialize(const LaurentChainComplex& c,
                              const std::vector<CyclotomicNumber>& point) {
    check_point_arity(c, point.size());
    std::vector<CyclotomicNumber> inv(point.size());
    for (size_t j = 0; j < point.size(); ++j) {
        if (point[j].is_zero())
            throw NonInvertibleError("specialize: coordinate " + std::to_string(j) + " is zero");
        inv[j] = point[j].inverse();
    }
    SpecializedComplex out;
    out.ranks = c.ranks();
    for (const auto& d : c.differentials()) out.diffs.push_back(specialize_matrix(d, point, inv));
    return out;
}

SpecializedComplex specialize(const LaurentChainComplex& c, const TorsionPoint& point) {
    check_point_arity(c, point.ambient_rank());
    SpecializedComplex out;
    out.ranks = c.ranks();
    for (const auto& d : c.differentials()) out.diffs.push_back(specialize_matrix(d, point));
    return out;
}

namespace {

std::vector<long long> dims_of(const SpecializedComplex& sc) {
    std::vector<long long> d_ranks(sc.diffs.size());
    for (size_t i = 0; i < sc.diffs.size(); ++i)
        d_ranks[i] = static_cast<long long>(exact_rank(sc.diffs[i]));
    return dims_from_ranks(sc.ranks, d_ranks);
}

}  // namespace

std::vector<long long> cohomology_dims(const LaurentChainComplex& c,
                                       const std::vector<CyclotomicNumber>& point) {
    return dims_of(specialize(c, point));
}

std::vector<long long> cohomology_dims(const LaurentChainComplex& c, const TorsionPoint& point) {
    return dims_of(specialize(c, point));
}

namespace {

// t_j -> zeta^{q_j} * prod_k s_k^{M_kj}: rewrites a differential as a matrix
// of Laurent polynomials in the coset coordinates s.
Mat<CycLaurent> parametrize_matrix(const Mat<CycLaurent>& m, const IntMatrix& directions,
                                   const std::vector<QmodZ>& lift) {
    const size_t dim = directions.rows();
    const size_t n = lift.size();
    Mat<CycLaurent> out(m.rows, m.cols, CycLaurent(static_cast<int>(dim)));
    for (size_t idx = 0; idx < m.e.size(); ++idx) {
        CycLaurent acc(static_cast<int>(dim));
        for (const auto& [e, coef] : m.e[idx].terms()) {
            std::vector<long long> s_exp(dim, 0);
            for (size_t k = 0; k < dim; ++k) {
                Int acc_e = 0;
                for (size_t j = 0; j < n; ++j) acc_e += directions.at(k, j) * Int(e[j]);
                s_exp[k] = static_cast<long long>(acc_e);
            }
            Rational phase = 0;
            for (size_t j = 0; j < n; ++j)
                if (e[j] != 0) phase += Rational(e[j]) * lift[j].value();
            acc.add_term(s_exp, coef * CyclotomicNumber::root_of_unity(QmodZ(phase)));
        }
        out.e[idx] = acc;
    }
    return out;
}

}  // namespace

long long generic_rank_on_coset(const LaurentChainComplex& c, long i, const TorsionCoset& coset) {
    if (coset.ambient_rank() != static_cast<size_t>(c.vars()))
        throw RankMismatchError("generic_rank_on_coset: coset ambient rank " +
                                std::to_string(coset.ambient_rank()) +
                                " does not match variable count " + std::to_string(c.vars()));
    const Mat<CycLaurent>* d = c.differential(i);
    if (!d) return 0;
    IntMatrix directions = kernel_rows(coset.lattice.basis());
    std::vector<QmodZ> lift = solve_congruence(coset.lattice, coset.phi);
    return static_cast<long long>(exact_rank(parametrize_matrix(*d, directions, lift)));
}

std::vector<long long> generic_cohomology_dims(const LaurentChainComplex& c,
                                               const TorsionCoset& coset) {
    std::vector<long long> d_ranks(c.differentials().size());
    for (size_t i = 0; i < d_ranks.size(); ++i)
        d_ranks[i] = generic_rank_on_coset(c, static_cast<long>(i), coset);
    return dims_from_ranks(c.ranks(), d_ranks);
}

JumpCertificate coset_jump_certify(const LaurentChainComplex& c, long i, long long k,
                                   const TorsionCoset& coset) {
    JumpCertificate cert{coset, i, k, 0, 0, 0};
    cert.rank_d_i = generic_rank_on_coset(c, i, coset);
    cert.rank_d_prev = generic_rank_on_coset(c, i - 1, coset);
    long long r_i =
        (i >= 0 && static_cast<size_t>(i) < c.ranks().size()) ? static_cast<long long>(c.rank(i)) : 0;
    cert.generic_dim = r_i - cert.rank_d_i - cert.rank_d_prev;
    return cert;
}

TorsionCoset coset_join(const TorsionCoset& a, const TorsionCoset& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw RankMismatchError("coset_join: ambient rank mismatch");
    size_t n = a.ambient_rank();
    std::vector<QmodZ> qa = solve_congruence(a.lattice, a.phi);
    std::vector<QmodZ> qb = solve_congruence(b.lattice, b.phi);

    IntMatrix rows = kernel_rows(a.lattice.basis()).stack(kernel_rows(b.lattice.basis()));
    // Lifted translate difference, denominators cleared to a primitive row.
    std::vector<Rational> delta(n);
    bool nonzero = false;
    Int common = 1;
    for (size_t j = 0; j < n; ++j) {
        delta[j] = qa[j].value() - qb[j].value();
        if (delta[j] != 0) nonzero = true;
        common = lcm(common, denominator(delta[j]));
    }
    if (nonzero) {
        IntMatrix drow(1, n);
        for (size_t j = 0; j < n; ++j) drow.at(0, j) = numerator(delta[j] * Rational(common));
        rows = rows.stack(drow);
    }
    Lattice joined(n, kernel_rows(rows));
    std::vector<QmodZ> phi(joined.rank());
    std::vector<QmodZ> qb_mod(qb.begin(), qb.end());
    for (size_t i = 0; i < joined.rank(); ++i)
        phi[i] = dot_mod1(joined.basis().row(i), qb_mod);
    return {joined, phi};
}

namespace {

std::vector<TorsionCoset> drop_contained(std::vector<TorsionCoset> cs) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::vector<TorsionCoset> out;
    for (size_t i = 0; i < cs.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < cs.size() && !dominated; ++j)
            if (i != j && !(cs[i] == cs[j]) && coset_contains(cs[j], cs[i])) dominated = true;
        if (!dominated) out.push_back(cs[i]);
    }
    return out;
}

void check_grid_budget(int vars, long long level, unsigned long long ceiling) {
    unsigned long long total = 1;
    for (int i = 0; i < vars; ++i) {
        if (total > ceiling / static_cast<unsigned long long>(level))
            throw BudgetExceededError("grid of " + std::to_string(level) + "^" +
                                      std::to_string(vars) + " points exceeds the ceiling of " +
                                      std::to_string(ceiling));
        total *= static_cast<unsigned long long>(level);
    }
}

std::vector<TorsionPoint> enumerate_grid(int vars, long long level) {
    std::vector<TorsionPoint> pts;
    std::vector<long long> x(vars, 0);
    while (true) {
        std::vector<QmodZ> coords(vars);
        for (int j = 0; j < vars; ++j) coords[j] = QmodZ(x[j], level);
        pts.emplace_back(std::move(coords));
        int pos = vars;
        while (pos-- > 0) {
            if (++x[pos] < level) break;
            x[pos] = 0;
        }
        if (pos < 0) break;
    }
    return pts;
}

std::string completeness_text(long i, long long k, long long level) {
    std::ostringstream os;
    os << "Sound: every listed coset carries a symbolic certificate that the generic cohomology "
          "dimension in degree "
       << i << " is at least " << k
       << ", so the whole coset lies in the locus. Complete relative to the search level "
       << level << ": every jump point whose coordinates have order dividing " << level
       << " is covered. Points of higher or infinite order are outside the scope of this search.";
    return os.str();
}

}  // namespace

JumpLocusReport jump_locus_reconstruct(const LaurentChainComplex& c, long i, long long k,
                                       long long search_level,
                                       unsigned long long grid_ceiling) {
    if (search_level < 1) throw std::invalid_argument("search_level must be >= 1");
    const int n = c.vars();
    JumpLocusReport report{AbsoluteSet::empty(n), i, k, search_level, {}, ""};
    report.completeness_note = completeness_text(i, k, search_level);

    if (k <= 0) {
        // Dimensions are never negative, so the full torus certifies at once.
        TorsionCoset full = TorsionCoset::full_torus(n);
        report.certificates.push_back(coset_jump_certify(c, i, k, full));
        report.locus = AbsoluteSet::full_torus(n);
        return report;
    }

    check_grid_budget(n, search_level, grid_ceiling);
    std::vector<TorsionPoint> jump_points;
    for (const auto& p : enumerate_grid(n, search_level)) {
        if (dim_at_degree(cohomology_dims(c, p), i) >= k) jump_points.push_back(p);
    }
    if (jump_points.empty()) return report;

    std::vector<TorsionCoset> cosets;
    cosets.reserve(jump_points.size());
    for (const auto& p : jump_points) cosets.push_back(TorsionCoset::point(p));

    std::map<TorsionCoset, bool> cert_cache;
    auto certified = [&](const TorsionCoset& cs) {
        auto it = cert_cache.find(cs);
        if (it != cert_cache.end()) return it->second;
        bool ok = coset_jump_certify(c, i, k, cs).holds();
        cert_cache.emplace(cs, ok);
        return ok;
    };

    while (true) {
        cosets = drop_contained(std::move(cosets));
        // Candidate joins ordered by increasing dimension, then canonically.
        std::vector<TorsionCoset> candidates;
        for (size_t x = 0; x < cosets.size(); ++x)
            for (size_t y = x + 1; y < cosets.size(); ++y) {
                TorsionCoset j = coset_join(cosets[x], cosets[y]);
                if (std::find(cosets.begin(), cosets.end(), j) == cosets.end())
                    candidates.push_back(std::move(j));
            }
        std::sort(candidates.begin(), candidates.end(),
                  [](const TorsionCoset& a, const TorsionCoset& b) {
                      if (a.dim() != b.dim()) return a.dim() < b.dim();
                      return a < b;
                  });
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        bool merged = false;
        for (const auto& cand : candidates) {
            if (!certified(cand)) continue;
            std::vector<TorsionCoset> next;
            for (auto& cs : cosets)
                if (!coset_contains(cand, cs)) next.push_back(std::move(cs));
            next.push_back(cand);
            cosets = std::move(next);
            merged = true;
            break;
        }
        if (!merged) break;
    }

    cosets = drop_contained(std::move(cosets));
    for (const auto& cs : cosets) {
        JumpCertificate cert = coset_jump_certify(c, i, k, cs);  // re-checked independently
        if (!cert.holds())
            throw std::logic_error("jump_locus_reconstruct: emitted coset failed re-certification");
        report.certificates.push_back(std::move(cert));
    }
    report.locus = AbsoluteSet::from_cosets(n, cosets);
    for (const auto& p : jump_points)
        if (!set_member(p, report.locus))
            throw std::logic_error("jump_locus_reconstruct: jump point left uncovered");
    return report;
}

Verdict verify_absolute(const LaurentChainComplex& c, long i, long long k,
                        const AbsoluteSet& claimed, long long level,
                        unsigned long long grid_ceiling) {
    if (claimed.ambient_rank() != static_cast<size_t>(c.vars()))
        throw RankMismatchError("verify_absolute: claimed set rank does not match variable count");
    if (level < 1 || Int(level) % claimed.torsion_level() != 0)
        throw LevelError("verify_absolute: torsion orders in the claim must divide the level");
    Verdict v;
    for (const auto& comp : irreducible_components(closure(claimed), false)) {
        if (!coset_jump_certify(c, i, k, comp).holds()) {
            v.pass = false;
            v.witness_coset = comp;
            v.detail = "closure component fails symbolic certification";
            return v;
        }
    }
    check_grid_budget(c.vars(), level, grid_ceiling);
    for (const auto& p : enumerate_grid(c.vars(), level)) {
        bool claimed_here = set_member(p, claimed);
        bool jumps = dim_at_degree(cohomology_dims(c, p), i) >= k;
        if (claimed_here != jumps) {
            v.pass = false;
            v.witness_point = p;
            v.detail = jumps ? "observed jump point missing from the claim"
                             : "claimed point does not jump";
            return v;
        }
    }
    v.pass = true;
    v.detail = "all closure components certify and the claim matches the level-" +
               std::to_string(level) + " grid exactly";
    return v;
}

Verdict semicontinuity_check(const LaurentChainComplex& c, long i, size_t sample_count,
                             long long level, unsigned long long seed) {
    Verdict v;
    long long generic =
        dim_at_degree(generic_cohomology_dims(c, TorsionCoset::full_torus(c.vars())), i);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> pick(0, level - 1);
    for (size_t s = 0; s < sample_count; ++s) {
        std::vector<QmodZ> coords(c.vars());
        for (int j = 0; j < c.vars(); ++j) coords[j] = QmodZ(pick(rng), level);
        TorsionPoint p(std::move(coords));
        long long d = dim_at_degree(cohomology_dims(c, p), i);
        if (d < generic) {
            v.pass = false;
            v.witness_point = p;
            v.detail = "sample dimension " + std::to_string(d) + " below generic value " +
                       std::to_string(generic);
            return v;
        }
    }
    v.pass = true;
    v.detail = "generic dim H^" + std::to_string(i) + " = " + std::to_string(generic) + "; " +
               std::to_string(sample_count) + " samples at level " + std::to_string(level) +
               " all >= generic";
    return v;
}

Verdict symmetry_check(const LaurentChainComplex& c, long i, long long k, long long level,
                       unsigned long long grid_ceiling) {
    if (!c.has_rational_coefficients())
        throw LevelError("symmetry_check: complex must have rational coefficients");
    Verdict v;
    check_grid_budget(c.vars(), level, grid_ceiling);
    std::vector<TorsionPoint> grid = enumerate_grid(c.vars(), level);
    std::map<TorsionPoint, long long> dim_at;
    for (const auto& p : grid) dim_at[p] = dim_at_degree(cohomology_dims(c, p), i);
    for (const auto& p : grid) {
        TorsionPoint q = p.inverse();
        if (dim_at[p] != dim_at[q]) {
            v.pass = false;
            v.witness_point = p;
            v.detail = "dim H^i differs between a point and its inverse";
            return v;
        }
    }
    JumpLocusReport rep = jump_locus_reconstruct(c, i, k, level, grid_ceiling);
    if (!is_equal(rep.locus, invert(rep.locus))) {
        v.pass = false;
        v.detail = "reconstructed locus is not inversion-stable";
        return v;
    }
    v.pass = true;
    v.detail = "dim H^" + std::to_string(i) + " symmetric under inversion on the level-" +
               std::to_string(level) + " grid; reconstructed locus inversion-stable";
    return v;
}

bool non_torsion_probe(const LaurentChainComplex& c, long i, long long k,
                       const std::vector<CyclotomicNumber>& point) {
    return dim_at_degree(cohomology_dims(c, point), i) >= k;
}

}  // namespace abstorus
