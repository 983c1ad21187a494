#include "abstorus/fox.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "abstorus/errors.hpp"
#include "abstorus/lattice.hpp"

namespace abstorus {

GroupPresentation GroupPresentation::parse(const std::string& text) {
    GroupPresentation p;
    std::map<std::string, int> index;
    bool have_gens = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "gens:") {
            if (have_gens) throw ParseError("duplicate gens: line", lineno, 1);
            std::string name;
            while (ls >> name) {
                if (index.count(name)) throw ParseError("duplicate generator '" + name + "'", lineno, 1);
                index[name] = static_cast<int>(p.generators.size());
                p.generators.push_back(name);
            }
            have_gens = true;
        } else if (head == "rel:") {
            if (!have_gens) throw ParseError("rel: before gens:", lineno, 1);
            std::vector<std::pair<int, int>> word;
            std::string tok;
            while (ls >> tok) {
                int sign = 1;
                std::string name = tok;
                if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
                    sign = -1;
                    name = tok.substr(0, tok.size() - 3);
                }
                auto it = index.find(name);
                if (it == index.end())
                    throw ParseError("unknown generator token '" + tok + "'", lineno, 1);
                // free reduction on load
                if (!word.empty() && word.back().first == it->second &&
                    word.back().second == -sign)
                    word.pop_back();
                else
                    word.emplace_back(it->second, sign);
            }
            p.relators.push_back(std::move(word));
        } else {
            throw ParseError("unrecognized line head '" + head + "'", lineno, 1);
        }
    }
    if (!have_gens) throw ParseError("missing gens: line");
    return p;
}

long long FoxComplex::component_count() const {
    long long n = 1;
    for (long long d : torsion_) n *= d;
    return n;
}

CycLaurent FoxComplex::evaluate(const GroupRingElem& elem,
                                const std::vector<long long>& torsion_char) const {
    const int s = static_cast<int>(gen_free_.size());
    CycLaurent out(static_cast<int>(b1_));
    for (const auto& [sign, word_vec] : elem) {
        std::vector<long long> exps(b1_, 0);
        Rational phase = 0;
        for (int g = 0; g < s; ++g) {
            if (word_vec[g] == 0) continue;
            for (long long j = 0; j < b1_; ++j) exps[j] += word_vec[g] * gen_free_[g][j];
            for (size_t t = 0; t < torsion_.size(); ++t)
                phase += Rational(word_vec[g] * torsion_char[t] * gen_torsion_[g][t], torsion_[t]);
        }
        CyclotomicNumber coef = CyclotomicNumber::root_of_unity(QmodZ(phase));
        if (sign < 0) coef = -coef;
        out.add_term(exps, coef);
    }
    return out;
}

LaurentChainComplex FoxComplex::component(const std::vector<long long>& torsion_char) const {
    if (torsion_char.size() != torsion_.size())
        throw std::invalid_argument("component: expected one character value per torsion factor");
    for (size_t i = 0; i < torsion_.size(); ++i)
        if (torsion_char[i] < 0 || torsion_char[i] >= torsion_[i])
            throw std::invalid_argument("component: character value out of range");
    const size_t s = gen_free_.size(), r = d1_terms_.size();
    Mat<CycLaurent> d0(s, 1, CycLaurent(static_cast<int>(b1_)));
    for (size_t i = 0; i < s; ++i) d0.at(i, 0) = evaluate(d0_terms_[i], torsion_char);
    Mat<CycLaurent> d1(r, s, CycLaurent(static_cast<int>(b1_)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < s; ++j) d1.at(i, j) = evaluate(d1_terms_[i][j], torsion_char);
    return LaurentChainComplex(static_cast<int>(b1_), {1, s, r}, {std::move(d0), std::move(d1)});
}

LaurentChainComplex FoxComplex::component_by_index(long long idx) const {
    if (idx < 0 || idx >= component_count())
        throw std::invalid_argument("component_by_index: index out of range");
    std::vector<long long> tuple(torsion_.size(), 0);
    for (size_t i = 0; i < torsion_.size(); ++i) {
        tuple[i] = idx % torsion_[i];
        idx /= torsion_[i];
    }
    return component(tuple);
}

FoxComplex fox_complex(const GroupPresentation& p) {
    const int s = static_cast<int>(p.generators.size());
    const int r = static_cast<int>(p.relators.size());
    FoxComplex fc;

    // Abelianization matrix: exponent sums of the relators.
    IntMatrix ab(r, s);
    for (int i = 0; i < r; ++i)
        for (const auto& [g, sign] : p.relators[i]) ab.at(i, g) += sign;

    // H_1 = Z^s / rowspan(ab); in the coordinates x -> x * right the row span
    // becomes the diagonal, so column i of right carries coordinate i of the
    // new basis.
    SnfDecomposition sd = snf(ab);
    std::vector<Int> diag = sd.diagonal();
    std::vector<int> free_cols, torsion_cols;
    for (int i = 0; i < s; ++i) {
        Int d = i < static_cast<int>(diag.size()) ? diag[i] : Int(0);
        if (d == 0)
            free_cols.push_back(i);
        else if (d > 1)
            torsion_cols.push_back(i);
    }
    fc.b1_ = static_cast<long long>(free_cols.size());
    for (int i : torsion_cols) fc.torsion_.push_back(static_cast<long long>(diag[i]));

    fc.gen_free_.assign(s, std::vector<long long>(fc.b1_, 0));
    fc.gen_torsion_.assign(s, std::vector<long long>(fc.torsion_.size(), 0));
    for (int g = 0; g < s; ++g) {
        for (size_t j = 0; j < free_cols.size(); ++j)
            fc.gen_free_[g][j] = static_cast<long long>(sd.right.at(g, free_cols[j]));
        for (size_t t = 0; t < torsion_cols.size(); ++t) {
            Int d = diag[torsion_cols[t]];
            fc.gen_torsion_[g][t] =
                static_cast<long long>(mod_floor(sd.right.at(g, torsion_cols[t]), d));
        }
    }

    // d^0: augmentation entries g - 1.
    for (int g = 0; g < s; ++g) {
        FoxComplex::GroupRingElem e;
        std::vector<long long> vg(s, 0);
        vg[g] = 1;
        e.emplace_back(1, vg);
        e.emplace_back(-1, std::vector<long long>(s, 0));
        fc.d0_terms_.push_back(std::move(e));
    }

    // d^1: Fox derivatives d w / d g.  Walking the word with prefix
    // abelianization v: a positive letter g contributes +v, a negative one
    // contributes -(v - e_g).
    for (int i = 0; i < r; ++i) {
        std::vector<FoxComplex::GroupRingElem> row(s);
        std::vector<long long> prefix(s, 0);
        for (const auto& [g, sign] : p.relators[i]) {
            if (sign > 0) {
                row[g].emplace_back(1, prefix);
                prefix[g] += 1;
            } else {
                prefix[g] -= 1;
                row[g].emplace_back(-1, prefix);
            }
        }
        fc.d1_terms_.push_back(std::move(row));
    }
    return fc;
}

}  // namespace abstorus
