#include "hopfpfaff/analysis.hpp"

#include <algorithm>
#include <random>

#include "hopfpfaff/errors.hpp"
#include "hopfpfaff/parallel.hpp"

namespace hopfpfaff {

namespace {

constexpr int kSamplesPerStratum = 64;

// deterministic Gaussian-rational sample points; zeroed coordinates fixed to 0
std::vector<GaussRat> sample_point(std::mt19937_64& gen, int n, const std::vector<int>& zeroed) {
    std::uniform_int_distribution<int> num(1, 97);
    std::uniform_int_distribution<int> den(1, 13);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<GaussRat> pt(n);
    std::vector<bool> zero(n, false);
    for (int i : zeroed) zero[i] = true;
    for (int i = 0; i < n; ++i) {
        if (zero[i]) continue;
        Rational re(num(gen) * (sign(gen) ? 1 : -1), den(gen));
        Rational im(num(gen) * (sign(gen) ? 1 : -1), den(gen));
        pt[i] = GaussRat(re, im);
    }
    return pt;
}

// true when the polynomial vanishes identically on { z_i = 0, i in s }:
// exact substitution first, then the sampling protocol for the rest
bool vanishes_on_stratum(const Poly& h, const std::vector<int>& s) {
    Poly restricted = h.substitute_zero(s);
    if (restricted.is_zero()) return true;
    std::mt19937_64 gen(0x48504653u + 31 * static_cast<unsigned>(s.size()));
    for (int trial = 0; trial < kSamplesPerStratum; ++trial) {
        auto pt = sample_point(gen, h.n(), s);
        if (!restricted.eval(pt).is_zero()) return false;
    }
    return true;
}

std::vector<std::vector<int>> subsets_by_size(int n) {
    std::vector<std::vector<int>> out;
    for (int size = 1; size <= n; ++size)
        for (const auto& tuple : increasing_tuples(n, size)) out.push_back(tuple);
    return out;
}

bool contains_subset(const std::vector<std::vector<int>>& accepted,
                     const std::vector<int>& candidate) {
    for (const auto& s : accepted)
        if (std::includes(candidate.begin(), candidate.end(), s.begin(), s.end())) return true;
    return false;
}

}  // namespace

std::optional<int> SingularLocus::codim() const {
    if (strata.empty()) return std::nullopt;
    int best = strata.front().codim();
    for (const auto& s : strata) best = std::min(best, s.codim());
    return best;
}

SingularLocus singular_locus(const KForm& w) {
    if (w.is_zero()) throw ZeroForm("singular locus of the zero form is everything");
    const int n = w.n();
    if (n > 16) throw UnsupportedError("stratum search supports n <= 16");

    SingularLocus out;
    struct CoeffParts {
        std::vector<int> content_support;  // variables in the monomial factor
        Poly reduced;                      // content-free polynomial factor
        bool monomial;
    };
    std::vector<CoeffParts> parts;
    for (const auto& [idx, g] : w.terms()) {
        CoeffParts cp{{}, g.strip_content(), g.is_monomial()};
        Exponents content = g.content_exponents();
        for (int i = 0; i < n; ++i)
            if (content[i] > 0) cp.content_support.push_back(i);
        if (!cp.monomial) out.exact = false;
        parts.push_back(std::move(cp));
    }
    if (!out.exact) out.samples = kSamplesPerStratum;

    // minimal subsets S whose strata every coefficient vanishes on
    std::vector<std::vector<int>> accepted;
    for (const auto& s : subsets_by_size(n)) {
        if (static_cast<int>(s.size()) == n) continue;  // only the origin
        if (contains_subset(accepted, s)) continue;
        bool all_vanish = true;
        for (const auto& cp : parts) {
            bool hit = std::any_of(cp.content_support.begin(), cp.content_support.end(),
                                   [&](int i) { return std::binary_search(s.begin(), s.end(), i); });
            if (hit) continue;
            if (cp.monomial) {  // content-free monomial factor is a constant
                all_vanish = false;
                break;
            }
            if (!vanishes_on_stratum(cp.reduced, s)) {
                all_vanish = false;
                break;
            }
        }
        if (all_vanish) accepted.push_back(s);
    }
    for (auto& s : accepted) out.strata.push_back({std::move(s)});
    return out;
}

bool is_regular(const KForm& w) { return singular_locus(w).empty(); }

bool is_decomposable(const KForm& w) {
    const int k = w.k();
    const int n = w.n();
    if (k <= 1 || k >= n - 1) return true;
    for (const auto& j : increasing_tuples(n, k - 1))
        if (!wedge(contract_tuple(w, j), w).is_zero()) return false;
    return true;
}

Integrability is_integrable(const KForm& w) {
    if (!is_decomposable(w)) return Integrability::NotApplicable;
    KForm dw = ext_d(w);
    if (dw.is_zero()) return Integrability::Integrable;
    for (const auto& j : increasing_tuples(w.n(), w.k() - 1))
        if (!wedge(contract_tuple(w, j), dw).is_zero()) return Integrability::NonIntegrable;
    return Integrability::Integrable;
}

std::string integrability_str(Integrability v) {
    switch (v) {
        case Integrability::Integrable: return "integrable";
        case Integrability::NonIntegrable: return "non-integrable";
        case Integrability::NotApplicable: return "not applicable (non-decomposable)";
    }
    return "?";
}

bool check_equivariance(const Spectrum& s, const Character& b, const KForm& w) {
    if (s.n() != w.n()) throw DimensionMismatch("equivariance check dimension mismatch");
    if (s.is_exact()) {
        Character c = b.value ? b : character_from_exponents(s, b.exponents);
        return p0_apply(s, c, w).is_zero();
    }
    RelationLattice lattice = compute_relation_lattice(s);
    for (const auto& [idx, g] : w.terms()) {
        for (const auto& [alpha, coeff] : g.terms()) {
            IntVec v(s.n());
            for (int i = 0; i < s.n(); ++i) v[i] = Int(alpha[i]) - Int(b.exponents[i]);
            for (int i : idx) v[i] += 1;
            if (!lattice.contains(v)) return false;
        }
    }
    return true;
}

TorusWeight torus_invariant(const KForm& w) {
    if (w.is_zero()) throw ZeroForm("torus invariance of the zero form is undefined");
    TorusWeight out;
    bool first = true;
    for (const auto& [idx, g] : w.terms()) {
        if (!g.is_monomial()) return out;
        const Exponents& alpha = g.terms().begin()->first;
        std::vector<long long> weight(alpha.begin(), alpha.end());
        for (int i : idx) weight[i] += 1;
        if (first) {
            out.weight = std::move(weight);
            first = false;
        } else if (weight != out.weight) {
            out.weight.clear();
            return out;
        }
    }
    out.invariant = true;
    return out;
}

bool distribution_involutive(const std::vector<PolyVectorField>& gens) {
    if (gens.empty()) throw InputError("involutivity check needs at least one generator");
    const int n = gens.front().n();
    for (const auto& v : gens)
        if (v.n() != n) throw DimensionMismatch("generators live in different dimensions");

    KForm span = form_of(gens.front());
    for (size_t i = 1; i < gens.size(); ++i) span = wedge(span, form_of(gens[i]));
    if (span.is_zero())
        throw DegenerateGenerators("generators are linearly dependent at every point");

    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            PolyVectorField bracket = lie_bracket(gens[i], gens[j]);
            if (bracket.is_zero()) continue;
            if (!wedge(form_of(bracket), span).is_zero()) return false;
        }
    return true;
}

std::optional<Character> recover_character(const Spectrum& s, const RelationLattice& lattice,
                                           const KForm& w) {
    if (w.is_zero()) return std::nullopt;
    std::optional<IntVec> candidate;
    for (const auto& [idx, g] : w.terms()) {
        for (const auto& [alpha, coeff] : g.terms()) {
            IntVec weight(s.n(), 0);
            for (int i = 0; i < s.n(); ++i) weight[i] = alpha[i];
            for (int i : idx) weight[i] += 1;
            if (!candidate) {
                candidate = std::move(weight);
                continue;
            }
            IntVec diff(s.n());
            for (int i = 0; i < s.n(); ++i) diff[i] = weight[i] - (*candidate)[i];
            if (!lattice.contains(diff)) return std::nullopt;
        }
    }
    IntVec reduced = lattice.reduce(std::move(*candidate));
    std::vector<long long> exps(s.n());
    for (int i = 0; i < s.n(); ++i) exps[i] = static_cast<long long>(reduced[i]);
    return character_from_exponents(s, std::move(exps));
}

PfaffReport analyze_form(const Spectrum& s, const std::optional<Character>& character,
                         const KForm& w) {
    if (w.is_zero()) throw ZeroForm("cannot analyze the zero form");
    if (s.n() != w.n()) throw DimensionMismatch("form dimension differs from the spectrum");

    PfaffReport rep;
    rep.n = w.n();
    rep.k = w.k();

    RelationLattice lattice = compute_relation_lattice(s);
    std::optional<Character> recovered = recover_character(s, lattice, w);
    if (character) {
        rep.character = s.is_exact() ? character_from_exponents(s, character->exponents)
                                     : *character;
        rep.equivariant = check_equivariance(s, *character, w);
        if (recovered && !rep.equivariant)
            rep.notes.push_back("form is equivariant for a different character");
    } else {
        rep.character = recovered;
        rep.equivariant = recovered.has_value();
    }
    if (!recovered && !character)
        rep.notes.push_back("form is not equivariant for any character");

    rep.singular = singular_locus(w);
    rep.regular = rep.singular.empty();
    rep.decomposable = is_decomposable(w);
    rep.integrable = is_integrable(w);

    if (auto codim = rep.singular.codim(); codim && *codim < 2)
        rep.notes.push_back("singular set has codimension < 2: not a Pfaff system");
    if (!rep.singular.exact)
        rep.notes.push_back("probabilistic verdict: polynomial factors sampled at " +
                            std::to_string(rep.singular.samples) + " points per stratum");
    if (rep.k == rep.n - 1)
        rep.notes.push_back("k = n-1 lies outside the main classification cases");

    if (rep.regular && w.terms().size() == 1) {
        const auto& [idx, g] = *w.terms().begin();
        if (g.is_constant()) {
            std::string leaf = "{";
            for (size_t t = 0; t < idx.size(); ++t) {
                if (t) leaf += " = ";
                leaf += "z" + std::to_string(idx[t] + 1);
            }
            leaf += " = 0} \\ {0} mod <f>";
            rep.compact_leaf = leaf;
        }
    }
    return rep;
}

std::vector<PfaffReport> enumerate_regular_systems(const Spectrum& s, int k) {
    RelationLattice lattice = compute_relation_lattice(s);
    HopfClass cls = classify(s, lattice);
    if (!cls.is(HopfClass::Tag::NoResonance))
        throw WrongClass("regular system enumeration requires a no-resonance spectrum");
    const int n = s.n();
    if (n < 3) throw UnsupportedError("twisted section spaces require dimension n >= 3");
    if (n > 16) throw UnsupportedError("character enumeration supports n <= 16");
    if (k < 1 || k > n - 2)
        throw UnsupportedError(
            "regular system enumeration requires 1 <= k <= n-2; k = n-1 is outside its range");

    std::vector<std::optional<PfaffReport>> slots(size_t{1} << n);
    parallel_for(slots.size(), [&](size_t begin, size_t end) {
        for (size_t mask = begin; mask < end; ++mask) {
            std::vector<long long> m(n, 0);
            for (int i = 0; i < n; ++i)
                if (mask & (size_t{1} << i)) m[i] = 1;
            SectionProblem problem =
                SectionProblem::make(s, k, Character{std::move(m), std::nullopt});
            SectionBasis basis = solve_sections(problem);
            if (basis.dim() == 0) continue;
            KForm member(n, k);
            for (const auto& sol : basis.solutions) member += kform_of_solution(n, sol);
            SingularLocus sing = singular_locus(member);
            if (!sing.empty()) continue;
            // the classification forces a one-element constant basis here
            if (basis.dim() != 1 || exponent_degree(basis.solutions[0].alpha) != 0)
                throw std::logic_error("regular member is not a constant form");
            PfaffReport rep = analyze_form(s, problem.character, member);
            if (rep.integrable != Integrability::Integrable)
                throw std::logic_error("regular constant form failed the Frobenius identity");
            slots[mask] = std::move(rep);
        }
    });
    std::vector<PfaffReport> out;
    for (auto& slot : slots)
        if (slot) out.push_back(std::move(*slot));
    std::sort(out.begin(), out.end(), [](const PfaffReport& a, const PfaffReport& b) {
        return a.character->exponents < b.character->exponents;
    });
    return out;
}

}  // namespace hopfpfaff
