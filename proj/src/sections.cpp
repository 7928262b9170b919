#include "hopfpfaff/sections.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hopfpfaff/errors.hpp"
#include "hopfpfaff/parallel.hpp"

namespace hopfpfaff {

namespace {

// Rational enclosure of log(1/mu) for mu in (0,1), via the atanh series
// log y = 2 sum u^{2j+1}/(2j+1), u = (y-1)/(y+1), with an explicit tail bound.
struct LogBounds {
    Rational lo, hi;  // 0 < lo <= log(1/mu) <= hi
};

LogBounds log_reciprocal_bounds(const Rational& mu) {
    Rational y = 1 / mu;  // > 1
    Rational u = (y - 1) / (y + 1);
    Rational u2 = u * u;
    Rational term = u;  // u^{2j+1}
    Rational sum = 0;
    for (int j = 0; j < 64; ++j) {
        sum += term / (2 * j + 1);
        term *= u2;
        Rational tail = term / ((2 * j + 3) * (1 - u2));
        if (tail * 64 <= sum || j == 63) {
            return {2 * sum, 2 * (sum + tail)};
        }
    }
    throw InputError("log bound iteration failed");  // unreachable
}

std::vector<int> complement(int n, const std::vector<int>& subset) {
    std::vector<bool> in(n, false);
    for (int i : subset) in[i] = true;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

// all alpha in N^positions with sum = total, applied into a template vector
void for_each_composition(const std::vector<int>& positions, long long total,
                          Exponents& scratch,
                          const std::function<void(const Exponents&)>& emit) {
    if (positions.empty()) {
        if (total == 0) emit(scratch);
        return;
    }
    std::function<void(size_t, long long)> rec = [&](size_t at, long long remaining) {
        if (at + 1 == positions.size()) {
            scratch[positions[at]] = static_cast<int>(remaining);
            emit(scratch);
            scratch[positions[at]] = 0;
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            scratch[positions[at]] = static_cast<int>(v);
            rec(at + 1, remaining - v);
            scratch[positions[at]] = 0;
        }
    };
    rec(0, total);
}

bool tuple_contains(const IdxTuple& idx, int i) {
    return std::binary_search(idx.begin(), idx.end(), i);
}

// exact membership test of alpha + 1_I - m in the lattice
bool solves(const RelationLattice& lattice, const std::vector<long long>& m,
            const IdxTuple& idx, const Exponents& alpha) {
    IntVec v(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) v[i] = Int(alpha[i]) - Int(m[i]);
    for (int i : idx) v[i] += 1;
    return lattice.contains(v);
}

void sort_solutions(std::vector<MonomialSolution>& sols) {
    std::sort(sols.begin(), sols.end(), solution_less);
}

// Weighted box enumeration per tuple for the general resonant case. Every
// solution satisfies sum alpha_i log(1/mu_i) = sum (m_i - 1_I(i)) log(1/mu_i),
// so sum alpha_i lo_i <= C_hi; candidates in that box are filtered by the
// exact lattice test.
std::vector<Exponents> resonant_tuple_solutions(const SectionProblem& p,
                                                const std::vector<LogBounds>& logs,
                                                const IdxTuple& idx) {
    const int n = p.n();
    const auto& m = p.character.exponents;
    Rational c_hi = 0;
    for (int i = 0; i < n; ++i) {
        long long d = m[i] - (tuple_contains(idx, i) ? 1 : 0);
        if (d >= 0)
            c_hi += Rational(d) * logs[i].hi;
        else
            c_hi += Rational(d) * logs[i].lo;
    }
    std::vector<Exponents> out;
    if (c_hi < 0) return out;

    long long guard = 0;
    Exponents alpha(n, 0);
    std::function<void(int, Rational)> rec = [&](int at, Rational budget) {
        if (++guard > 50'000'000)
            throw UnsupportedError("resonant enumeration box too large for exact search");
        if (at == n) {
            if (solves(p.lattice, m, idx, alpha)) out.push_back(alpha);
            return;
        }
        Rational spent = 0;
        for (int v = 0;; ++v) {
            if (v > 0) {
                spent += logs[at].lo;
                if (spent > budget) break;
            }
            alpha[at] = v;
            rec(at + 1, budget - spent);
        }
        alpha[at] = 0;
    };
    rec(0, c_hi);
    return out;
}

long long checked_total(const Character& c) {
    long long t = 0;
    for (long long e : c.exponents) t += e;
    return t;
}

}  // namespace

bool solution_less(const MonomialSolution& a, const MonomialSolution& b) {
    if (a.idx != b.idx) return a.idx < b.idx;
    return GrlexLess{}(a.alpha, b.alpha);
}

SectionProblem SectionProblem::make(const Spectrum& s, int k, Character character) {
    if (s.n() < 3)
        throw UnsupportedError("twisted section spaces require dimension n >= 3");
    if (k < 1 || k > s.n() - 1)
        throw InputError("codimension k must satisfy 1 <= k <= n-1");
    if (character.exponents.size() != static_cast<size_t>(s.n()))
        throw DimensionMismatch("character exponent vector length differs from n");
    if (s.is_exact() && !character.value)
        character = character_from_exponents(s, character.exponents);
    RelationLattice lattice = compute_relation_lattice(s);
    HopfClass hopf_class = classify(s, lattice);
    return SectionProblem{s, std::move(lattice), std::move(hopf_class), k, std::move(character)};
}

KForm kform_of_solution(int n, const MonomialSolution& sol) {
    return KForm::monomial_term(n, sol.idx, sol.alpha, GaussRat(1));
}

KForm p0_apply(const Spectrum& s, const Character& b, const KForm& w) {
    if (!s.is_exact())
        throw SymbolicModeUnsupported("p0 requires an exact spectrum");
    if (!b.value) throw InputError("character carries no exact value");
    return w.scaled(GaussRat(*b.value)) - pullback_f(s, w);
}

CharacterVerdict validate_character(const SectionProblem& p) {
    const auto& m = p.character.exponents;
    const int k = p.k;
    CharacterVerdict v;
    switch (p.hopf_class.tag) {
        case HopfClass::Tag::Classical: {
            v.case_id = "classical(i)";
            long long total = checked_total(p.character);
            v.positive = total >= k;
            v.reason = "b = mu^m with m = " + std::to_string(total) +
                       (v.positive ? " >= k" : " < k");
            return v;
        }
        case HopfClass::Tag::NoResonance: {
            v.case_id = "no-resonance(ii)";
            bool natural = std::all_of(m.begin(), m.end(), [](long long e) { return e >= 0; });
            int ones = static_cast<int>(std::count_if(m.begin(), m.end(),
                                                      [](long long e) { return e >= 1; }));
            v.positive = natural && ones >= k;
            if (!natural)
                v.reason = "character has a negative exponent";
            else
                v.reason = std::to_string(ones) + " exponents >= 1 (needs at least " +
                           std::to_string(k) + ")";
            return v;
        }
        case HopfClass::Tag::WeakNoResonance: {
            v.case_id = "weak-no-resonance(iii)";
            const auto& block = p.hopf_class.block;
            long long t = 0;
            for (int i : block) t += m[i];
            bool ext_natural = true;
            int ext_ones = 0;
            for (int j : complement(p.n(), block)) {
                if (m[j] < 0) ext_natural = false;
                if (m[j] >= 1) ++ext_ones;
            }
            long long s_max = std::min<long long>({p.hopf_class.block_size, k, std::max(t, 0LL)});
            v.positive = t >= 0 && ext_natural && ext_ones >= k - s_max;
            if (t < 0)
                v.reason = "block degree t = " + std::to_string(t) + " is negative";
            else if (!ext_natural)
                v.reason = "character has a negative exponent outside the block";
            else
                v.reason = "block degree t = " + std::to_string(t) + ", " +
                           std::to_string(ext_ones) + " external exponents >= 1 (needs " +
                           std::to_string(std::max(0LL, k - s_max)) + ")";
            return v;
        }
        case HopfClass::Tag::GeneralResonant: {
            v.case_id = "general-resonant";
            SectionBasis basis = solve_sections(p);
            v.positive = basis.dim() > 0;
            v.reason = "kernel enumeration found dim = " + std::to_string(basis.dim());
            return v;
        }
    }
    throw InputError("unknown resonance class");
}

SectionBasis solve_sections(const SectionProblem& p) {
    const int n = p.n();
    const int k = p.k;
    const auto& m = p.character.exponents;

    SectionBasis basis;
    basis.n = n;
    basis.k = k;
    if (k == n - 1) basis.flags.push_back("k_equals_n_minus_1");

    const auto tuples = increasing_tuples(n, k);

    switch (p.hopf_class.tag) {
        case HopfClass::Tag::Classical: {
            long long deg = checked_total(p.character) - k;
            if (deg < 0) return basis;
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            for (const auto& idx : tuples) {
                Exponents scratch(n, 0);
                for_each_composition(all, deg, scratch, [&](const Exponents& alpha) {
                    basis.solutions.push_back({idx, alpha});
                });
            }
            break;
        }
        case HopfClass::Tag::NoResonance: {
            for (const auto& idx : tuples) {
                Exponents alpha(n, 0);
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    long long a = m[i] - (tuple_contains(idx, i) ? 1 : 0);
                    if (a < 0)
                        ok = false;
                    else
                        alpha[i] = static_cast<int>(a);
                }
                if (ok) basis.solutions.push_back({idx, alpha});
            }
            break;
        }
        case HopfClass::Tag::WeakNoResonance: {
            const auto& block = p.hopf_class.block;
            const auto external = complement(n, block);
            long long t = 0;
            for (int i : block) t += m[i];
            for (const auto& idx : tuples) {
                long long s = 0;
                for (int i : idx)
                    if (std::binary_search(block.begin(), block.end(), i)) ++s;
                long long block_deg = t - s;
                if (block_deg < 0) continue;
                Exponents scratch(n, 0);
                bool ok = true;
                for (int j : external) {
                    long long a = m[j] - (tuple_contains(idx, j) ? 1 : 0);
                    if (a < 0) {
                        ok = false;
                        break;
                    }
                    scratch[j] = static_cast<int>(a);
                }
                if (!ok) continue;
                for_each_composition(block, block_deg, scratch, [&](const Exponents& alpha) {
                    basis.solutions.push_back({idx, alpha});
                });
            }
            break;
        }
        case HopfClass::Tag::GeneralResonant: {
            if (!p.spectrum.is_exact())
                throw SymbolicResonantUnsupported(
                    "general resonant spectra need exact eigenvalues for enumeration");
            std::vector<LogBounds> logs;
            logs.reserve(n);
            for (int i = 0; i < n; ++i) logs.push_back(log_reciprocal_bounds(p.spectrum.mu(i)));

            std::vector<std::vector<Exponents>> per_tuple(tuples.size());
            parallel_for(tuples.size(), [&](size_t begin, size_t end) {
                for (size_t t = begin; t < end; ++t)
                    per_tuple[t] = resonant_tuple_solutions(p, logs, tuples[t]);
            });
            bool any_admissible = false;
            for (size_t t = 0; t < tuples.size(); ++t) {
                if (!per_tuple[t].empty()) any_admissible = true;
                for (auto& alpha : per_tuple[t]) basis.solutions.push_back({tuples[t], alpha});
            }
            if (!any_admissible && basis.solutions.empty()) {
                // distinguish "no admissible weight at all" from a plain empty kernel
                bool all_negative = true;
                for (const auto& idx : tuples) {
                    Rational c_hi = 0;
                    for (int i = 0; i < n; ++i) {
                        long long d = m[i] - (tuple_contains(idx, i) ? 1 : 0);
                        c_hi += Rational(d) * (d >= 0 ? logs[i].hi : logs[i].lo);
                    }
                    if (c_hi >= 0) {
                        all_negative = false;
                        break;
                    }
                }
                if (all_negative) basis.flags.push_back("unbounded_character");
            }
            break;
        }
    }
    sort_solutions(basis.solutions);
    return basis;
}

long long provable_degree_bound(const SectionProblem& p) {
    const int n = p.n();
    const auto& m = p.character.exponents;
    auto natural_sum = [&] {
        long long s = 0;
        for (long long e : m) s += std::max(e, 0LL);
        return s;
    };
    switch (p.hopf_class.tag) {
        case HopfClass::Tag::Classical:
            return std::max(0LL, checked_total(p.character) - p.k);
        case HopfClass::Tag::NoResonance:
            return natural_sum();
        case HopfClass::Tag::WeakNoResonance: {
            long long t = 0;
            for (int i : p.hopf_class.block) t += m[i];
            long long ext = 0;
            for (int j : complement(n, p.hopf_class.block)) ext += std::max(m[j], 0LL);
            return std::max(t, 0LL) + ext;
        }
        case HopfClass::Tag::GeneralResonant: {
            if (!p.spectrum.is_exact())
                throw SymbolicResonantUnsupported(
                    "degree bounds need exact eigenvalues for resonant spectra");
            std::vector<LogBounds> logs;
            Rational min_lo;
            for (int i = 0; i < n; ++i) {
                logs.push_back(log_reciprocal_bounds(p.spectrum.mu(i)));
                if (i == 0 || logs[i].lo < min_lo) min_lo = logs[i].lo;
            }
            long long best = 0;
            for (const auto& idx : increasing_tuples(n, p.k)) {
                Rational c_hi = 0;
                for (int i = 0; i < n; ++i) {
                    long long d = m[i] - (tuple_contains(idx, i) ? 1 : 0);
                    c_hi += Rational(d) * (d >= 0 ? logs[i].hi : logs[i].lo);
                }
                if (c_hi < 0) continue;
                Rational q = c_hi / min_lo;
                Int ceiling = numerator(q) / denominator(q) + (numerator(q) % denominator(q) != 0 ? 1 : 0);
                best = std::max(best, static_cast<long long>(ceiling));
            }
            return best;
        }
    }
    throw InputError("unknown resonance class");
}

namespace {

using RowKey = std::pair<IdxTuple, Exponents>;

struct RowKeyLess {
    bool operator()(const RowKey& a, const RowKey& b) const {
        if (a.first != b.first) return a.first < b.first;
        return GrlexLess{}(a.second, b.second);
    }
};

using SparseVec = std::map<RowKey, GaussRat, RowKeyLess>;

void axpy(SparseVec& target, const GaussRat& factor, const SparseVec& source) {
    for (const auto& [key, val] : source) {
        auto [it, fresh] = target.emplace(key, factor * val);
        if (!fresh) {
            it->second += factor * val;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

}  // namespace

SectionBasis brute_force_kernel(const SectionProblem& p, long long max_degree) {
    if (!p.spectrum.is_exact())
        throw SymbolicModeUnsupported("the brute-force oracle requires an exact spectrum");
    const int n = p.n();
    const long long d_max = max_degree >= 0 ? max_degree : provable_degree_bound(p);

    // enumerate the monomial basis (I, alpha), |alpha| <= d_max
    const auto tuples = increasing_tuples(n, p.k);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<RowKey> keys;
    for (const auto& idx : tuples) {
        Exponents scratch(n, 0);
        for (long long d = 0; d <= d_max; ++d)
            for_each_composition(all, d, scratch,
                                 [&](const Exponents& alpha) { keys.emplace_back(idx, alpha); });
    }
    if (keys.size() > 5'000'000)
        throw UnsupportedError("oracle basis too large; lower the degree bound");

    // p0 image of each basis element, in basis coordinates
    std::vector<SparseVec> images(keys.size());
    parallel_for(keys.size(), [&](size_t begin, size_t end) {
        for (size_t j = begin; j < end; ++j) {
            KForm w = KForm::monomial_term(n, keys[j].first, keys[j].second, GaussRat(1));
            KForm image = p0_apply(p.spectrum, p.character, w);
            for (const auto& [idx, g] : image.terms())
                for (const auto& [alpha, c] : g.terms()) images[j][{idx, alpha}] = c;
        }
    });

    // sparse left-to-right elimination; empty reduced column = kernel member
    std::map<RowKey, std::pair<SparseVec, SparseVec>, RowKeyLess> pivots;
    SectionBasis basis;
    basis.n = n;
    basis.k = p.k;
    if (p.k == n - 1) basis.flags.push_back("k_equals_n_minus_1");
    for (size_t j = 0; j < keys.size(); ++j) {
        SparseVec v = std::move(images[j]);
        SparseVec combo;
        combo[keys[j]] = GaussRat(1);
        bool in_kernel = false;
        while (true) {
            if (v.empty()) {
                in_kernel = true;
                break;
            }
            auto it = pivots.find(v.begin()->first);
            if (it == pivots.end()) {
                RowKey lead = v.begin()->first;
                pivots.emplace(std::move(lead),
                               std::make_pair(std::move(v), std::move(combo)));
                break;
            }
            GaussRat factor = -(v.begin()->second / it->second.first.begin()->second);
            axpy(v, factor, it->second.first);
            axpy(combo, factor, it->second.second);
        }
        if (in_kernel) {
            if (combo.size() != 1)
                throw std::logic_error("p0 kernel produced a non-monomial combination");
            const RowKey& key = combo.begin()->first;
            basis.solutions.push_back({key.first, key.second});
        }
    }
    sort_solutions(basis.solutions);
    return basis;
}

KForm ParametricSection::specialize(const std::vector<GaussRat>& values) const {
    if (values.size() != solutions.size())
        throw DimensionMismatch("specialization needs one value per free symbol");
    KForm out(n, k);
    for (size_t j = 0; j < solutions.size(); ++j) {
        if (values[j].is_zero()) continue;
        out.add_term(solutions[j].idx, Poly::monomial(n, solutions[j].alpha, values[j]));
    }
    return out;
}

std::string ParametricSection::str() const {
    if (solutions.empty()) return "0";
    // group by tuple, factor out the common monomial content
    std::string s;
    size_t j = 0;
    while (j < solutions.size()) {
        size_t j_end = j;
        while (j_end < solutions.size() && solutions[j_end].idx == solutions[j].idx) ++j_end;
        Exponents content = solutions[j].alpha;
        for (size_t u = j; u < j_end; ++u)
            for (int i = 0; i < n; ++i) content[i] = std::min(content[i], solutions[u].alpha[i]);
        std::string factor;
        for (int i = 0; i < n; ++i) {
            if (content[i] == 0) continue;
            if (!factor.empty()) factor += " ";
            factor += "z" + std::to_string(i + 1);
            if (content[i] > 1) factor += "^" + std::to_string(content[i]);
        }
        std::string sum;
        for (size_t u = j; u < j_end; ++u) {
            if (!sum.empty()) sum += " + ";
            sum += "c" + std::to_string(u + 1);
            for (int i = 0; i < n; ++i) {
                int e = solutions[u].alpha[i] - content[i];
                if (e == 0) continue;
                sum += " z" + std::to_string(i + 1);
                if (e > 1) sum += "^" + std::to_string(e);
            }
        }
        if (j_end - j > 1) sum = "(" + sum + ")";
        if (!s.empty()) s += " + ";
        if (!factor.empty()) s += factor + " ";
        s += sum + " " + tuple_str(solutions[j].idx, "dz");
        j = j_end;
    }
    return s;
}

ParametricSection general_section(const SectionProblem& p) {
    if (p.hopf_class.is(HopfClass::Tag::GeneralResonant))
        throw GeneralResonantUnsupported(
            "no closed-form general section for resonant spectra; use the basis directly");
    SectionBasis basis = solve_sections(p);
    ParametricSection out;
    out.n = p.n();
    out.k = p.k;
    out.case_tag = p.hopf_class.tag;
    out.solutions = std::move(basis.solutions);
    return out;
}

}  // namespace hopfpfaff
