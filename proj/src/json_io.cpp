#include "hopfpfaff/json_io.hpp"

#include <fstream>
#include <limits>

#include "hopfpfaff/errors.hpp"

namespace hopfpfaff {

namespace {

Int int_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError(field + ": not a valid integer string");
        }
    }
    throw InputError(field + ": expected an integer or a decimal string");
}

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(v));
    return Json(v.str());
}

const Json& require(const Json& j, const std::string& key, const std::string& ctx) {
    if (!j.is_object()) throw InputError(ctx + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(ctx + ": missing field \"" + key + "\"");
    return *it;
}

long long small_int(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) throw InputError(field + ": expected an integer");
    return j.get<long long>();
}

}  // namespace

Json rational_to_json(const Rational& r) {
    return Json{{"num", int_to_json(numerator(r))}, {"den", int_to_json(denominator(r))}};
}

Rational rational_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    Int num = int_from_json(require(j, "num", field), field + ".num");
    Int den = int_from_json(require(j, "den", field), field + ".den");
    if (den == 0) throw InputError(field + ".den: must be nonzero");
    return Rational(num, den);
}

Json spectrum_to_json(const Spectrum& s) {
    Json j;
    j["n"] = s.n();
    if (s.is_exact()) {
        j["mode"] = "exact";
        Json mu = Json::array();
        for (int i = 0; i < s.n(); ++i) mu.push_back(rational_to_json(s.mu(i)));
        j["mu"] = mu;
    } else {
        j["mode"] = "symbolic";
        Json classes = Json::array();
        for (int c : s.classes()) classes.push_back(c + 1);
        j["classes"] = classes;
    }
    return j;
}

Spectrum spectrum_from_json(const Json& j) {
    long long n = small_int(require(j, "n", "manifold"), "manifold.n");
    const Json& mode = require(j, "mode", "manifold");
    if (!mode.is_string()) throw InputError("manifold.mode: expected \"exact\" or \"symbolic\"");
    if (mode == "exact") {
        const Json& mu = require(j, "mu", "manifold");
        if (!mu.is_array() || static_cast<long long>(mu.size()) != n)
            throw InputError("manifold.mu: expected an array of n rationals");
        std::vector<Rational> values;
        values.reserve(mu.size());
        for (size_t i = 0; i < mu.size(); ++i)
            values.push_back(rational_from_json(mu[i], "manifold.mu[" + std::to_string(i + 1) + "]"));
        return Spectrum::exact(std::move(values));
    }
    if (mode == "symbolic") {
        const Json& classes = require(j, "classes", "manifold");
        if (!classes.is_array() || static_cast<long long>(classes.size()) != n)
            throw InputError("manifold.classes: expected an array of n labels");
        std::vector<int> labels;
        labels.reserve(classes.size());
        for (size_t i = 0; i < classes.size(); ++i)
            labels.push_back(static_cast<int>(
                small_int(classes[i], "manifold.classes[" + std::to_string(i + 1) + "]")));
        return Spectrum::symbolic(std::move(labels));
    }
    throw InputError("manifold.mode: expected \"exact\" or \"symbolic\"");
}

Json character_to_json(const Character& c) {
    Json j;
    j["exponents"] = c.exponents;
    if (c.value) j["value"] = rational_to_json(*c.value);
    return j;
}

Character character_from_json(const Json& j, const Spectrum& s) {
    if (!j.is_object()) throw InputError("character: expected a JSON object");
    if (j.contains("exponents")) {
        const Json& e = j["exponents"];
        if (!e.is_array() || static_cast<int>(e.size()) != s.n())
            throw InputError("character.exponents: expected an array of n integers");
        std::vector<long long> m;
        m.reserve(e.size());
        for (size_t i = 0; i < e.size(); ++i)
            m.push_back(small_int(e[i], "character.exponents[" + std::to_string(i + 1) + "]"));
        return character_from_exponents(s, std::move(m));
    }
    if (j.contains("value"))
        return character_from_value(s, rational_from_json(j["value"], "character.value"));
    throw InputError("character: needs \"exponents\" or \"value\"");
}

Json kform_to_json(const KForm& w) {
    Json j;
    j["n"] = w.n();
    j["k"] = w.k();
    Json terms = Json::array();
    for (const auto& [idx, g] : w.terms()) {
        Json term;
        Json jidx = Json::array();
        for (int i : idx) jidx.push_back(i + 1);
        term["idx"] = jidx;
        Json poly = Json::array();
        for (const auto& [alpha, c] : g.terms()) {
            Json mono;
            mono["alpha"] = alpha;
            mono["re"] = rational_to_json(c.re);
            mono["im"] = rational_to_json(c.im);
            poly.push_back(mono);
        }
        term["poly"] = poly;
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

KForm kform_from_json(const Json& j) {
    int n = static_cast<int>(small_int(require(j, "n", "form"), "form.n"));
    int k = static_cast<int>(small_int(require(j, "k", "form"), "form.k"));
    if (n < 1) throw InputError("form.n: must be at least 1");
    if (k < 0 || k > n) throw InputError("form.k: must satisfy 0 <= k <= n");
    KForm w(n, k);
    const Json& terms = require(j, "terms", "form");
    if (!terms.is_array()) throw InputError("form.terms: expected an array");
    for (size_t t = 0; t < terms.size(); ++t) {
        std::string ctx = "form.terms[" + std::to_string(t + 1) + "]";
        const Json& jidx = require(terms[t], "idx", ctx);
        if (!jidx.is_array() || static_cast<int>(jidx.size()) != k)
            throw InputError(ctx + ".idx: expected an array of k indices");
        IdxTuple idx;
        for (size_t u = 0; u < jidx.size(); ++u) {
            long long i = small_int(jidx[u], ctx + ".idx[" + std::to_string(u + 1) + "]");
            if (i < 1 || i > n) throw InputError(ctx + ".idx: index out of range 1..n");
            idx.push_back(static_cast<int>(i - 1));
        }
        const Json& jpoly = require(terms[t], "poly", ctx);
        if (!jpoly.is_array()) throw InputError(ctx + ".poly: expected an array of monomials");
        Poly g(n);
        for (size_t u = 0; u < jpoly.size(); ++u) {
            std::string mctx = ctx + ".poly[" + std::to_string(u + 1) + "]";
            const Json& jalpha = require(jpoly[u], "alpha", mctx);
            if (!jalpha.is_array() || static_cast<int>(jalpha.size()) != n)
                throw InputError(mctx + ".alpha: expected an array of n exponents");
            Exponents alpha;
            for (size_t v = 0; v < jalpha.size(); ++v) {
                long long e = small_int(jalpha[v], mctx + ".alpha[" + std::to_string(v + 1) + "]");
                if (e < 0) throw InputError(mctx + ".alpha: exponents must be nonnegative");
                alpha.push_back(static_cast<int>(e));
            }
            GaussRat c(rational_from_json(require(jpoly[u], "re", mctx), mctx + ".re"),
                       rational_from_json(require(jpoly[u], "im", mctx), mctx + ".im"));
            g.add_term(alpha, c);
        }
        w.add_term(idx, g);
    }
    return w;
}

Json lattice_to_json(const RelationLattice& lattice) {
    Json j;
    j["n"] = lattice.n;
    j["rank"] = lattice.rank();
    Json basis = Json::array();
    for (const auto& row : lattice.basis) {
        Json jrow = Json::array();
        for (const auto& v : row) jrow.push_back(int_to_json(v));
        basis.push_back(jrow);
    }
    j["basis"] = basis;
    return j;
}

Json hopf_class_to_json(const HopfClass& c) {
    Json j;
    j["class"] = c.name();
    if (c.is(HopfClass::Tag::WeakNoResonance)) {
        j["r"] = c.block_size;
        Json perm = Json::array();
        for (int i : c.perm) perm.push_back(i + 1);
        j["perm"] = perm;
    }
    return j;
}

Json basis_to_json(const SectionBasis& basis) {
    Json j;
    j["dim"] = basis.dim();
    Json sols = Json::array();
    for (const auto& sol : basis.solutions) {
        Json s;
        Json idx = Json::array();
        for (int i : sol.idx) idx.push_back(i + 1);
        s["idx"] = idx;
        s["alpha"] = sol.alpha;
        sols.push_back(s);
    }
    j["solutions"] = sols;
    j["flags"] = basis.flags;
    return j;
}

Json parametric_to_json(const ParametricSection& sec) {
    Json j;
    j["free_symbols"] = sec.free_symbols();
    Json terms = Json::array();
    for (size_t u = 0; u < sec.solutions.size(); ++u) {
        Json t;
        t["symbol"] = "c" + std::to_string(u + 1);
        Json idx = Json::array();
        for (int i : sec.solutions[u].idx) idx.push_back(i + 1);
        t["idx"] = idx;
        t["alpha"] = sec.solutions[u].alpha;
        terms.push_back(t);
    }
    j["terms"] = terms;
    j["text"] = sec.str();
    return j;
}

Json report_to_json(const PfaffReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    if (rep.character)
        j["character"] = character_to_json(*rep.character);
    else
        j["character"] = nullptr;
    j["equivariant"] = rep.equivariant;
    Json sing;
    sing["exact"] = rep.singular.exact;
    sing["samples"] = rep.singular.samples;
    Json strata = Json::array();
    for (const auto& s : rep.singular.strata) {
        Json st;
        Json zero = Json::array();
        for (int i : s.zero_set) zero.push_back(i + 1);
        st["zero_set"] = zero;
        st["codim"] = s.codim();
        strata.push_back(st);
    }
    sing["strata"] = strata;
    if (auto c = rep.singular.codim())
        sing["codim"] = *c;
    else
        sing["codim"] = nullptr;
    j["singular"] = sing;
    j["regular"] = rep.regular;
    j["decomposable"] = rep.decomposable;
    switch (rep.integrable) {
        case Integrability::Integrable: j["integrable"] = true; break;
        case Integrability::NonIntegrable: j["integrable"] = false; break;
        case Integrability::NotApplicable: j["integrable"] = "not applicable"; break;
    }
    if (rep.compact_leaf)
        j["compact_leaf"] = *rep.compact_leaf;
    else
        j["compact_leaf"] = nullptr;
    j["notes"] = rep.notes;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace hopfpfaff
