#include "dgram/semisimple.hpp"

#include <cctype>

#include "dgram/error.hpp"
#include "dgram/reduction.hpp"

namespace dgram {

namespace {

const char* kCaveat =
    "semisimple with respect to the implemented factors: only the Gram matrices of the "
    "symmetric cell modules are included, so a 'semisimple' answer is not a proof";

}  // namespace

GlobalPoly global_poly(Algebra alg, std::size_t k, std::size_t guard) {
    GlobalPoly f;
    f.algebra = alg;
    f.k = k;
    f.poly = Poly(1L);
    auto pairs = admissible_pairs(alg, k);
    if (pairs.empty()) throw ValidationError("no admissible through-class counts for k=" + std::to_string(k));
    // Every cell is built, so the guard applies to the total dimension.
    std::size_t total = 0;
    for (auto [s1, s2] : pairs) total += count_J(alg, k, s1, s2);
    if (total > guard)
        throw GuardExceeded("the Gram matrices for k=" + std::to_string(k) + " have total dimension " +
                                std::to_string(total) + " > guard " + std::to_string(guard) + " (raise it with --guard)",
                            total);
    for (auto [s1, s2] : pairs) {
        JSet J = enumerate_J(alg, k, s1, s2);
        GramMatrix G = build_gram(J);
        auto decomp = reduce(G, J, coarsening_poset(J));
        PairDet part{s1, s2, J.size(), det_blocks(decomp)};
        f.poly *= part.det.poly;
        f.parts.push_back(std::move(part));
    }
    return f;
}

Verdict verdict(const GlobalPoly& f, const std::optional<mpq_class>& q) {
    Verdict v;
    v.algebra = f.algebra;
    v.k = f.k;
    v.q = q;
    v.caveat = kCaveat;
    if (!q) {
        v.semisimple = !f.poly.is_zero();
        return v;
    }
    for (const auto& part : f.parts) {
        for (const auto& fac : part.det.factors) {
            if (fac.factor.eval(*q) != 0) continue;
            Witness w{part.s1, part.s2, fac.factor, fac.origin, {}};
            w.description = fac.factor.str() + " vanishes at q=" + q->get_str() + " in block " + fac.origin +
                            " of (s1,s2)=(" + std::to_string(part.s1) + "," + std::to_string(part.s2) + ")";
            v.witnesses.push_back(std::move(w));
        }
    }
    v.semisimple = v.witnesses.empty();
    return v;
}

Verdict verdict(Algebra alg, std::size_t k, const std::optional<mpq_class>& q, std::size_t guard) {
    return verdict(global_poly(alg, k, guard), q);
}

bool semisimple_by_evaluation(const GlobalPoly& f, const std::optional<mpq_class>& q) {
    if (!q) return !f.poly.is_zero();
    return f.poly.eval(*q) != 0;
}

std::optional<mpq_class> parse_parameter(const std::string& text) {
    if (text == "x") return std::nullopt;
    auto bad = [&]() { return ValidationError("q must be an exact rational like 2, -3 or 5/2 (got '" + text + "')"); };
    std::size_t slash = text.find('/');
    auto integer = [&](const std::string& s, bool allow_sign) {
        if (s.empty()) throw bad();
        std::size_t start = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size()) throw bad();
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
        return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
    };
    if (slash == std::string::npos) return mpq_class(integer(text, true));
    mpz_class num = integer(text.substr(0, slash), true);
    mpz_class den = integer(text.substr(slash + 1), false);
    if (den == 0) throw ValidationError("q has a zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace dgram
