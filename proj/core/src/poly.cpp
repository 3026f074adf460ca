#include "dgram/poly.hpp"

#include "dgram/error.hpp"

namespace dgram {

Poly::Poly(long c) {
    if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const mpz_class& c) {
    if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const mpq_class& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpq_class> ascending) : c_(std::move(ascending)) {
    for (auto& v : c_) v.canonicalize();
    trim();
}

Poly Poly::monomial(std::size_t degree, const mpq_class& coeff) {
    std::vector<mpq_class> c(degree + 1, mpq_class(0));
    c[degree] = coeff;
    return Poly(std::move(c));
}

Poly Poly::linear_root(const mpq_class& c) { return Poly(std::vector<mpq_class>{-c, 1}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_integral() const {
    for (const auto& v : c_)
        if (v.get_den() != 1) return false;
    return true;
}

mpq_class Poly::eval(const mpq_class& q) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

mpz_class Poly::eval_integral(const mpz_class& z) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (it->get_den() != 1) throw ValidationError("eval_integral: non-integral coefficient");
        acc = acc * z + it->get_num();
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const mpq_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& v : p.c_) v = -v;
    return p;
}

Poly Poly::pow(std::size_t e) const {
    Poly result(1L), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

void Poly::divmod(const Poly& divisor, Poly& quot, Poly& rem) const {
    if (divisor.is_zero()) throw ValidationError("polynomial division by zero");
    std::vector<mpq_class> r = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    std::vector<mpq_class> q;
    if (r.size() > dd) {
        q.assign(r.size() - dd, mpq_class(0));
        for (std::size_t i = r.size(); i-- > dd;) {
            mpq_class f = r[i] / divisor.c_.back();
            q[i - dd] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] -= f * divisor.c_[j];
        }
    }
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpq_class& c = c_[i];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        if (c < 0) s += '-';
        else if (!s.empty()) s += '+';
        if (i == 0) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1) s += mag.get_str() + "*";
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

std::vector<std::string> Poly::to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.get_str());
    return out;
}

Poly Poly::from_strings(const std::vector<std::string>& ascending) {
    std::vector<mpq_class> c;
    c.reserve(ascending.size());
    for (const auto& s : ascending) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw ValidationError("bad rational coefficient: " + s);
        if (v.get_den() == 0) throw ValidationError("zero denominator: " + s);
        v.canonicalize();
        c.push_back(v);
    }
    return Poly(std::move(c));
}

Poly phi_z2(long s1, long s2, long r1, long r2) {
    if (r1 < 0 || r2 < 0) return {};
    Poly p(1L);
    for (long j = 0; j < r1; ++j) p *= Poly(std::vector<mpq_class>{-2 * (s1 + j), -1, 1});
    for (long l = 0; l < r2; ++l) p *= Poly::linear_root(s2 + l);
    return p;
}

Poly phi_partition(long s, long r) {
    if (r < 0) return {};
    Poly p(1L);
    for (long l = 0; l < r; ++l) p *= Poly::linear_root(s + l);
    return p;
}

}  // namespace dgram
