#include "dgram/determinant.hpp"

#include <algorithm>
#include <thread>

#include "dgram/gram.hpp"

namespace dgram {

mpz_class det_bareiss(Matrix<mpz_class> M) {
    if (!M.square()) throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(M(k, j), M(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                M(i, j) = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

mpq_class det_rational(Matrix<mpq_class> M) {
    if (!M.square()) throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && M(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(M(k, j), M(p, j));
            det = -det;
        }
        det *= M(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (M(i, k) == 0) continue;
            mpq_class f = M(i, k) / M(k, k);
            for (std::size_t j = k; j < n; ++j) M(i, j) -= f * M(k, j);
        }
    }
    return det;
}

long det_degree_bound(const Matrix<Poly>& M) {
    const std::size_t n = M.rows();
    long rows = 0, cols = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int r = -1, c = -1;
        for (std::size_t j = 0; j < n; ++j) {
            r = std::max(r, M(i, j).degree());
            c = std::max(c, M(j, i).degree());
        }
        if (r < 0 || c < 0) return -1;
        rows += r;
        cols += c;
    }
    return std::min(rows, cols);
}

namespace {

bool all_integral(const Matrix<Poly>& M) {
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!M(i, j).is_integral()) return false;
    return true;
}

// Newton form through (0, y0), (1, y1), ... expanded to ascending coefficients.
Poly interpolate(const std::vector<mpq_class>& ys) {
    const std::size_t m = ys.size();
    std::vector<mpq_class> dd = ys;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / mpq_class(static_cast<long>(level));
    Poly p;
    for (std::size_t i = m; i-- > 0;) p = p * Poly::linear_root(static_cast<long>(i)) + Poly(dd[i]);
    return p;
}

}  // namespace

Poly det_direct(const Matrix<Poly>& M) {
    if (!M.square()) throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return Poly(1L);
    long bound = det_degree_bound(M);
    if (bound < 0) return {};
    const std::size_t points = static_cast<std::size_t>(bound) + 1;
    const bool integral = all_integral(M);
    std::vector<mpq_class> values(points);
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t t = start; t < points; t += stride) {
            if (integral) {
                Matrix<mpz_class> A(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) A(i, j) = M(i, j).eval_integral(static_cast<long>(t));
                values[t] = det_bareiss(std::move(A));
            } else {
                Matrix<mpq_class> A(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) A(i, j) = M(i, j).eval(static_cast<long>(t));
                values[t] = det_rational(std::move(A));
            }
        }
    };
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(1, points * n * n / 4096));
    if (workers <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
        for (auto& th : pool) th.join();
    }
    return interpolate(values);
}

Poly DetResult::expand() const {
    Poly p(1L);
    for (const auto& f : factors) p *= f.factor.pow(f.multiplicity);
    return p;
}

std::vector<DetFactor> factor_structured(const Poly& p, std::size_t max_c, const std::string& origin) {
    std::vector<DetFactor> out;
    if (p.is_zero()) {
        out.push_back({p, 1, origin});
        return out;
    }
    Poly rest = p;
    auto strip = [&](const Poly& f) {
        std::size_t mult = 0;
        while (rest.degree() >= f.degree()) {
            Poly q, r;
            rest.divmod(f, q, r);
            if (!r.is_zero()) break;
            rest = q;
            ++mult;
        }
        if (mult) out.push_back({f, mult, origin});
    };
    for (std::size_t c = 1; c <= max_c && rest.degree() >= 2; ++c)
        strip(Poly(std::vector<mpq_class>{-2 * static_cast<long>(c), -1, 1}));
    for (std::size_t c = 0; c <= max_c && rest.degree() >= 1; ++c) strip(Poly::linear_root(static_cast<long>(c)));
    if (rest != Poly(1L)) out.push_back({rest, 1, origin});
    return out;
}

DetResult det_blocks(const BlockDecomposition& decomp) {
    DetResult res;
    res.poly = Poly(1L);
    const std::size_t max_c = 2 * decomp.k + 2;
    for (const auto& blk : decomp.blocks) {
        const auto& R = blk.reduced;
        const std::size_t m = R.rows();
        UnionFind uf(m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (!R(a, b).is_zero()) uf.unite(a, b);
        std::vector<std::vector<std::size_t>> comps;
        std::vector<std::size_t> slot(m, m);
        for (std::size_t a = 0; a < m; ++a) {
            auto r = uf.find(a);
            if (slot[r] == m) {
                slot[r] = comps.size();
                comps.emplace_back();
            }
            comps[slot[r]].push_back(a);
        }
        for (const auto& comp : comps) {
            Poly d = comp.size() == 1 ? R(comp[0], comp[0]) : det_direct(R.sub(comp));
            res.poly *= d;
            for (auto& f : factor_structured(d, max_c, blk.label)) {
                auto it = std::find_if(res.factors.begin(), res.factors.end(), [&](const DetFactor& g) {
                    return g.factor == f.factor && g.origin == f.origin;
                });
                if (it == res.factors.end()) res.factors.push_back(std::move(f));
                else it->multiplicity += f.multiplicity;
            }
        }
    }
    return res;
}

}  // namespace dgram
