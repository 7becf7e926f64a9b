#include "torusknot/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace torusknot {

namespace {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) throw std::invalid_argument("matrix must be square");
        for (Int x : m[i]) out[i].emplace_back(static_cast<long>(x));
    }
    return out;
}

}  // namespace

mpq_class determinant(const IntMatrix& m) {
    RatMatrix a = to_rational(m);
    std::size_t n = a.size();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

int signature(const IntMatrix& m) {
    RatMatrix a = to_rational(m);
    int sig = 0;
    while (!a.empty()) {
        std::size_t n = a.size();
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i)
            if (a[i][i] != 0) {
                k = i;
                break;
            }
        if (k == n) {
            // Zero diagonal: fold a nonzero off-diagonal entry onto it.
            bool found = false;
            for (std::size_t i = 0; i < n && !found; ++i)
                for (std::size_t j = 0; j < n && !found; ++j)
                    if (a[i][j] != 0) {
                        for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
                        for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
                        found = true;
                    }
            if (!found) break;  // remaining block is zero
            continue;
        }
        mpq_class piv = a[k][k];
        sig += piv > 0 ? 1 : -1;
        RatMatrix next;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            std::vector<mpq_class> row;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                row.push_back(a[i][j] - a[i][k] * a[k][j] / piv);
            }
            next.push_back(std::move(row));
        }
        a = std::move(next);
    }
    return sig;
}

RatVector solve(const IntMatrix& m, const std::vector<Int>& b) {
    RatMatrix a = to_rational(m);
    std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("dimension mismatch in solve");
    for (std::size_t i = 0; i < n; ++i) a[i].emplace_back(static_cast<long>(b[i]));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular linking matrix");
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

RatMatrix inverse(const IntMatrix& m) {
    RatMatrix a = to_rational(m);
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        a[i].resize(2 * n);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular linking matrix");
        std::swap(a[piv], a[c]);
        mpq_class lead = a[c][c];
        for (std::size_t k = c; k < 2 * n; ++k) a[c][k] /= lead;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (std::size_t k = c; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    RatMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(a[i].begin() + static_cast<long>(n), a[i].end());
    return out;
}

RatVector multiply(const RatMatrix& m, const std::vector<Int>& v) {
    RatVector out;
    for (const auto& row : m) {
        if (row.size() != v.size()) throw std::invalid_argument("dimension mismatch in multiply");
        out.push_back(dot(v, row));
    }
    return out;
}

mpq_class dot(const std::vector<Int>& a, const RatVector& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += mpq_class(static_cast<long>(a[i])) * b[i];
    return s;
}

}  // namespace torusknot
