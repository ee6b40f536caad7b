#include "sodlat/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace sod {

imat::imat(std::initializer_list<std::initializer_list<Int>> rows) {
    nrows = static_cast<long long>(rows.size());
    ncols = nrows ? static_cast<long long>(rows.begin()->size()) : 0;
    a.reserve(static_cast<size_t>(nrows * ncols));
    for (const auto& r : rows) {
        if (static_cast<long long>(r.size()) != ncols)
            throw usage_error("ragged matrix initializer");
        a.insert(a.end(), r.begin(), r.end());
    }
}

imat imat::identity(long long n) {
    imat m(n, n);
    for (long long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

imat imat::row_vector(const ivec& v) {
    imat m(1, static_cast<long long>(v.size()));
    m.a = v;
    return m;
}

imat imat::column_vector(const ivec& v) {
    imat m(static_cast<long long>(v.size()), 1);
    m.a = v;
    return m;
}

bool imat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

imat imat::transposed() const {
    imat t(ncols, nrows);
    for (long long i = 0; i < nrows; ++i)
        for (long long j = 0; j < ncols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ivec imat::row(long long i) const {
    ivec v(static_cast<size_t>(ncols));
    for (long long j = 0; j < ncols; ++j) v[static_cast<size_t>(j)] = (*this)(i, j);
    return v;
}

ivec imat::col(long long j) const {
    ivec v(static_cast<size_t>(nrows));
    for (long long i = 0; i < nrows; ++i) v[static_cast<size_t>(i)] = (*this)(i, j);
    return v;
}

imat operator*(const imat& x, const imat& y) {
    if (x.ncols != y.nrows) throw usage_error("matrix product shape mismatch");
    imat z(x.nrows, y.ncols);
    for (long long i = 0; i < x.nrows; ++i)
        for (long long k = 0; k < x.ncols; ++k) {
            const Int& xik = x(i, k);
            if (xik == 0) continue;
            for (long long j = 0; j < y.ncols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

imat operator+(const imat& x, const imat& y) {
    if (x.nrows != y.nrows || x.ncols != y.ncols) throw usage_error("matrix sum shape mismatch");
    imat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

imat operator-(const imat& x, const imat& y) {
    if (x.nrows != y.nrows || x.ncols != y.ncols) throw usage_error("matrix sum shape mismatch");
    imat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

ivec operator*(const imat& m, const ivec& v) {
    if (m.ncols != static_cast<long long>(v.size()))
        throw usage_error("matrix-vector shape mismatch");
    ivec out(static_cast<size_t>(m.nrows), Int(0));
    for (long long i = 0; i < m.nrows; ++i)
        for (long long j = 0; j < m.ncols; ++j) out[static_cast<size_t>(i)] += m(i, j) * v[static_cast<size_t>(j)];
    return out;
}

Int dot(const ivec& x, const ivec& y) {
    if (x.size() != y.size()) throw usage_error("dot product shape mismatch");
    Int s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

bool is_zero(const ivec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int det(const imat& m) {
    if (!m.square()) throw usage_error("determinant of non-square matrix");
    long long n = m.nrows;
    if (n == 0) return 1;
    imat w = m;
    Int prev = 1;
    int sgn = 1;
    for (long long k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            long long p = -1;
            for (long long i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (long long j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
            sgn = -sgn;
        }
        for (long long i = k + 1; i < n; ++i) {
            for (long long j = k + 1; j < n; ++j) {
                Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                w(i, j) = t / prev;  // exact (Bareiss)
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sgn > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

long long rank(const imat& m) {
    imat w = m;
    long long r = 0;
    long long rows = w.nrows, cols = w.ncols;
    for (long long c = 0; c < cols && r < rows; ++c) {
        long long p = -1;
        for (long long i = r; i < rows; ++i)
            if (w(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (long long j = 0; j < cols; ++j) std::swap(w(r, j), w(p, j));
        for (long long i = r + 1; i < rows; ++i) {
            if (w(i, c) == 0) continue;
            Int pi = w(r, c), vi = w(i, c);
            for (long long j = c; j < cols; ++j) w(i, j) = w(i, j) * pi - w(r, j) * vi;
        }
        ++r;
    }
    return r;
}

ipoly char_poly(const imat& m) {
    if (!m.square()) throw usage_error("characteristic polynomial of non-square matrix");
    long long n = m.nrows;
    ivec coeffs(static_cast<size_t>(n) + 1, Int(0));
    coeffs[static_cast<size_t>(n)] = 1;
    imat mk = m;
    for (long long k = 1; k <= n; ++k) {
        Int tr = 0;
        for (long long i = 0; i < n; ++i) tr += mk(i, i);
        Int ck = -tr / k;  // exact by Faddeev-LeVerrier
        if (tr % k != 0) throw internal_error("char_poly non-exact division");
        coeffs[static_cast<size_t>(n - k)] = ck;
        if (k < n) {
            for (long long i = 0; i < n; ++i) mk(i, i) += ck;
            mk = m * mk;
        }
    }
    return ipoly(std::move(coeffs));
}

imat inverse_unimodular(const imat& m) {
    if (!m.square()) throw usage_error("inverse of non-square matrix");
    Int d = det(m);
    if (d != 1 && d != -1) throw non_unimodular_error("matrix determinant is not +-1");
    long long n = m.nrows;
    imat inv(n, n);
    /* adjugate via cofactors; fine at these sizes */
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            imat minor(n - 1, n - 1);
            for (long long r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (long long c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv(j, i) = cof * d;  // adj/det with det = +-1
        }
    return inv;
}

namespace {

/* Column HNF-style elimination of m, applying identical column operations
 * to u (initially the identity). After the call, zero columns of m
 * correspond to kernel basis vectors in u. */
void column_echelon_with_transform(imat& m, imat& u) {
    long long rows = m.nrows, cols = m.ncols;
    long long lead = 0;
    for (long long r = 0; r < rows && lead < cols; ++r) {
        /* gcd-eliminate row r across columns lead..cols-1 */
        while (true) {
            long long p = -1;
            Int best = 0;
            for (long long j = lead; j < cols; ++j) {
                if (m(r, j) == 0) continue;
                if (p < 0 || abs(m(r, j)) < best) {
                    p = j;
                    best = abs(m(r, j));
                }
            }
            if (p < 0) break;  // row r already zero on the tail
            if (p != lead) {
                for (long long i = 0; i < rows; ++i) std::swap(m(i, p), m(i, lead));
                for (long long i = 0; i < u.nrows; ++i) std::swap(u(i, p), u(i, lead));
            }
            bool done = true;
            for (long long j = lead + 1; j < cols; ++j) {
                if (m(r, j) == 0) continue;
                Int q = m(r, j) / m(r, lead);
                for (long long i = 0; i < rows; ++i) m(i, j) -= q * m(i, lead);
                for (long long i = 0; i < u.nrows; ++i) u(i, j) -= q * u(i, lead);
                if (m(r, j) != 0) done = false;
            }
            if (done) break;
        }
        if (m(r, lead) != 0) {
            if (m(r, lead) < 0) {
                for (long long i = 0; i < rows; ++i) m(i, lead) = -m(i, lead);
                for (long long i = 0; i < u.nrows; ++i) u(i, lead) = -u(i, lead);
            }
            /* reduce earlier columns against this pivot */
            for (long long j = 0; j < lead; ++j) {
                if (m(r, j) == 0) continue;
                Int q = m(r, j) / m(r, lead);
                if (m(r, j) % m(r, lead) != 0 && (m(r, j) < 0) != (m(r, lead) < 0)) q -= 1;
                for (long long i = 0; i < rows; ++i) m(i, j) -= q * m(i, lead);
                for (long long i = 0; i < u.nrows; ++i) u(i, j) -= q * u(i, lead);
            }
            ++lead;
        }
    }
}

}  // namespace

imat integer_kernel(const imat& m) {
    imat w = m;
    imat u = imat::identity(m.ncols);
    column_echelon_with_transform(w, u);
    std::vector<long long> kernel_cols;
    for (long long j = 0; j < w.ncols; ++j) {
        bool zero = true;
        for (long long i = 0; i < w.nrows && zero; ++i) zero = (w(i, j) == 0);
        if (zero) kernel_cols.push_back(j);
    }
    imat k(m.ncols, static_cast<long long>(kernel_cols.size()));
    for (long long idx = 0; idx < k.ncols; ++idx)
        for (long long i = 0; i < m.ncols; ++i) k(i, idx) = u(i, kernel_cols[static_cast<size_t>(idx)]);
    /* canonicalize the basis of the kernel lattice (ties broken by HNF) */
    imat uk = imat::identity(k.ncols);
    column_echelon_with_transform(k, uk);
    return k;
}

ivec smith_normal_form(const imat& m) {
    imat w = m;
    long long n = std::min(w.nrows, w.ncols);
    ivec d;
    long long t = 0;
    while (t < n) {
        /* find a nonzero pivot in the remaining block */
        long long pi = -1, pj = -1;
        Int best = 0;
        for (long long i = t; i < w.nrows; ++i)
            for (long long j = t; j < w.ncols; ++j) {
                if (w(i, j) == 0) continue;
                if (pi < 0 || abs(w(i, j)) < best) {
                    pi = i;
                    pj = j;
                    best = abs(w(i, j));
                }
            }
        if (pi < 0) break;
        for (long long j = 0; j < w.ncols; ++j) std::swap(w(t, j), w(pi, j));
        for (long long i = 0; i < w.nrows; ++i) std::swap(w(i, t), w(i, pj));
        bool clean = true;
        for (long long i = t + 1; i < w.nrows; ++i) {
            if (w(i, t) == 0) continue;
            Int q = w(i, t) / w(t, t);
            for (long long j = t; j < w.ncols; ++j) w(i, j) -= q * w(t, j);
            if (w(i, t) != 0) clean = false;
        }
        for (long long j = t + 1; j < w.ncols; ++j) {
            if (w(t, j) == 0) continue;
            Int q = w(t, j) / w(t, t);
            for (long long i = t; i < w.nrows; ++i) w(i, j) -= q * w(i, t);
            if (w(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // pivot changed; repeat with smaller entries
        /* divisibility: fold in any entry not divisible by the pivot */
        bool fixed = false;
        for (long long i = t + 1; i < w.nrows && !fixed; ++i)
            for (long long j = t + 1; j < w.ncols && !fixed; ++j)
                if (w(i, j) % w(t, t) != 0) {
                    for (long long jj = t; jj < w.ncols; ++jj) w(t, jj) += w(i, jj);
                    fixed = true;
                }
        if (fixed) continue;
        d.push_back(abs(w(t, t)));
        ++t;
    }
    return d;
}

std::optional<ivec> solve_column_echelon(const imat& k, const ivec& b) {
    if (k.nrows != static_cast<long long>(b.size())) throw usage_error("solve shape mismatch");
    ivec rem = b;
    ivec x(static_cast<size_t>(k.ncols), Int(0));
    for (long long j = 0; j < k.ncols; ++j) {
        /* pivot row of column j: first nonzero entry */
        long long pr = -1;
        for (long long i = 0; i < k.nrows; ++i)
            if (k(i, j) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        Int num = rem[static_cast<size_t>(pr)];
        if (num % k(pr, j) != 0) return std::nullopt;  // x_j is forced by the pivot row
        Int q = num / k(pr, j);
        x[static_cast<size_t>(j)] = q;
        if (q != 0)
            for (long long i = 0; i < k.nrows; ++i) rem[static_cast<size_t>(i)] -= q * k(i, j);
    }
    if (!is_zero(rem)) return std::nullopt;
    return x;
}

signature_t symmetric_signature(const imat& m) {
    if (!m.square()) throw usage_error("signature of non-square matrix");
    if (!(m == m.transposed())) throw usage_error("signature of non-symmetric matrix");
    ipoly p = char_poly(m);
    signature_t s;
    long long zero = 0;
    ivec c = p.c;
    while (!c.empty() && c.front() == 0) {
        c.erase(c.begin());
        ++zero;
    }
    ipoly q{ivec(c)};
    s.zero = zero;
    s.positive = positive_real_roots(q);
    s.negative = negative_real_roots(q);
    return s;
}

std::string imat::to_string() const {
    std::ostringstream out;
    out << "[";
    for (long long i = 0; i < nrows; ++i) {
        out << (i ? ", [" : "[");
        for (long long j = 0; j < ncols; ++j) out << (j ? ", " : "") << (*this)(i, j).str();
        out << "]";
    }
    out << "]";
    return out.str();
}

}  // namespace sod
