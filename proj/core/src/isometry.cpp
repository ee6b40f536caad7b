#include "sodlat/isometry.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace sod {

namespace {

/* entry order 0, 1, -1, 2, -2, ... favors small magnitudes */
std::vector<long long> entry_order(long long bound) {
    std::vector<long long> order{0};
    for (long long v = 1; v <= bound; ++v) {
        order.push_back(v);
        order.push_back(-v);
    }
    return order;
}

template <typename T>
struct candidate {
    std::vector<T> v;
    std::vector<T> av;   // A * v
    std::vector<T> atv;  // A^T * v
};

template <typename T>
T vdot(const std::vector<T>& x, const std::vector<T>& y) {
    T s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

/* Enumerate all vectors with entries in the magnitude order whose
 * self-pairing under A equals target; enumeration order is lexicographic
 * in that entry order, which makes the overall search deterministic. */
template <typename T>
void enumerate_candidates(const std::vector<std::vector<T>>& a, const T& target,
                          const std::vector<long long>& order,
                          std::vector<candidate<T>>& out) {
    long long n = static_cast<long long>(a.size());
    std::vector<T> v(static_cast<size_t>(n), T(0));
    auto rec = [&](auto&& self, long long pos) -> void {
        if (pos == n) {
            candidate<T> c;
            c.v = v;
            c.av.assign(static_cast<size_t>(n), T(0));
            c.atv.assign(static_cast<size_t>(n), T(0));
            for (long long i = 0; i < n; ++i)
                for (long long j = 0; j < n; ++j) {
                    c.av[static_cast<size_t>(i)] += a[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
                    c.atv[static_cast<size_t>(i)] += a[static_cast<size_t>(j)][static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
                }
            if (vdot(v, c.av) == target) out.push_back(std::move(c));
            return;
        }
        for (long long e : order) {
            v[static_cast<size_t>(pos)] = T(e);
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

template <typename T>
std::optional<imat> search_impl(const imat& a1, const imat& a2, long long bound) {
    long long n = a1.nrows;
    std::vector<std::vector<T>> a(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n)));
    std::vector<std::vector<T>> b = a;
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<T>(a1(i, j));
            b[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<T>(a2(i, j));
        }
    auto order = entry_order(bound);

    /* one candidate list per column, filtered by the diagonal constraint */
    std::vector<std::vector<candidate<T>>> cands(static_cast<size_t>(n));
    for (long long j = 0; j < n; ++j) {
        enumerate_candidates<T>(a, b[static_cast<size_t>(j)][static_cast<size_t>(j)], order, cands[static_cast<size_t>(j)]);
        if (cands[static_cast<size_t>(j)].empty()) return std::nullopt;
    }

    std::vector<const candidate<T>*> chosen(static_cast<size_t>(n), nullptr);
    std::optional<imat> result;
    auto dfs = [&](auto&& self, long long col) -> bool {
        if (col == n) {
            imat p(n, n);
            for (long long j = 0; j < n; ++j)
                for (long long i = 0; i < n; ++i)
                    p(i, j) = Int(chosen[static_cast<size_t>(j)]->v[static_cast<size_t>(i)]);
            Int d = det(p);
            if (d != 1 && d != -1) return false;
            result = p;
            return true;
        }
        for (const candidate<T>& c : cands[static_cast<size_t>(col)]) {
            bool ok = true;
            for (long long i = 0; i < col && ok; ++i) {
                const candidate<T>& pi = *chosen[static_cast<size_t>(i)];
                ok = vdot(pi.atv, c.v) == b[static_cast<size_t>(i)][static_cast<size_t>(col)] &&
                     vdot(pi.av, c.v) == b[static_cast<size_t>(col)][static_cast<size_t>(i)];
            }
            if (!ok) continue;
            chosen[static_cast<size_t>(col)] = &c;
            if (self(self, col + 1)) return true;
        }
        return false;
    };
    dfs(dfs, 0);
    return result;
}

Int max_abs_entry(const imat& m) {
    Int best = 0;
    for (const Int& x : m.a) best = std::max(best, abs(x));
    return best;
}

}  // namespace

isometry_result isometry_search(const euler_lattice& l1, const euler_lattice& l2,
                                long long bound) {
    if (bound < 1) throw usage_error("isometry search bound must be positive");
    isometry_result res;
    res.bound = bound;

    if (l1.rank() != l2.rank()) {
        res.kind = isometry_kind::refuted_by_invariant;
        res.invariant = "rank";
        return res;
    }
    if (l1.determinant != l2.determinant) {
        res.kind = isometry_kind::refuted_by_invariant;
        res.invariant = "det";
        return res;
    }
    if (smith_normal_form(l1.gram) != smith_normal_form(l2.gram)) {
        res.kind = isometry_kind::refuted_by_invariant;
        res.invariant = "smith_normal_form";
        return res;
    }
    if (l1.unimodular() && l2.unimodular()) {
        if (!(serre_analysis(l1).characteristic_polynomial ==
              serre_analysis(l2).characteristic_polynomial)) {
            res.kind = isometry_kind::refuted_by_invariant;
            res.invariant = "serre_char_poly";
            return res;
        }
    }
    imat s1 = l1.gram + l1.gram.transposed();
    imat s2 = l2.gram + l2.gram.transposed();
    if (smith_normal_form(s1) != smith_normal_form(s2)) {
        res.kind = isometry_kind::refuted_by_invariant;
        res.invariant = "symmetrized_smith_normal_form";
        return res;
    }
    if (!(symmetric_signature(s1) == symmetric_signature(s2))) {
        res.kind = isometry_kind::refuted_by_invariant;
        res.invariant = "symmetrized_signature";
        return res;
    }

    /* int64 is safe when n * (bound * max|A|) * bound has plenty of slack */
    std::optional<imat> p;
    Int worst = Int(l1.rank()) * bound * bound * std::max(max_abs_entry(l1.gram), Int(1));
    if (worst < Int(INT64_MAX / 4))
        p = search_impl<long long>(l1.gram, l2.gram, bound);
    else
        p = search_impl<Int>(l1.gram, l2.gram, bound);

    if (p) {
        if (!(p->transposed() * l1.gram * *p == l2.gram))
            throw internal_error("isometry candidate failed exact verification");
        res.kind = isometry_kind::found;
        res.transform = *p;
        return res;
    }
    res.kind = isometry_kind::not_found_up_to_bound;
    return res;
}

}  // namespace sod
