#include "sodlat/poly.hpp"

#include <sstream>

namespace sod {

ipoly ipoly::t_pow_minus_one(long long n) {
    ivec v(static_cast<size_t>(n) + 1, Int(0));
    v[0] = -1;
    v[static_cast<size_t>(n)] = 1;
    return ipoly(std::move(v));
}

Int ipoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ipoly operator+(const ipoly& a, const ipoly& b) {
    ivec v(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
    return ipoly(std::move(v));
}

ipoly operator-(const ipoly& a, const ipoly& b) {
    ivec v(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) v[i] -= b.c[i];
    return ipoly(std::move(v));
}

ipoly operator*(const ipoly& a, const ipoly& b) {
    if (a.is_zero() || b.is_zero()) return ipoly();
    ivec v(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    return ipoly(std::move(v));
}

std::optional<ipoly> divide_exact(const ipoly& a, const ipoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return ipoly();
    if (a.degree() < b.degree()) return std::nullopt;
    ivec rem = a.c;
    ivec quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
    for (long long d = a.degree(); d >= b.degree();) {
        Int lead = rem[static_cast<size_t>(d)];
        if (lead != 0) {
            if (lead % b.leading() != 0) return std::nullopt;
            Int q = lead / b.leading();
            quot[static_cast<size_t>(d - b.degree())] = q;
            for (long long i = 0; i <= b.degree(); ++i)
                rem[static_cast<size_t>(d - b.degree() + i)] -= q * b.c[static_cast<size_t>(i)];
        }
        --d;
    }
    for (const Int& r : rem)
        if (r != 0) return std::nullopt;
    return ipoly(std::move(quot));
}

ipoly cyclotomic(long long k) {
    if (k < 1) throw usage_error("cyclotomic index must be positive");
    ipoly p = ipoly::t_pow_minus_one(k);
    for (long long d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        auto q = divide_exact(p, cyclotomic(d));
        if (!q) throw internal_error("cyclotomic division failed");
        p = *q;
    }
    return p;
}

bool is_cyclotomic_product(const ipoly& p) {
    if (!p.monic()) return false;
    ipoly rem = p;
    while (rem.degree() > 0) {
        bool found = false;
        long long deg = rem.degree();
        /* phi(k) >= sqrt(k/2), so phi(k) <= deg forces k <= 2*deg^2 */
        for (long long k = 1; k <= 2 * deg * deg + 2 && !found; ++k) {
            if (totient(k) > deg) continue;
            auto q = divide_exact(rem, cyclotomic(k));
            if (q) {
                rem = *q;
                found = true;
            }
        }
        if (!found) return false;
    }
    return rem.monic();
}

namespace {
long long descartes_sign_changes(const ivec& c) {
    long long changes = 0;
    int last = 0;
    for (const Int& a : c) {
        int s = sign(a);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}
}  // namespace

long long positive_real_roots(const ipoly& p) { return descartes_sign_changes(p.c); }

long long negative_real_roots(const ipoly& p) {
    ivec v = p.c;
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return descartes_sign_changes(v);
}

std::string ipoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long long d = degree(); d >= 0; --d) {
        const Int& a = c[static_cast<size_t>(d)];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (mag != 1 || d == 0) out << mag.str();
        if (d >= 1) {
            out << var;
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

}  // namespace sod
