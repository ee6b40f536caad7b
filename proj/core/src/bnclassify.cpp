#include "sodlat/bnclassify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sod {

Int bin_quad_form::content() const { return gcd(gcd(abs(p), abs(q)), abs(r)); }

Int bin_quad_form::eval(const Int& x, const Int& y) const {
    return p * x * x + q * x * y + r * y * y;
}

bin_quad_form bin_quad_form::substituted(const Int& a, const Int& b, const Int& c,
                                         const Int& d) const {
    /* (x, y) -> (a x + b y, c x + d y) */
    bin_quad_form out;
    out.p = eval(a, c);
    out.r = eval(b, d);
    out.q = 2 * p * a * b + q * (a * d + b * c) + 2 * r * c * d;
    return out;
}

std::string bin_quad_form::to_string() const {
    std::ostringstream s;
    s << "(" << p << ", " << q << ", " << r << ")";
    return s.str();
}

namespace {

struct triple {
    Int a, b, c;
    bool operator==(const triple&) const = default;
    bool operator<(const triple& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

/* canonical reduced representative of a positive definite form, proper
 * (SL2) equivalence */
triple reduce_positive_definite(triple f) {
    for (int guard = 0; guard < 100000; ++guard) {
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        if (f.b > f.a || f.b <= -f.a) {
            /* shift b into (-a, a] */
            Int two_a = 2 * f.a;
            Int b = f.a - (((f.a - f.b) % two_a + two_a) % two_a);
            Int d = f.b * f.b - 4 * f.a * f.c;
            f = {f.a, b, (b * b - d) / (4 * f.a)};
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
    throw internal_error("definite reduction did not terminate");
}

bool definite_equivalent(const bin_quad_form& f1, const bin_quad_form& f2) {
    int s1 = sign(f1.p), s2 = sign(f2.p);
    if (s1 != s2) return false;
    triple t1{s1 * f1.p, s1 * f1.q, s1 * f1.r};
    triple t2{s2 * f2.p, s2 * f2.q, s2 * f2.r};
    triple c2 = reduce_positive_definite(t2);
    return reduce_positive_definite(t1) == c2 ||
           reduce_positive_definite({t1.a, -t1.b, t1.c}) == c2;
}

/* --- indefinite, nonsquare discriminant: Gauss cycles --- */

bool indefinite_reduced(const triple& f, const Int& s /* floor(sqrt(D)) */) {
    if (f.b < 1 || f.b > s) return false;
    Int two_abs_a = 2 * abs(f.a);
    return two_abs_a >= s - f.b + 1 && two_abs_a <= s + f.b;
}

triple rho(const triple& f, const Int& d, const Int& s) {
    Int c = f.c;
    if (c == 0) throw internal_error("rho hit a zero outer coefficient");
    Int two_c = 2 * abs(c);
    /* b' = -b mod 2|c|, normalized into the reduction window */
    Int b = ((-f.b) % two_c + two_c) % two_c;
    if (abs(c) <= s) {
        /* largest representative < sqrt(D): in (s - 2|c|, s] */
        while (b > s) b -= two_c;
        while (b + two_c <= s) b += two_c;
    } else {
        /* |b'| minimal: in (-|c|, |c|] */
        while (b > abs(c)) b -= two_c;
    }
    return {c, b, (b * b - d) / (4 * c)};
}

triple reduce_indefinite(triple f, const Int& d, const Int& s) {
    for (int guard = 0; guard < 100000; ++guard) {
        if (indefinite_reduced(f, s)) return f;
        f = rho(f, d, s);
    }
    throw internal_error("indefinite reduction did not terminate");
}

bool in_cycle(const triple& start, const triple& probe, const Int& d, const Int& s) {
    triple f = start;
    for (int guard = 0; guard < 1000000; ++guard) {
        if (f == probe) return true;
        f = rho(f, d, s);
        if (f == start) return false;
    }
    throw internal_error("indefinite cycle did not close");
}

bool indefinite_nonsquare_equivalent(const bin_quad_form& f1, const bin_quad_form& f2) {
    Int d = f1.disc();
    Int s = isqrt(d);
    triple r1 = reduce_indefinite({f1.p, f1.q, f1.r}, d, s);
    triple r2 = reduce_indefinite({f2.p, f2.q, f2.r}, d, s);
    if (in_cycle(r1, r2, d, s)) return true;
    triple r2m = reduce_indefinite({f2.p, -f2.q, f2.r}, d, s);
    return in_cycle(r1, r2m, d, s);
}

/* --- square discriminant: isotropic line normalization --- */

void primitive(Int& x, Int& y) {
    Int g = gcd(abs(x), abs(y));
    if (g > 1) {
        x /= g;
        y /= g;
    }
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
}

/* extended gcd: returns (u, v) with u*x + v*y = gcd(x, y) */
std::pair<Int, Int> ext_gcd(const Int& x, const Int& y) {
    if (y == 0) return {x >= 0 ? Int(1) : Int(-1), Int(0)};
    auto [u, v] = ext_gcd(y, x % y);
    return {v, u - (x / y) * v};
}

std::set<Int> square_disc_invariants(const bin_quad_form& f, const Int& n) {
    std::vector<std::pair<Int, Int>> lines;
    if (f.p == 0) {
        lines.push_back({Int(1), Int(0)});
        Int x = -f.r, y = f.q;
        primitive(x, y);
        lines.push_back({x, y});
    } else {
        for (int s : {1, -1}) {
            Int x = -f.q + s * n, y = 2 * f.p;
            primitive(x, y);
            lines.push_back({x, y});
        }
    }
    std::set<Int> out;
    for (auto [x0, y0] : lines) {
        if (f.eval(x0, y0) != 0) throw internal_error("isotropic vector is not isotropic");
        auto [u, v] = ext_gcd(x0, y0);
        /* columns (x0, y0) and (-v, u) give det = 1 */
        bin_quad_form g = f.substituted(x0, -v, y0, u);
        if (g.p != 0 || abs(g.q) != n) throw internal_error("square-disc normalization failed");
        Int c = ((g.r % n) + n) % n;
        out.insert(c);
    }
    return out;
}

bool square_disc_equivalent(const bin_quad_form& f1, const bin_quad_form& f2) {
    Int n = isqrt(f1.disc());
    return square_disc_invariants(f1, n) == square_disc_invariants(f2, n);
}

/* --- degenerate: f = c * (primitive linear form)^2 --- */

Int degenerate_scalar(const bin_quad_form& f) {
    Int c = f.content();
    if (f.p < 0 || (f.p == 0 && f.r < 0)) c = -c;
    bin_quad_form g{f.p / c, f.q / c, f.r / c};
    /* sanity: g must be the square of a primitive linear form */
    if (!is_square(g.p) || !is_square(g.r)) throw internal_error("degenerate form is not a square");
    Int u = isqrt(g.p), v = isqrt(g.r);
    if (g.q != 2 * u * v && g.q != -2 * u * v)
        throw internal_error("degenerate form is not a square");
    return c;
}

}  // namespace

bool form_equivalent(const bin_quad_form& f1, const bin_quad_form& f2) {
    if (f1.is_zero() || f2.is_zero()) return f1.is_zero() && f2.is_zero();
    if (f1.disc() != f2.disc()) return false;
    if (f1.content() != f2.content()) return false;
    Int d = f1.disc();
    if (d == 0) return degenerate_scalar(f1) == degenerate_scalar(f2);
    if (d < 0) return definite_equivalent(f1, f2);
    if (is_square(d)) return square_disc_equivalent(f1, f2);
    return indefinite_nonsquare_equivalent(f1, f2);
}

bin_quad_form symmetrized_form(const euler_lattice& l) {
    if (l.rank() != 2) throw usage_error("symmetrized binary form needs a rank-2 lattice");
    return {l.gram(0, 0), l.gram(0, 1) + l.gram(1, 0), l.gram(1, 1)};
}

bin_quad_form curve_symmetrized_form(long long g) { return {Int(1 - g), Int(0), Int(0)}; }

std::vector<bn_classification_entry> classify_bn(long long g) {
    if (g < 1) return {};
    std::vector<bn_classification_entry> out;
    for (long long h0 = 1; h0 <= g; ++h0) {
        if (g % h0 != 0) continue;
        long long h1 = g / h0;
        bn_classification_entry e;
        e.h0 = h0;
        e.h1 = h1;
        e.symmetrized = symmetrized_form(bn_complement_lattice(g, h0, h1));
        Int a = h0 - 1, b = h1 - 1;
        if (!(e.symmetrized == bin_quad_form{-b, a * b, -a}))
            throw internal_error("BN complement symmetrization mismatch");
        e.disc = e.symmetrized.disc();
        if (e.disc != a * b * (a * b - 4))
            throw internal_error("BN complement discriminant mismatch");
        e.curve_equivalent = form_equivalent(e.symmetrized, curve_symmetrized_form(g));
        if (e.curve_equivalent != (a == 0 || b == 0))
            throw internal_error("BN classification disagrees with the extremal criterion");
        e.verdict = e.curve_equivalent ? "numerically equivalent to a curve"
                                       : "not the derived category of a curve";
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace sod
