#include "sodlat/homcalc.hpp"

#include <algorithm>

#include "sodlat/matrix.hpp"

namespace sod {

namespace {

lincomb normalized(const std::map<int, long long>& acc) {
    lincomb out;
    for (const auto& [idx, coeff] : acc)
        if (coeff != 0) out.push_back({coeff, idx});
    return out;
}

void accumulate(std::map<int, long long>& acc, long long scale, const lincomb& v) {
    for (const auto& [coeff, idx] : v) acc[idx] += scale * coeff;
}

lincomb unit(int idx) { return {{1, idx}}; }

bool same_lincomb(const lincomb& a, const lincomb& b) {
    std::map<int, long long> acc;
    accumulate(acc, 1, a);
    accumulate(acc, -1, b);
    return normalized(acc).empty();
}

}  // namespace

int graded_basis::find(const std::string& name) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i].name == name) return static_cast<int>(i);
    return -1;
}

graded_dims graded_basis::dims() const {
    graded_dims out;
    for (const auto& e : elements) out.add(e.degree, 1);
    return out;
}

const graded_basis& finite_graded_category::hom_basis(int src, int dst) const {
    if (src < 0 || dst < 0 || src >= object_count() || dst >= object_count())
        throw usage_error("object index out of range");
    return hom[static_cast<size_t>(src)][static_cast<size_t>(dst)];
}

lincomb finite_graded_category::compose(int src, int mid, int dst, int f, int g) const {
    auto it = composition.find({src, mid, dst, f, g});
    return it == composition.end() ? lincomb{} : it->second;
}

lincomb finite_graded_category::compose(int src, int mid, int dst, const lincomb& f,
                                        const lincomb& g) const {
    std::map<int, long long> acc;
    for (const auto& [cf, fi] : f)
        for (const auto& [cg, gi] : g) accumulate(acc, cf * cg, compose(src, mid, dst, fi, gi));
    return normalized(acc);
}

void finite_graded_category::validate() const {
    long long n = object_count();
    if (static_cast<long long>(hom.size()) != n ||
        static_cast<long long>(identity.size()) != n)
        throw usage_error("category tables do not match object count");
    for (long long x = 0; x < n; ++x) {
        if (static_cast<long long>(hom[static_cast<size_t>(x)].size()) != n)
            throw usage_error("category hom table is ragged");
        int id = identity[static_cast<size_t>(x)];
        const auto& endo = hom_basis(static_cast<int>(x), static_cast<int>(x));
        if (id < 0 || id >= static_cast<int>(endo.elements.size()) ||
            endo.elements[static_cast<size_t>(id)].degree != 0)
            throw usage_error("identity must be a degree-0 endomorphism basis element");
    }
    for (const auto& [key, value] : composition) {
        auto [src, mid, dst, f, g] = key;
        const auto& bf = hom_basis(src, mid).elements;
        const auto& bg = hom_basis(mid, dst).elements;
        const auto& bt = hom_basis(src, dst).elements;
        if (f < 0 || f >= static_cast<int>(bf.size()) || g < 0 || g >= static_cast<int>(bg.size()))
            throw usage_error("composition table references unknown basis element");
        int deg = bf[static_cast<size_t>(f)].degree + bg[static_cast<size_t>(g)].degree;
        for (const auto& [coeff, idx] : value) {
            if (idx < 0 || idx >= static_cast<int>(bt.size()))
                throw usage_error("composition result references unknown basis element");
            if (bt[static_cast<size_t>(idx)].degree != deg)
                throw usage_error("composition is not degree-additive");
        }
    }
    /* unit laws */
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& b = hom_basis(x, y).elements;
            for (int f = 0; f < static_cast<int>(b.size()); ++f) {
                if (!same_lincomb(compose(x, x, y, identity[static_cast<size_t>(x)], f), unit(f)))
                    throw usage_error("identity is not a left unit at " + b[static_cast<size_t>(f)].name);
                if (!same_lincomb(compose(x, y, y, f, identity[static_cast<size_t>(y)]), unit(f)))
                    throw usage_error("identity is not a right unit at " + b[static_cast<size_t>(f)].name);
            }
        }
    /* associativity on all basis triples */
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    const auto& bf = hom_basis(a, b).elements;
                    const auto& bg = hom_basis(b, c).elements;
                    const auto& bh = hom_basis(c, d).elements;
                    for (int f = 0; f < static_cast<int>(bf.size()); ++f)
                        for (int g = 0; g < static_cast<int>(bg.size()); ++g)
                            for (int h = 0; h < static_cast<int>(bh.size()); ++h) {
                                lincomb gf = compose(a, b, c, f, g);
                                lincomb hg = compose(b, c, d, g, h);
                                lincomb left = compose(a, c, d, gf, unit(h));
                                lincomb right = compose(a, b, d, unit(f), hg);
                                if (!same_lincomb(left, right))
                                    throw usage_error(
                                        "composition is not associative at " +
                                        bf[static_cast<size_t>(f)].name + ", " +
                                        bg[static_cast<size_t>(g)].name + ", " +
                                        bh[static_cast<size_t>(h)].name);
                            }
                }
}

const graded_basis& glued_model::value_basis(int x1, int x2) const {
    if (x1 < 0 || x2 < 0 || x1 >= factor1.object_count() || x2 >= factor2.object_count())
        throw usage_error("bimodule object index out of range");
    return values[static_cast<size_t>(x1)][static_cast<size_t>(x2)];
}

lincomb glued_model::act_right(int x1, int y1, int x2, int f1, const lincomb& v) const {
    std::map<int, long long> acc;
    for (const auto& [coeff, idx] : v) {
        auto it = right_action.find({x1, y1, x2, f1, idx});
        if (it == right_action.end())
            throw incomplete_model_error("missing right action entry in the gluing bimodule");
        accumulate(acc, coeff, it->second);
    }
    return normalized(acc);
}

lincomb glued_model::act_left(int x1, int x2, int y2, int f2, const lincomb& v) const {
    std::map<int, long long> acc;
    for (const auto& [coeff, idx] : v) {
        auto it = left_action.find({x1, x2, y2, f2, idx});
        if (it == left_action.end())
            throw incomplete_model_error("missing left action entry in the gluing bimodule");
        accumulate(acc, coeff, it->second);
    }
    return normalized(acc);
}

void glued_model::validate() const {
    factor1.validate();
    factor2.validate();
    long long n1 = factor1.object_count(), n2 = factor2.object_count();
    if (static_cast<long long>(values.size()) != n1)
        throw usage_error("bimodule value table does not match factor 1");
    for (const auto& row : values)
        if (static_cast<long long>(row.size()) != n2)
            throw usage_error("bimodule value table does not match factor 2");

    for (const auto& [key, value] : right_action) {
        auto [x1, y1, x2, f1, v] = key;
        const auto& bf = factor1.hom_basis(x1, y1).elements;
        const auto& bv = value_basis(y1, x2).elements;
        const auto& bt = value_basis(x1, x2).elements;
        if (f1 < 0 || f1 >= static_cast<int>(bf.size()) || v < 0 ||
            v >= static_cast<int>(bv.size()))
            throw usage_error("right action references unknown basis element");
        int deg = bf[static_cast<size_t>(f1)].degree + bv[static_cast<size_t>(v)].degree;
        for (const auto& [coeff, idx] : value)
            if (idx < 0 || idx >= static_cast<int>(bt.size()) ||
                bt[static_cast<size_t>(idx)].degree != deg)
                throw usage_error("right action is not degree-additive");
    }
    for (const auto& [key, value] : left_action) {
        auto [x1, x2, y2, f2, v] = key;
        const auto& bf = factor2.hom_basis(x2, y2).elements;
        const auto& bv = value_basis(x1, x2).elements;
        const auto& bt = value_basis(x1, y2).elements;
        if (f2 < 0 || f2 >= static_cast<int>(bf.size()) || v < 0 ||
            v >= static_cast<int>(bv.size()))
            throw usage_error("left action references unknown basis element");
        int deg = bf[static_cast<size_t>(f2)].degree + bv[static_cast<size_t>(v)].degree;
        for (const auto& [coeff, idx] : value)
            if (idx < 0 || idx >= static_cast<int>(bt.size()) ||
                bt[static_cast<size_t>(idx)].degree != deg)
                throw usage_error("left action is not degree-additive");
    }

    auto has_right = [&](int x1, int y1, int x2) {
        const auto& bf = factor1.hom_basis(x1, y1).elements;
        const auto& bv = value_basis(y1, x2).elements;
        for (int f = 0; f < static_cast<int>(bf.size()); ++f)
            for (int v = 0; v < static_cast<int>(bv.size()); ++v)
                if (!right_action.count({x1, y1, x2, f, v})) return false;
        return true;
    };
    auto has_left = [&](int x1, int x2, int y2) {
        const auto& bf = factor2.hom_basis(x2, y2).elements;
        const auto& bv = value_basis(x1, x2).elements;
        for (int f = 0; f < static_cast<int>(bf.size()); ++f)
            for (int v = 0; v < static_cast<int>(bv.size()); ++v)
                if (!left_action.count({x1, x2, y2, f, v})) return false;
        return true;
    };

    /* unit actions, module associativity and commutation of the two
     * actions, on every fully tabulated combination */
    for (int x1 = 0; x1 < n1; ++x1)
        for (int x2 = 0; x2 < n2; ++x2) {
            const auto& bv = value_basis(x1, x2).elements;
            for (int v = 0; v < static_cast<int>(bv.size()); ++v) {
                auto itr = right_action.find({x1, x1, x2, factor1.identity[static_cast<size_t>(x1)], v});
                if (itr != right_action.end() && !same_lincomb(itr->second, unit(v)))
                    throw usage_error("identity does not act trivially on the bimodule (right)");
                auto itl = left_action.find({x1, x2, x2, factor2.identity[static_cast<size_t>(x2)], v});
                if (itl != left_action.end() && !same_lincomb(itl->second, unit(v)))
                    throw usage_error("identity does not act trivially on the bimodule (left)");
            }
        }
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b)
            for (int c = 0; c < n1; ++c)
                for (int x2 = 0; x2 < n2; ++x2) {
                    if (!has_right(a, b, x2) || !has_right(b, c, x2) || !has_right(a, c, x2))
                        continue;
                    const auto& bf = factor1.hom_basis(a, b).elements;
                    const auto& bg = factor1.hom_basis(b, c).elements;
                    const auto& bv = value_basis(c, x2).elements;
                    for (int f = 0; f < static_cast<int>(bf.size()); ++f)
                        for (int g = 0; g < static_cast<int>(bg.size()); ++g)
                            for (int v = 0; v < static_cast<int>(bv.size()); ++v) {
                                lincomb via_g = act_right(b, c, x2, g, unit(v));
                                lincomb lhs = act_right(a, b, x2, f, via_g);
                                lincomb comp = factor1.compose(a, b, c, f, g);
                                std::map<int, long long> acc;
                                for (const auto& [cc, ci] : comp)
                                    accumulate(acc, cc, act_right(a, c, x2, ci, unit(v)));
                                if (!same_lincomb(lhs, normalized(acc)))
                                    throw usage_error("right action is not associative");
                            }
                }
    for (int x1 = 0; x1 < n1; ++x1)
        for (int a = 0; a < n2; ++a)
            for (int b = 0; b < n2; ++b)
                for (int c = 0; c < n2; ++c) {
                    if (!has_left(x1, a, b) || !has_left(x1, b, c) || !has_left(x1, a, c))
                        continue;
                    const auto& bf = factor2.hom_basis(a, b).elements;
                    const auto& bg = factor2.hom_basis(b, c).elements;
                    const auto& bv = value_basis(x1, a).elements;
                    for (int f = 0; f < static_cast<int>(bf.size()); ++f)
                        for (int g = 0; g < static_cast<int>(bg.size()); ++g)
                            for (int v = 0; v < static_cast<int>(bv.size()); ++v) {
                                lincomb via_f = act_left(x1, a, b, f, unit(v));
                                lincomb lhs = act_left(x1, b, c, g, via_f);
                                lincomb comp = factor2.compose(a, b, c, f, g);
                                std::map<int, long long> acc;
                                for (const auto& [cc, ci] : comp)
                                    accumulate(acc, cc, act_left(x1, a, c, ci, unit(v)));
                                if (!same_lincomb(lhs, normalized(acc)))
                                    throw usage_error("left action is not associative");
                            }
                }
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b)
            for (int x2 = 0; x2 < n2; ++x2)
                for (int y2 = 0; y2 < n2; ++y2) {
                    if (!has_right(a, b, x2) || !has_right(a, b, y2) || !has_left(b, x2, y2) ||
                        !has_left(a, x2, y2))
                        continue;
                    const auto& bf = factor1.hom_basis(a, b).elements;
                    const auto& bg = factor2.hom_basis(x2, y2).elements;
                    const auto& bv = value_basis(b, x2).elements;
                    for (int f = 0; f < static_cast<int>(bf.size()); ++f)
                        for (int g = 0; g < static_cast<int>(bg.size()); ++g)
                            for (int v = 0; v < static_cast<int>(bv.size()); ++v) {
                                lincomb lhs = act_left(a, x2, y2, g, act_right(a, b, x2, f, unit(v)));
                                lincomb rhs = act_right(a, b, y2, f, act_left(b, x2, y2, g, unit(v)));
                                if (!same_lincomb(lhs, rhs))
                                    throw usage_error("left and right actions do not commute");
                            }
                }
}

namespace {

void check_triple(const glued_model& model, const glue_triple& t) {
    if (t.f1 >= model.factor1.object_count() || t.f2 >= model.factor2.object_count())
        throw usage_error("glue triple references unknown object");
    if (t.f1 < 0 || t.f2 < 0) {
        if (!t.phi.empty())
            throw usage_error("glue triple with a zero component cannot carry phi");
        return;
    }
    const auto& basis = model.value_basis(t.f1, t.f2).elements;
    for (const auto& [coeff, idx] : t.phi) {
        if (idx < 0 || idx >= static_cast<int>(basis.size()))
            throw usage_error("phi references unknown bimodule basis element");
        if (basis[static_cast<size_t>(idx)].degree != 0)
            throw usage_error("phi must live in degree 0");
    }
}

}  // namespace

graded_dims gluing_hom(const glued_model& model, const glue_triple& t, const glue_triple& u) {
    check_triple(model, t);
    check_triple(model, u);

    static const graded_basis empty_basis{};
    const graded_basis& a1 =
        (t.f1 >= 0 && u.f1 >= 0) ? model.factor1.hom_basis(t.f1, u.f1) : empty_basis;
    const graded_basis& a2 =
        (t.f2 >= 0 && u.f2 >= 0) ? model.factor2.hom_basis(t.f2, u.f2) : empty_basis;
    const graded_basis& b =
        (t.f1 >= 0 && u.f2 >= 0) ? model.value_basis(t.f1, u.f2) : empty_basis;

    /* psi(f1, f2) = phi' . f1 - f2 . phi, one column per source basis element */
    struct column {
        int degree;
        lincomb image;
    };
    std::vector<column> cols;
    for (int i = 0; i < static_cast<int>(a1.elements.size()); ++i) {
        lincomb img;
        if (!u.phi.empty()) img = model.act_right(t.f1, u.f1, u.f2, i, u.phi);
        cols.push_back({a1.elements[static_cast<size_t>(i)].degree, std::move(img)});
    }
    for (int i = 0; i < static_cast<int>(a2.elements.size()); ++i) {
        lincomb img;
        if (!t.phi.empty()) {
            img = model.act_left(t.f1, t.f2, u.f2, i, t.phi);
            for (auto& [coeff, idx] : img) coeff = -coeff;
        }
        cols.push_back({a2.elements[static_cast<size_t>(i)].degree, std::move(img)});
    }

    graded_dims dims_a;
    for (const auto& c : cols) dims_a.add(c.degree, 1);
    graded_dims dims_b = b.dims();

    /* rank of psi per degree */
    std::map<int, long long> ranks;
    std::map<int, std::vector<const column*>> by_degree;
    for (const auto& c : cols) by_degree[c.degree].push_back(&c);
    for (const auto& [deg, degcols] : by_degree) {
        std::vector<int> row_index(b.elements.size(), -1);
        int nrows = 0;
        for (size_t i = 0; i < b.elements.size(); ++i)
            if (b.elements[i].degree == deg) row_index[i] = nrows++;
        if (nrows == 0) continue;
        imat m(nrows, static_cast<long long>(degcols.size()));
        for (size_t j = 0; j < degcols.size(); ++j)
            for (const auto& [coeff, idx] : degcols[j]->image)
                m(row_index[static_cast<size_t>(idx)], static_cast<long long>(j)) = coeff;
        ranks[deg] = rank(m);
    }

    graded_dims out;
    int lo = 0, hi = 0;
    if (!dims_a.empty()) {
        lo = std::min(lo, dims_a.min_degree());
        hi = std::max(hi, dims_a.max_degree());
    }
    if (!dims_b.empty()) {
        lo = std::min(lo, dims_b.min_degree());
        hi = std::max(hi, dims_b.max_degree() + 1);
    }
    for (int n = lo; n <= hi; ++n) {
        long long rn = ranks.count(n) ? ranks[n] : 0;
        long long rprev = ranks.count(n - 1) ? ranks[n - 1] : 0;
        long long dim = (dims_a.at(n) - rn) + (dims_b.at(n - 1) - rprev);
        if (dim < 0) throw internal_error("negative dimension in gluing hom chase");
        out.add(n, dim);
    }
    return out;
}

/* ---------------- model builders ---------------- */

namespace {

struct category_builder {
    finite_graded_category cat;

    int add_object(const std::string& name) {
        cat.objects.push_back(name);
        long long n = cat.object_count();
        cat.hom.assign(static_cast<size_t>(n),
                       std::vector<graded_basis>(static_cast<size_t>(n)));
        cat.identity.assign(static_cast<size_t>(n), -1);
        return static_cast<int>(n - 1);
    }

    /* objects must all be added before morphisms */
    int add_morphism(int src, int dst, const std::string& name, int deg) {
        auto& basis = cat.hom[static_cast<size_t>(src)][static_cast<size_t>(dst)];
        basis.elements.push_back({name, deg});
        return static_cast<int>(basis.elements.size()) - 1;
    }

    int add_identity(int obj, const std::string& name) {
        int idx = add_morphism(obj, obj, name, 0);
        cat.identity[static_cast<size_t>(obj)] = idx;
        return idx;
    }

    void set_composition(int src, int mid, int dst, int f, int g, lincomb result) {
        cat.composition[{src, mid, dst, f, g}] = std::move(result);
    }

    /* identity laws plus explicit zeros for every remaining composable pair */
    finite_graded_category finish() {
        long long n = cat.object_count();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const auto& basis = cat.hom[static_cast<size_t>(x)][static_cast<size_t>(y)];
                for (int f = 0; f < static_cast<int>(basis.elements.size()); ++f) {
                    cat.composition.insert({{x, x, y, cat.identity[static_cast<size_t>(x)], f}, unit(f)});
                    cat.composition.insert({{x, y, y, f, cat.identity[static_cast<size_t>(y)]}, unit(f)});
                }
            }
        cat.validate();
        return cat;
    }
};

struct model_builder {
    glued_model model;

    void set_factors(finite_graded_category c1, finite_graded_category c2) {
        model.factor1 = std::move(c1);
        model.factor2 = std::move(c2);
        model.values.assign(static_cast<size_t>(model.factor1.object_count()),
                            std::vector<graded_basis>(
                                static_cast<size_t>(model.factor2.object_count())));
    }

    int add_value(int x1, int x2, const std::string& name, int deg) {
        auto& basis = model.values[static_cast<size_t>(x1)][static_cast<size_t>(x2)];
        basis.elements.push_back({name, deg});
        return static_cast<int>(basis.elements.size()) - 1;
    }

    void set_right(int x1, int y1, int x2, int f1, int v, lincomb result) {
        model.right_action[{x1, y1, x2, f1, v}] = std::move(result);
    }

    void set_left(int x1, int x2, int y2, int f2, int v, lincomb result) {
        model.left_action[{x1, x2, y2, f2, v}] = std::move(result);
    }

    /* identity actions, then explicit zeros for everything not set; the
     * axioms in validate() then cover the full tables */
    glued_model finish() {
        long long n1 = model.factor1.object_count(), n2 = model.factor2.object_count();
        for (int x1 = 0; x1 < n1; ++x1)
            for (int x2 = 0; x2 < n2; ++x2) {
                const auto& bv = model.value_basis(x1, x2).elements;
                for (int v = 0; v < static_cast<int>(bv.size()); ++v) {
                    model.right_action.insert(
                        {{x1, x1, x2, model.factor1.identity[static_cast<size_t>(x1)], v}, unit(v)});
                    model.left_action.insert(
                        {{x1, x2, x2, model.factor2.identity[static_cast<size_t>(x2)], v}, unit(v)});
                }
            }
        for (int x1 = 0; x1 < n1; ++x1)
            for (int y1 = 0; y1 < n1; ++y1)
                for (int x2 = 0; x2 < n2; ++x2) {
                    const auto& bf = model.factor1.hom_basis(x1, y1).elements;
                    const auto& bv = model.value_basis(y1, x2).elements;
                    for (int f = 0; f < static_cast<int>(bf.size()); ++f)
                        for (int v = 0; v < static_cast<int>(bv.size()); ++v)
                            model.right_action.insert({{x1, y1, x2, f, v}, lincomb{}});
                }
        for (int x1 = 0; x1 < n1; ++x1)
            for (int x2 = 0; x2 < n2; ++x2)
                for (int y2 = 0; y2 < n2; ++y2) {
                    const auto& bf = model.factor2.hom_basis(x2, y2).elements;
                    const auto& bv = model.value_basis(x1, x2).elements;
                    for (int f = 0; f < static_cast<int>(bf.size()); ++f)
                        for (int v = 0; v < static_cast<int>(bv.size()); ++v)
                            model.left_action.insert({{x1, x2, y2, f, v}, lincomb{}});
                }
        model.validate();
        return model;
    }
};

/* One curve factor of the local model: objects O_C, O_x with the standard
 * graded Hom spaces.  mu o lambda in Ext^1(O_C, O_C) is not pinned down by
 * the gluing data; `toggle` sends it to the first basis vector or to zero. */
struct curve_factor {
    finite_graded_category cat;
    int obj_c = 0, obj_x = 1;
    int id_c = 0, id_x = 0;
    std::vector<int> eta;  // Ext^1(O_C, O_C) basis
    int lam = 0;           // O_C -> O_x, degree 0
    int mu = 0;            // O_x -> O_C, degree 1
    int nu = 0;            // lambda o mu in Ext^1(O_x, O_x)
};

curve_factor build_curve_factor(long long g, bool mu_lambda_nonzero) {
    curve_factor f;
    category_builder b;
    f.obj_c = b.add_object("O_C");
    f.obj_x = b.add_object("O_x");
    f.id_c = b.add_identity(f.obj_c, "id_C");
    for (long long j = 1; j <= g; ++j)
        f.eta.push_back(b.add_morphism(f.obj_c, f.obj_c, "eta" + std::to_string(j), 1));
    f.lam = b.add_morphism(f.obj_c, f.obj_x, "lambda", 0);
    f.id_x = b.add_identity(f.obj_x, "id_x");
    f.mu = b.add_morphism(f.obj_x, f.obj_c, "mu", 1);
    f.nu = b.add_morphism(f.obj_x, f.obj_x, "nu", 1);
    /* lambda o mu generates Ext^1(O_x, O_x) */
    b.set_composition(f.obj_x, f.obj_c, f.obj_x, f.mu, f.lam, unit(f.nu));
    if (mu_lambda_nonzero && g >= 1)
        b.set_composition(f.obj_c, f.obj_x, f.obj_c, f.lam, f.mu, unit(f.eta[0]));
    f.cat = b.finish();
    return f;
}

}  // namespace

glue_triple ipg_model::exotic_triple() const {
    glue_triple t;
    t.f1 = point1;
    t.f2 = point2;
    int eps = model.value_basis(point1, point2).find("eps");
    if (eps < 0) throw internal_error("local model lost its eps generator");
    t.phi = unit(eps);
    return t;
}

ipg_model ipg_local_model(long long g1, long long g2, bool mu_lambda_nonzero) {
    if (g1 < 0 || g2 < 0) throw usage_error("genus must be nonnegative");
    curve_factor f1 = build_curve_factor(g1, mu_lambda_nonzero);
    curve_factor f2 = build_curve_factor(g2, mu_lambda_nonzero);

    model_builder mb;
    mb.set_factors(f1.cat, f2.cat);
    const int C1 = f1.obj_c, P1 = f1.obj_x, C2 = f2.obj_c, P2 = f2.obj_x;

    /* Each value space is the cone of
     *   RHom(X1, O_C1) x RHom(O_C2, X2)  --lambda1 x mu2-->
     *   RHom(X1, O_x1) x RHom(O_x2, X2),
     * written out through its surviving classes.  Source classes land one
     * degree below their tensor degree; target classes keep theirs. */

    /* G(O_C1, O_C2): [eta1_j x id], [id x eta2_k] in degree 1,
     * [eta1_j x eta2_k] in degree 2; [id x id] cancels against
     * lambda1 x mu2. */
    std::vector<int> a_j, b_k;
    std::vector<std::vector<int>> c_jk(static_cast<size_t>(g1),
                                       std::vector<int>(static_cast<size_t>(g2), -1));
    for (long long j = 0; j < g1; ++j)
        a_j.push_back(mb.add_value(C1, C2, "a" + std::to_string(j + 1), 1));
    for (long long k = 0; k < g2; ++k)
        b_k.push_back(mb.add_value(C1, C2, "b" + std::to_string(k + 1), 1));
    for (long long j = 0; j < g1; ++j)
        for (long long k = 0; k < g2; ++k)
            c_jk[static_cast<size_t>(j)][static_cast<size_t>(k)] = mb.add_value(
                C1, C2, "c" + std::to_string(j + 1) + "_" + std::to_string(k + 1), 2);

    /* G(O_C1, O_x2): [lambda1 x id] in degree 0, [eta1_j x lambda2] in
     * degree 1; [lambda1 x nu2] cancels. */
    int t_l = mb.add_value(C1, P2, "l", 0);
    std::vector<int> d_j;
    for (long long j = 0; j < g1; ++j)
        d_j.push_back(mb.add_value(C1, P2, "d" + std::to_string(j + 1), 1));

    /* G(O_x1, O_C2): [id x mu2] in degree 1, [mu1 x eta2_k] in degree 2;
     * [nu1 x mu2] cancels. */
    int t_m = mb.add_value(P1, C2, "m", 1);
    std::vector<int> e_k;
    for (long long k = 0; k < g2; ++k)
        e_k.push_back(mb.add_value(P1, C2, "e" + std::to_string(k + 1), 2));

    /* G(O_x1, O_x2): eps = [id x id] in degree 0, [nu1 x id] and
     * [id x nu2] in degree 1; [nu1 x nu2] cancels against [mu1 x lambda2]. */
    int v_eps = mb.add_value(P1, P2, "eps", 0);
    int v_er = mb.add_value(P1, P2, "er", 1);
    int v_el = mb.add_value(P1, P2, "el", 1);

    long long t1 = (mu_lambda_nonzero && g1 >= 1) ? 1 : 0;
    long long t2 = (mu_lambda_nonzero && g2 >= 1) ? 1 : 0;

    /* right actions: precompose the first tensor slot */
    /* lambda1: values over O_x1 pull back to O_C1 */
    mb.set_right(C1, P1, P2, f1.lam, v_eps, unit(t_l));
    for (long long k = 0; k < g2; ++k)
        if (t1 != 0)
            mb.set_right(C1, P1, C2, f1.lam, e_k[static_cast<size_t>(k)],
                         {{t1, c_jk[0][static_cast<size_t>(k)]}});
    /* mu1: values over O_C1 pull back to O_x1 */
    mb.set_right(P1, C1, P2, f1.mu, t_l, unit(v_er));
    for (long long k = 0; k < g2; ++k)
        mb.set_right(P1, C1, C2, f1.mu, b_k[static_cast<size_t>(k)],
                     unit(e_k[static_cast<size_t>(k)]));
    /* eta1_j: endomorphism action on values over O_C1 */
    for (long long j = 0; j < g1; ++j)
        for (long long k = 0; k < g2; ++k)
            mb.set_right(C1, C1, C2, f1.eta[static_cast<size_t>(j)], b_k[static_cast<size_t>(k)],
                         unit(c_jk[static_cast<size_t>(j)][static_cast<size_t>(k)]));
    /* nu1: endomorphism action on values over O_x1 */
    mb.set_right(P1, P1, P2, f1.nu, v_eps, unit(v_er));

    /* left actions: postcompose the second tensor slot */
    /* lambda2: values over O_C2 push to O_x2 */
    for (long long j = 0; j < g1; ++j)
        mb.set_left(C1, C2, P2, f2.lam, a_j[static_cast<size_t>(j)],
                    unit(d_j[static_cast<size_t>(j)]));
    mb.set_left(P1, C2, P2, f2.lam, t_m, unit(v_el));
    /* mu2: values over O_x2 push to O_C2 */
    for (long long j = 0; j < g1; ++j)
        if (t2 != 0)
            mb.set_left(C1, P2, C2, f2.mu, d_j[static_cast<size_t>(j)],
                        {{t2, c_jk[static_cast<size_t>(j)][0]}});
    mb.set_left(P1, P2, C2, f2.mu, v_eps, unit(t_m));
    /* eta2_k */
    for (long long j = 0; j < g1; ++j)
        for (long long k = 0; k < g2; ++k)
            mb.set_left(C1, C2, C2, f2.eta[static_cast<size_t>(k)], a_j[static_cast<size_t>(j)],
                        unit(c_jk[static_cast<size_t>(j)][static_cast<size_t>(k)]));
    /* nu2 */
    mb.set_left(P1, P2, P2, f2.nu, v_eps, unit(v_el));

    ipg_model out;
    out.model = mb.finish();
    out.structure1 = C1;
    out.point1 = P1;
    out.structure2 = C2;
    out.point2 = P2;
    return out;
}

graded_dims exotic_ext_table(int d1, int d2, long long adherence1, long long adherence2) {
    if (adherence1 != 1 || adherence2 != 1)
        throw not_adherent_error("adherence spaces must be one-dimensional");
    if (d1 < 1 || d2 < 1) throw usage_error("spherical degrees must be positive");

    category_builder b1;
    int k1 = b1.add_object("K1");
    b1.add_identity(k1, "id");
    int s1 = b1.add_morphism(k1, k1, "s", d1);
    category_builder b2;
    int k2 = b2.add_object("K2");
    b2.add_identity(k2, "id");
    int s2 = b2.add_morphism(k2, k2, "s", d2);

    model_builder mb;
    mb.set_factors(b1.finish(), b2.finish());
    int eps = mb.add_value(k1, k2, "eps", 0);
    int left = mb.add_value(k1, k2, "s1_eps", d1);
    int right = mb.add_value(k1, k2, "eps_s2", d2);
    mb.set_right(k1, k1, k2, s1, eps, unit(left));
    mb.set_left(k1, k2, k2, s2, eps, unit(right));

    glued_model model = mb.finish();
    glue_triple t{k1, k2, unit(eps)};
    return gluing_hom(model, t, t);
}

void augmentation_data::validate() const {
    if (g < 0 || h0 < 0 || h1 < 0) throw usage_error("cohomological numbers must be nonnegative");
    if (h0 - h1 != degree + 1 - g)
        throw usage_error("augmentation data violates Riemann-Roch: h0 - h1 != d + 1 - g");
    if (petri_rank < 0 || petri_rank > g || petri_rank > h0 * h1)
        throw usage_error("Petri rank must satisfy 0 <= p <= min(g, h0*h1)");
}

graded_dims bn_ext_table(const augmentation_data& a) {
    a.validate();
    if (a.h0 < 1) throw usage_error("bn_ext_table needs h0 >= 1");
    graded_dims out;
    out.add(0, 1);
    out.add(1, a.g - a.petri_rank);
    out.add(2, a.h0 * a.h1 - a.petri_rank);
    return out;
}

graded_dims bn_cross_ext_table(const bn_cross_data& d) {
    if (d.hom12 < 0 || d.ext1_12 < 0 || d.h0_1 < 0 || d.h0_2 < 0 || d.h1_2 < 0)
        throw usage_error("dimensions must be nonnegative");
    if (d.mixed_rank < 0 || d.mixed_rank > d.ext1_12 || d.mixed_rank > d.h0_1 * d.h1_2)
        throw usage_error("mixed rank exceeds a side of the multiplication map");
    graded_dims out;
    out.add(0, d.hom12);
    out.add(1, d.ext1_12 - d.mixed_rank);
    out.add(2, d.h0_1 * d.h1_2 - d.mixed_rank);
    return out;
}

void serre_input::validate() const {
    if (g < 0) throw usage_error("genus must be nonnegative");
    if (dim_v < 0 || h0_f < 0 || h1_f < 0 || h0_fw < 0 || h1_fw < 0)
        throw usage_error("dimensions must be nonnegative");
    if (Int(h0_f) - h1_f != f_class.d + f_class.r * (1 - g))
        throw usage_error("h^bullet(F) violates Riemann-Roch");
    curve_class fw = curve_mul(f_class, canonical_class(g));
    if (Int(h0_fw) - h1_fw != fw.d + fw.r * (1 - g))
        throw usage_error("h^bullet(F x omega) violates Riemann-Roch");
    if (mult_rank < 0 || mult_rank > dim_v * g || mult_rank > h0_fw)
        throw usage_error("multiplication rank exceeds a side of the map");
}

serre_output serre_on_augmentation(const serre_input& in) {
    in.validate();
    serre_output out;
    /* cone of V x H^0(omega) -> H^bullet(F x omega) contributes the kernel
     * in degree -1, coker in 0, H^1 in 1; the [1] shift lowers by one */
    out.vbar.add(-2, in.dim_v * in.g - in.mult_rank);
    out.vbar.add(-1, in.h0_fw - in.mult_rank);
    out.vbar.add(0, in.h1_fw);
    curve_class fw = curve_mul(in.f_class, canonical_class(in.g));
    out.fbar = {Int(in.dim_v) - fw.r, Int(in.dim_v) * (2 * in.g - 2) - fw.d};
    out.vbar_is_shifted_space = out.vbar.dims.size() <= 1;
    out.augmentation_shifted_by_2 =
        out.vbar.empty() || (out.vbar.dims.size() == 1 && out.vbar.at(-2) > 0);
    return out;
}

namespace {

void check_pair_hypotheses(const serre_pair_data& d, const char* tag) {
    d.base.validate();
    if (d.base.dim_v != d.base.h0_f)
        throw usage_error("augmentation must carry V = H^0(F)");
    if (!d.globally_generated)
        throw hypothesis_not_met_error(std::string("globally_generated(") + tag + ")");
    if (d.base.h1_fw != 0)
        throw hypothesis_not_met_error(std::string("h1_f_omega_vanishes(") + tag + ")");
    if (d.base.mult_rank != d.base.h0_fw)
        throw hypothesis_not_met_error(std::string("multiplication_surjective(") + tag + ")");
}

}  // namespace

bool serre_pair_check(const serre_pair_data& f1, const serre_pair_data& f2) {
    check_pair_hypotheses(f1, "F1");
    check_pair_hypotheses(f2, "F2");
    /* kernel relations at class level: F2 = ker(H^0(F1) x omega -> F1 x omega) */
    auto kernel_class = [](const serre_pair_data& d) {
        curve_class fw = curve_mul(d.base.f_class, canonical_class(d.base.g));
        return curve_class{Int(d.base.h0_f) - fw.r, Int(d.base.h0_f) * (2 * d.base.g - 2) - fw.d};
    };
    if (!(kernel_class(f1) == f2.base.f_class) || !(kernel_class(f2) == f1.base.f_class))
        throw hypothesis_not_met_error("kernel_relation");

    auto matches = [](const serre_output& got, const serre_pair_data& expect) {
        graded_dims want;
        want.add(-2, expect.base.h0_f);
        return got.vbar == want && got.fbar == expect.base.f_class;
    };
    return matches(serre_on_augmentation(f1.base), f2) &&
           matches(serre_on_augmentation(f2.base), f1);
}

/* ---------------- serialization ---------------- */

namespace {

nlohmann::ordered_json lincomb_to_json(const lincomb& v, const graded_basis& basis) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [coeff, idx] : v)
        out.push_back({coeff, basis.elements[static_cast<size_t>(idx)].name});
    return out;
}

lincomb lincomb_from_json(const nlohmann::ordered_json& j, const graded_basis& basis) {
    lincomb out;
    for (const auto& term : j) {
        int idx = basis.find(term[1].get<std::string>());
        if (idx < 0) throw usage_error("serialized model references unknown basis element");
        out.push_back({term[0].get<long long>(), idx});
    }
    return out;
}

nlohmann::ordered_json basis_to_json(const graded_basis& b) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : b.elements) out.push_back({{"name", e.name}, {"deg", e.degree}});
    return out;
}

graded_basis basis_from_json(const nlohmann::ordered_json& j) {
    graded_basis b;
    for (const auto& e : j) b.elements.push_back({e["name"].get<std::string>(), e["deg"].get<int>()});
    return b;
}

}  // namespace

nlohmann::ordered_json finite_graded_category::to_json() const {
    nlohmann::ordered_json j;
    j["objects"] = objects;
    nlohmann::ordered_json homs = nlohmann::ordered_json::array();
    for (int s = 0; s < object_count(); ++s)
        for (int d = 0; d < object_count(); ++d) {
            const auto& b = hom_basis(s, d);
            if (b.elements.empty()) continue;
            homs.push_back({{"src", s}, {"dst", d}, {"basis", basis_to_json(b)}});
        }
    j["hom"] = homs;
    nlohmann::ordered_json ids = nlohmann::ordered_json::array();
    for (int x = 0; x < object_count(); ++x)
        ids.push_back(hom_basis(x, x).elements[static_cast<size_t>(identity[static_cast<size_t>(x)])].name);
    j["identities"] = ids;
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& [key, value] : composition) {
        auto [src, mid, dst, f, g] = key;
        comps.push_back({{"src", src},
                         {"mid", mid},
                         {"dst", dst},
                         {"f", hom_basis(src, mid).elements[static_cast<size_t>(f)].name},
                         {"g", hom_basis(mid, dst).elements[static_cast<size_t>(g)].name},
                         {"coeffs", lincomb_to_json(value, hom_basis(src, dst))}});
    }
    j["compositions"] = comps;
    return j;
}

finite_graded_category finite_graded_category::from_json(const nlohmann::ordered_json& j) {
    finite_graded_category cat;
    cat.objects = j["objects"].get<std::vector<std::string>>();
    long long n = cat.object_count();
    cat.hom.assign(static_cast<size_t>(n), std::vector<graded_basis>(static_cast<size_t>(n)));
    cat.identity.assign(static_cast<size_t>(n), -1);
    for (const auto& h : j["hom"])
        cat.hom[h["src"].get<size_t>()][h["dst"].get<size_t>()] = basis_from_json(h["basis"]);
    for (int x = 0; x < n; ++x) {
        cat.identity[static_cast<size_t>(x)] =
            cat.hom_basis(x, x).find(j["identities"][static_cast<size_t>(x)].get<std::string>());
        if (cat.identity[static_cast<size_t>(x)] < 0)
            throw usage_error("serialized category is missing an identity");
    }
    for (const auto& c : j["compositions"]) {
        int src = c["src"].get<int>(), mid = c["mid"].get<int>(), dst = c["dst"].get<int>();
        int f = cat.hom_basis(src, mid).find(c["f"].get<std::string>());
        int g = cat.hom_basis(mid, dst).find(c["g"].get<std::string>());
        if (f < 0 || g < 0) throw usage_error("serialized composition references unknown morphism");
        cat.composition[{src, mid, dst, f, g}] =
            lincomb_from_json(c["coeffs"], cat.hom_basis(src, dst));
    }
    cat.validate();
    return cat;
}

nlohmann::ordered_json glued_model::to_json() const {
    nlohmann::ordered_json j;
    j["factor1"] = factor1.to_json();
    j["factor2"] = factor2.to_json();
    nlohmann::ordered_json vals = nlohmann::ordered_json::array();
    for (int x1 = 0; x1 < factor1.object_count(); ++x1)
        for (int x2 = 0; x2 < factor2.object_count(); ++x2) {
            const auto& b = value_basis(x1, x2);
            if (b.elements.empty()) continue;
            vals.push_back({{"x1", x1}, {"x2", x2}, {"basis", basis_to_json(b)}});
        }
    j["values"] = vals;
    nlohmann::ordered_json racts = nlohmann::ordered_json::array();
    for (const auto& [key, value] : right_action) {
        auto [x1, y1, x2, f, v] = key;
        racts.push_back(
            {{"x1", x1},
             {"y1", y1},
             {"x2", x2},
             {"f", factor1.hom_basis(x1, y1).elements[static_cast<size_t>(f)].name},
             {"v", value_basis(y1, x2).elements[static_cast<size_t>(v)].name},
             {"coeffs", lincomb_to_json(value, value_basis(x1, x2))}});
    }
    j["right_actions"] = racts;
    nlohmann::ordered_json lacts = nlohmann::ordered_json::array();
    for (const auto& [key, value] : left_action) {
        auto [x1, x2, y2, f, v] = key;
        lacts.push_back(
            {{"x1", x1},
             {"x2", x2},
             {"y2", y2},
             {"f", factor2.hom_basis(x2, y2).elements[static_cast<size_t>(f)].name},
             {"v", value_basis(x1, x2).elements[static_cast<size_t>(v)].name},
             {"coeffs", lincomb_to_json(value, value_basis(x1, y2))}});
    }
    j["left_actions"] = lacts;
    return j;
}

glued_model glued_model::from_json(const nlohmann::ordered_json& j) {
    glued_model m;
    m.factor1 = finite_graded_category::from_json(j["factor1"]);
    m.factor2 = finite_graded_category::from_json(j["factor2"]);
    m.values.assign(static_cast<size_t>(m.factor1.object_count()),
                    std::vector<graded_basis>(static_cast<size_t>(m.factor2.object_count())));
    for (const auto& v : j["values"])
        m.values[v["x1"].get<size_t>()][v["x2"].get<size_t>()] = basis_from_json(v["basis"]);
    for (const auto& r : j["right_actions"]) {
        int x1 = r["x1"].get<int>(), y1 = r["y1"].get<int>(), x2 = r["x2"].get<int>();
        int f = m.factor1.hom_basis(x1, y1).find(r["f"].get<std::string>());
        int v = m.value_basis(y1, x2).find(r["v"].get<std::string>());
        if (f < 0 || v < 0) throw usage_error("serialized right action references unknown element");
        m.right_action[{x1, y1, x2, f, v}] = lincomb_from_json(r["coeffs"], m.value_basis(x1, x2));
    }
    for (const auto& l : j["left_actions"]) {
        int x1 = l["x1"].get<int>(), x2 = l["x2"].get<int>(), y2 = l["y2"].get<int>();
        int f = m.factor2.hom_basis(x2, y2).find(l["f"].get<std::string>());
        int v = m.value_basis(x1, x2).find(l["v"].get<std::string>());
        if (f < 0 || v < 0) throw usage_error("serialized left action references unknown element");
        m.left_action[{x1, x2, y2, f, v}] = lincomb_from_json(l["coeffs"], m.value_basis(x1, y2));
    }
    m.validate();
    return m;
}

}  // namespace sod
