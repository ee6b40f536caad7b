#include "sodlat/families.hpp"

#include <sstream>

namespace sod {

namespace {

constexpr long long genus_cap = 10000;

long long parse_genus(const std::string& tok, const char* what) {
    long long v = 0;
    size_t pos = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw usage_error(std::string("bad ") + what + ": '" + tok + "'");
    }
    if (pos != tok.size()) throw usage_error(std::string("bad ") + what + ": '" + tok + "'");
    if (v < 0) throw usage_error(std::string(what) + " must be nonnegative");
    if (v > genus_cap)
        throw usage_error(std::string(what) + " exceeds the cap of " + std::to_string(genus_cap));
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void check_genus(long long g, const char* what) {
    if (g < 0) throw usage_error(std::string(what) + " must be nonnegative");
}

}  // namespace

std::string family_spec::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case family_kind::augmented: out << "augmented:" << g; break;
        case family_kind::ipg: out << "ipg:" << g1 << "," << g2; break;
        case family_kind::rpg: out << "rpg:" << g1 << "," << g2; break;
        case family_kind::bn_complement: out << "bncomp:" << g << "," << h0 << "," << h1; break;
    }
    return out.str();
}

family_spec parse_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw usage_error("family spec must look like kind:params, got '" + text + "'");
    std::string kind = text.substr(0, colon);
    auto params = split(text.substr(colon + 1), ',');
    family_spec spec;
    if (kind == "augmented") {
        if (params.size() != 1) throw usage_error("augmented:G takes one genus");
        spec.kind = family_kind::augmented;
        spec.g = parse_genus(params[0], "genus");
    } else if (kind == "ipg" || kind == "rpg") {
        if (params.size() != 2) throw usage_error(kind + ":G1,G2 takes two genera");
        spec.kind = kind == "ipg" ? family_kind::ipg : family_kind::rpg;
        spec.g1 = parse_genus(params[0], "genus");
        spec.g2 = parse_genus(params[1], "genus");
    } else if (kind == "bncomp") {
        if (params.size() != 3) throw usage_error("bncomp:G,H0,H1 takes three integers");
        spec.kind = family_kind::bn_complement;
        spec.g = parse_genus(params[0], "genus");
        spec.h0 = parse_genus(params[1], "h0");
        spec.h1 = parse_genus(params[2], "h1");
        if (spec.h0 < 1 || spec.h1 < 1 || spec.h0 * spec.h1 != spec.g)
            throw usage_error("bncomp needs h0, h1 >= 1 with h0*h1 = g");
    } else {
        throw usage_error("unknown family kind '" + kind + "'");
    }
    return spec;
}

euler_lattice lattice_for(const family_spec& spec) {
    switch (spec.kind) {
        case family_kind::augmented: return augmented_lattice(spec.g);
        case family_kind::ipg: return ipg_lattice(spec.g1, spec.g2);
        case family_kind::rpg: return rpg_lattice(spec.g1, spec.g2);
        case family_kind::bn_complement:
            return bn_complement_lattice(spec.g, spec.h0, spec.h1);
    }
    throw internal_error("unreachable family kind");
}

euler_lattice point_lattice() { return euler_lattice(imat{{1}}, {"[E]"}); }

euler_lattice curve_lattice(long long g, const std::string& suffix) {
    check_genus(g, "genus");
    imat gram{{Int(1 - g), Int(1)}, {Int(-1), Int(0)}};
    return euler_lattice(std::move(gram), {"[O_C" + suffix + "]", "[O_x" + suffix + "]"});
}

euler_lattice glue_lattices(const euler_lattice& l1, const euler_lattice& l2, const imat& g) {
    if (g.nrows != l1.rank() || g.ncols != l2.rank())
        throw usage_error("gluing pairing shape does not match the factor ranks");
    long long n1 = l1.rank(), n2 = l2.rank();
    imat gram(n1 + n2, n1 + n2);
    for (long long i = 0; i < n1; ++i)
        for (long long j = 0; j < n1; ++j) gram(i, j) = l1.gram(i, j);
    for (long long i = 0; i < n2; ++i)
        for (long long j = 0; j < n2; ++j) gram(n1 + i, n1 + j) = l2.gram(i, j);
    for (long long i = 0; i < n1; ++i)
        for (long long j = 0; j < n2; ++j) gram(i, n1 + j) = g(i, j);
    std::vector<std::string> labels = l1.basis;
    labels.insert(labels.end(), l2.basis.begin(), l2.basis.end());
    return euler_lattice(std::move(gram), std::move(labels));
}

euler_lattice augmented_lattice(long long g) {
    check_genus(g, "genus");
    euler_lattice curve = curve_lattice(g);
    imat pairing = augmentation_gluing_pairing(Int(g), structure_class(),
                                               {structure_class(), point_class()});
    return glue_lattices(point_lattice(), curve, pairing);
}

euler_lattice ipg_lattice(long long g1, long long g2) {
    check_genus(g1, "genus");
    check_genus(g2, "genus");
    euler_lattice c1 = curve_lattice(g1, "1");
    euler_lattice c2 = curve_lattice(g2, "2");
    imat pairing = gluing_pairing(Int(g1), Int(g2), ideal_point_class(),
                                  {structure_class(), point_class()},
                                  {structure_class(), point_class()});
    return glue_lattices(c1, c2, pairing);
}

kclass exotic_class(long long g1, long long g2) {
    check_genus(g1, "genus");
    check_genus(g2, "genus");
    return {Int(0), Int(1), Int(0), Int(-1)};
}

std::vector<kclass> rpg_basis_vectors(long long g1, long long g2) {
    return {
        {Int(0), Int(1), Int(1), Int(-1)},
        {Int(1), Int(-g1), Int(0), Int(-g2)},
        {Int(0), Int(1), Int(1), Int(0)},
    };
}

namespace {

euler_lattice rebase_complement(const euler_lattice& ambient, const complement_result& comp,
                                const std::vector<kclass>& new_basis,
                                const std::vector<std::string>& labels) {
    /* each new basis vector must lie in the complement sublattice, and the
     * change of basis must be unimodular so the sublattice is unchanged */
    long long r = comp.lattice.rank();
    if (static_cast<long long>(new_basis.size()) != r)
        throw internal_error("rebase: basis size does not match complement rank");
    imat x(r, r);
    for (long long j = 0; j < r; ++j) {
        auto coords = solve_column_echelon(comp.embedding, new_basis[static_cast<size_t>(j)]);
        if (!coords) throw internal_error("rebase: vector not in the complement sublattice");
        for (long long i = 0; i < r; ++i) x(i, j) = (*coords)[static_cast<size_t>(i)];
    }
    Int d = det(x);
    if (d != 1 && d != -1) throw internal_error("rebase: change of basis is not unimodular");
    imat gram(r, r);
    for (long long i = 0; i < r; ++i)
        for (long long j = 0; j < r; ++j)
            gram(i, j) = chi(ambient, new_basis[static_cast<size_t>(i)],
                             new_basis[static_cast<size_t>(j)]);
    return euler_lattice(std::move(gram), labels);
}

}  // namespace

euler_lattice rpg_lattice(long long g1, long long g2) {
    euler_lattice ambient = ipg_lattice(g1, g2);
    kclass e = exotic_class(g1, g2);
    complement_result comp = orthogonal_complement(ambient, e, mutation_side::left);
    if (comp.lattice.rank() != 3)
        throw internal_error("rpg complement rank is not 3");
    std::string s1 = std::to_string(g1), s2 = std::to_string(g2);
    return rebase_complement(ambient, comp, rpg_basis_vectors(g1, g2),
                             {"[O_C2]+[O_x1]-[O_x2]",
                              "[O_C1]-" + s1 + "[O_x1]-" + s2 + "[O_x2]",
                              "[O_C2]+[O_x1]"});
}

kclass bn_class(long long g, long long h0) {
    check_genus(g, "genus");
    if (h0 < 1 || g % h0 != 0)
        throw not_bnp_extremal_error("bn_class needs h0 >= 1 dividing g");
    long long h1 = g / h0;
    long long d = h0 - h1 + g - 1;
    return {Int(h0), Int(-1), Int(-d)};
}

euler_lattice bn_complement_lattice(long long g, long long h0, long long h1) {
    check_genus(g, "genus");
    if (h0 < 1 || h1 < 1 || h0 * h1 != g)
        throw not_bnp_extremal_error("bn_complement needs h0, h1 >= 1 with h0*h1 = g");
    euler_lattice ambient = augmented_lattice(g);
    kclass e = bn_class(g, h0);
    complement_result comp = orthogonal_complement(ambient, e, mutation_side::left);
    if (comp.lattice.rank() != 2)
        throw internal_error("bn complement rank is not 2");
    std::vector<kclass> basis = {
        {Int(1), Int(0), Int(-h1)},
        {Int(1), Int(-1), Int(-h0)},
    };
    std::string sh0 = std::to_string(h0), sh1 = std::to_string(h1);
    return rebase_complement(ambient, comp, basis,
                             {"[E]-" + sh1 + "[O_x]", "[E]-[O_C]-" + sh0 + "[O_x]"});
}

euler_lattice linear_quiver_lattice(const std::vector<long long>& arrows) {
    long long n = static_cast<long long>(arrows.size()) + 1;
    imat gram = imat::identity(n);
    for (long long i = 0; i + 1 < n; ++i) gram(i, i + 1) = -arrows[static_cast<size_t>(i)];
    std::vector<std::string> labels;
    for (long long i = 0; i < n; ++i) labels.push_back("[S" + std::to_string(i) + "]");
    return euler_lattice(std::move(gram), std::move(labels));
}

}  // namespace sod
