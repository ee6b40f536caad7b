#include "sodlat/lattice.hpp"

namespace sod {

euler_lattice::euler_lattice(imat g, std::vector<std::string> labels)
    : gram(std::move(g)), basis(std::move(labels)) {
    if (!gram.square()) throw usage_error("Gram matrix must be square");
    if (static_cast<long long>(basis.size()) != gram.nrows)
        throw usage_error("basis label count does not match rank");
    determinant = det(gram);
}

euler_lattice::euler_lattice(imat g) {
    if (!g.square()) throw usage_error("Gram matrix must be square");
    std::vector<std::string> labels;
    for (long long i = 0; i < g.nrows; ++i) labels.push_back("e" + std::to_string(i));
    *this = euler_lattice(std::move(g), std::move(labels));
}

Int chi(const euler_lattice& l, const kclass& v, const kclass& w) {
    if (static_cast<long long>(v.size()) != l.rank() ||
        static_cast<long long>(w.size()) != l.rank())
        throw usage_error("class length does not match lattice rank");
    return dot(v, l.gram * w);
}

serre_data serre_analysis(const euler_lattice& l) {
    if (!l.unimodular())
        throw non_unimodular_error("Serre operator needs |det(gram)| = 1, got det = " +
                                   l.determinant.str());
    serre_data out;
    out.serre_matrix = inverse_unimodular(l.gram) * l.gram.transposed();
    out.characteristic_polynomial = char_poly(out.serre_matrix);
    out.quasiunipotent = is_cyclotomic_product(out.characteristic_polynomial);
    ipoly tm1_pow = ipoly::constant(1);
    for (long long i = 0; i < l.rank(); ++i) tm1_pow = tm1_pow * ipoly::linear(1);
    out.unipotent = (out.characteristic_polynomial == tm1_pow);
    return out;
}

kclass mutate(const euler_lattice& l, const kclass& e, const kclass& v, mutation_side side) {
    if (chi(l, e, e) != 1)
        throw not_exceptional_error("mutation center must satisfy chi(e,e) = 1");
    Int coef = side == mutation_side::right ? chi(l, v, e) : chi(l, e, v);
    kclass out = v;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= coef * e[i];
    return out;
}

complement_result orthogonal_complement(const euler_lattice& l, const kclass& e,
                                        mutation_side side) {
    if (static_cast<long long>(e.size()) != l.rank())
        throw usage_error("class length does not match lattice rank");
    if (is_zero(e)) throw usage_error("orthogonal complement of the zero class");
    /* left: (A e)^T v = 0;  right: (A^T e)^T v = 0 */
    ivec functional = side == mutation_side::left ? l.gram * e : l.gram.transposed() * e;
    imat kernel = integer_kernel(imat::row_vector(functional));
    imat sub_gram(kernel.ncols, kernel.ncols);
    for (long long i = 0; i < kernel.ncols; ++i)
        for (long long j = 0; j < kernel.ncols; ++j)
            sub_gram(i, j) = dot(kernel.col(i), l.gram * kernel.col(j));
    std::vector<std::string> labels;
    for (long long i = 0; i < kernel.ncols; ++i) labels.push_back("c" + std::to_string(i));
    return {euler_lattice(std::move(sub_gram), std::move(labels)), kernel};
}

class_predicate_result class_predicates(const euler_lattice& l, const kclass& v) {
    class_predicate_result out;
    out.chi_self = chi(l, v, v);
    out.numerically_exceptional = (out.chi_self == 1);
    out.numerically_2spherical = (out.chi_self == 2);
    return out;
}

nlohmann::ordered_json lattice_to_json(const euler_lattice& l) {
    nlohmann::ordered_json j;
    j["basis"] = l.basis;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (long long i = 0; i < l.rank(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (long long k = 0; k < l.rank(); ++k) row.push_back(to_ll(l.gram(i, k)));
        rows.push_back(row);
    }
    j["gram"] = rows;
    return j;
}

euler_lattice lattice_from_json(const nlohmann::ordered_json& j) {
    if (!j.contains("gram") || !j["gram"].is_array())
        throw usage_error("lattice JSON needs a \"gram\" array");
    const auto& rows = j["gram"];
    long long n = static_cast<long long>(rows.size());
    imat gram(n, n);
    for (long long i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<long long>(rows[i].size()) != n)
            throw usage_error("lattice JSON gram must be a square integer matrix");
        for (long long k = 0; k < n; ++k) {
            if (!rows[i][k].is_number_integer())
                throw usage_error("lattice JSON gram entries must be integers");
            gram(i, k) = Int(rows[i][k].get<long long>());
        }
    }
    std::vector<std::string> labels;
    if (j.contains("basis")) {
        for (const auto& b : j["basis"]) labels.push_back(b.get<std::string>());
        if (static_cast<long long>(labels.size()) != n)
            throw usage_error("lattice JSON basis length does not match gram size");
        return euler_lattice(std::move(gram), std::move(labels));
    }
    return euler_lattice(std::move(gram));
}

}  // namespace sod
