#include "sodlat/graded.hpp"

#include <sstream>

namespace sod {

graded_dims::graded_dims(std::initializer_list<std::pair<const int, long long>> init) {
    for (const auto& [deg, dim] : init) add(deg, dim);
}

long long graded_dims::at(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
}

void graded_dims::add(int degree, long long dim) {
    if (dim < 0) throw usage_error("graded dimension must be nonnegative");
    if (dim == 0) return;
    dims[degree] += dim;
}

int graded_dims::min_degree() const {
    if (dims.empty()) throw usage_error("min_degree of the zero table");
    return dims.begin()->first;
}

int graded_dims::max_degree() const {
    if (dims.empty()) throw usage_error("max_degree of the zero table");
    return dims.rbegin()->first;
}

long long graded_dims::total() const {
    long long t = 0;
    for (const auto& [deg, dim] : dims) t += dim;
    return t;
}

long long graded_dims::euler_characteristic() const {
    long long t = 0;
    for (const auto& [deg, dim] : dims) t += (deg % 2 == 0 ? dim : -dim);
    return t;
}

graded_dims graded_dims::shifted(int by) const {
    graded_dims out;
    for (const auto& [deg, dim] : dims) out.dims[deg + by] = dim;
    return out;
}

graded_dims graded_dims::plus(const graded_dims& other) const {
    graded_dims out = *this;
    for (const auto& [deg, dim] : other.dims) out.add(deg, dim);
    return out;
}

std::string graded_dims::to_string() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [deg, dim] : dims) {
        if (!first) out << ", ";
        out << deg << ": " << dim;
        first = false;
    }
    out << "}";
    return out.str();
}

nlohmann::ordered_json graded_dims::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [deg, dim] : dims) j[std::to_string(deg)] = dim;
    return j;
}

graded_dims graded_dims::from_json(const nlohmann::ordered_json& j) {
    graded_dims out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.add(std::stoi(it.key()), it.value().get<long long>());
    return out;
}

}  // namespace sod
