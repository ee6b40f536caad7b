#ifndef SODLAT_GRADED_HPP
#define SODLAT_GRADED_HPP

#include <initializer_list>
#include <map>
#include <string>

#include "json.hpp"
#include "sodlat/errors.hpp"

namespace sod {

/* Finitely supported map degree -> dimension.  Hom tables are keyed by
 * cohomological degree (Ext^i at key i); Hochschild tables are keyed by
 * shift (a summand k^d[s] at key s, so k[-2] sits at key -2). */
struct graded_dims {
    std::map<int, long long> dims;

    graded_dims() = default;
    graded_dims(std::initializer_list<std::pair<const int, long long>> init);

    long long at(int degree) const;
    void add(int degree, long long dim);

    bool empty() const { return dims.empty(); }
    int min_degree() const;
    int max_degree() const;
    long long total() const;
    /* sum of (-1)^degree * dim */
    long long euler_characteristic() const;
    /* degree -> degree + by under [1]^-by ... i.e. keys shift by `by` */
    graded_dims shifted(int by) const;
    graded_dims plus(const graded_dims& other) const;

    bool operator==(const graded_dims&) const = default;

    std::string to_string() const;
    nlohmann::ordered_json to_json() const;
    static graded_dims from_json(const nlohmann::ordered_json& j);
};

}  // namespace sod

#endif
