#ifndef SODLAT_MATRIX_HPP
#define SODLAT_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "sodlat/intmath.hpp"
#include "sodlat/poly.hpp"

namespace sod {

/* Dense integer matrix, row-major. Small sizes only; everything exact. */
struct imat {
    long long nrows = 0;
    long long ncols = 0;
    ivec a;

    imat() = default;
    imat(long long r, long long c) : nrows(r), ncols(c), a(static_cast<size_t>(r * c), Int(0)) {}
    imat(std::initializer_list<std::initializer_list<Int>> rows);

    static imat identity(long long n);
    static imat row_vector(const ivec& v);
    static imat column_vector(const ivec& v);

    Int& operator()(long long i, long long j) { return a[static_cast<size_t>(i * ncols + j)]; }
    const Int& operator()(long long i, long long j) const {
        return a[static_cast<size_t>(i * ncols + j)];
    }

    bool operator==(const imat& o) const {
        return nrows == o.nrows && ncols == o.ncols && a == o.a;
    }

    bool square() const { return nrows == ncols; }
    bool is_zero() const;

    imat transposed() const;
    ivec row(long long i) const;
    ivec col(long long j) const;

    std::string to_string() const;
};

imat operator*(const imat& x, const imat& y);
imat operator+(const imat& x, const imat& y);
imat operator-(const imat& x, const imat& y);
ivec operator*(const imat& m, const ivec& v);

Int dot(const ivec& x, const ivec& y);
bool is_zero(const ivec& v);

/* Bareiss fraction-free determinant. */
Int det(const imat& m);

long long rank(const imat& m);

/* Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier recursion;
 * all divisions are exact over Z. */
ipoly char_poly(const imat& m);

/* Inverse of a matrix with det = +-1 (integer entries). */
imat inverse_unimodular(const imat& m);

/* Basis of { x in Z^n : M x = 0 } as columns, in column-echelon (HNF) form.
 * The kernel of an integer matrix is automatically a saturated sublattice. */
imat integer_kernel(const imat& m);

/* Diagonal of the Smith normal form, nonnegative, d1 | d2 | ... */
ivec smith_normal_form(const imat& m);

/* Solve K x = b where K is a column-echelon matrix as produced by
 * integer_kernel; nullopt if b is not in the column span over Z. */
std::optional<ivec> solve_column_echelon(const imat& k, const ivec& b);

/* (#positive, #negative, #zero) eigenvalues of a symmetric integer matrix,
 * via Descartes counts on the (real-rooted) characteristic polynomial. */
struct signature_t {
    long long positive = 0, negative = 0, zero = 0;
    bool operator==(const signature_t&) const = default;
};
signature_t symmetric_signature(const imat& m);

}  // namespace sod

#endif
