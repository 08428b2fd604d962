#pragma once

#include "hmn/field.hpp"

#include <optional>

namespace hmn {

/// Dense row-major matrix over Q(xi). All entries stay attached to the same
/// Field; a default-constructed Mat is the 0 x 0 empty matrix.
class Mat {
public:
    Mat() : f_(nullptr), r_(0), c_(0) {}
    Mat(const Field& F, int rows, int cols)
        : f_(&F), r_(rows), c_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), F.zero()) {}

    static Mat identity(const Field& F, int n);
    static Mat diagonal(const Field& F, const std::vector<Cyc>& d);
    static Mat from_rows(const Field& F, const std::vector<std::vector<Cyc>>& rows, int cols);

    int rows() const { return r_; }
    int cols() const { return c_; }
    const Field* field() const { return f_; }

    Cyc& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Cyc& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Cyc& s) const;
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat pow(long k) const; ///< square matrices, k >= 0
    Cyc trace() const;
    bool is_zero() const;

    /// v as a column vector; returns A v.
    std::vector<Cyc> apply(const std::vector<Cyc>& v) const;

    std::vector<Cyc> row(int i) const;
    std::vector<Cyc> col(int j) const;
    Mat select_cols(const std::vector<int>& js) const;
    Mat select_rows(const std::vector<int>& is) const;

    static Mat hstack(const Mat& a, const Mat& b);
    static Mat vstack(const Mat& a, const Mat& b);
    /// [[tl, tr], [bl, br]] with consistent shapes.
    static Mat block2(const Mat& tl, const Mat& tr, const Mat& bl, const Mat& br);

private:
    const Field* f_;
    int r_, c_;
    std::vector<Cyc> a_;
};

/// Reduced row echelon form in place. Pivot choice is the first row with a
/// nonzero entry in the leftmost unresolved column; division is exact, there
/// is no tolerance of any kind. Returns the pivot columns in order. Zero rows
/// end up at the bottom and are not removed.
std::vector<int> rref_in_place(Mat& A);

int rank(Mat A);
Cyc det(Mat A); ///< square input
std::optional<Mat> inverse(const Mat& A);

/// Subspace of k^ambient in canonical form: basis rows are the nonzero rows
/// of a reduced row echelon form, so equal subspaces have identical bases.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    Subspace(const Field& F, int ambient) : ambient_(ambient), basis_(F, 0, ambient) {}

    /// Canonicalizes the row span of gens.
    static Subspace row_space(Mat gens);
    static Subspace full(const Field& F, int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    std::vector<int> free_columns() const;

    bool contains(const std::vector<Cyc>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Residual after eliminating against the basis rows; zero iff contained.
    std::vector<Cyc> reduce(std::vector<Cyc> v) const;
    /// Coordinates in the basis rows, if v lies in the subspace.
    std::optional<std::vector<Cyc>> coords(const std::vector<Cyc>& v) const;

private:
    int ambient_;
    Mat basis_;
    std::vector<int> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

Subspace kernel(const Mat& A); ///< right kernel {x : A x = 0}
Subspace row_space_of(const Mat& A);
Subspace column_space_of(const Mat& A);

/// One exact solution of A x = b with all free variables zero, if consistent.
std::optional<std::vector<Cyc>> solve(const Mat& A, const std::vector<Cyc>& b);

} // namespace hmn
