#include "hmn/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hmn {

namespace {
void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}
} // namespace

Mat Mat::identity(const Field& F, int n) {
    Mat I(F, n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = F.one();
    return I;
}

Mat Mat::diagonal(const Field& F, const std::vector<Cyc>& d) {
    Mat D(F, static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < D.rows(); ++i) D.at(i, i) = d[static_cast<std::size_t>(i)];
    return D;
}

Mat Mat::from_rows(const Field& F, const std::vector<std::vector<Cyc>>& rows, int cols) {
    Mat A(F, static_cast<int>(rows.size()), cols);
    for (int i = 0; i < A.rows(); ++i) {
        require(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == cols,
                "row length mismatch");
        for (int j = 0; j < cols; ++j) A.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return A;
}

Mat Mat::operator+(const Mat& o) const {
    require(r_ == o.r_ && c_ == o.c_, "shape mismatch in +");
    Mat s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
    return s;
}

Mat Mat::operator-(const Mat& o) const {
    require(r_ == o.r_ && c_ == o.c_, "shape mismatch in -");
    Mat s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
    return s;
}

Mat Mat::operator-() const {
    Mat s = *this;
    for (auto& v : s.a_) v = -v;
    return s;
}

Mat Mat::scaled(const Cyc& sc) const {
    Mat s = *this;
    for (auto& v : s.a_) v *= sc;
    return s;
}

Mat Mat::operator*(const Mat& o) const {
    require(c_ == o.r_, "shape mismatch in *");
    require(f_ != nullptr, "empty matrix product");
    Mat p(*f_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Cyc& x = at(i, k);
            if (x.is_zero()) continue; // structured inputs are sparse
            for (int j = 0; j < o.c_; ++j) {
                const Cyc& y = o.at(k, j);
                if (y.is_zero()) continue;
                p.at(i, j) += x * y;
            }
        }
    return p;
}

Mat Mat::transpose() const {
    require(f_ != nullptr || (r_ == 0 && c_ == 0), "transpose of empty");
    if (!f_) return Mat();
    Mat t(*f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::pow(long k) const {
    require(r_ == c_, "pow needs a square matrix");
    require(k >= 0, "pow needs k >= 0");
    Mat acc = Mat::identity(*f_, r_), base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

Cyc Mat::trace() const {
    require(r_ == c_, "trace needs a square matrix");
    Cyc t;
    for (int i = 0; i < r_; ++i) t += at(i, i);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

std::vector<Cyc> Mat::apply(const std::vector<Cyc>& v) const {
    require(static_cast<int>(v.size()) == c_, "vector length mismatch in apply");
    std::vector<Cyc> w(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) {
        Cyc s;
        for (int j = 0; j < c_; ++j) {
            const Cyc& x = at(i, j);
            if (x.is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
            s += x * v[static_cast<std::size_t>(j)];
        }
        w[static_cast<std::size_t>(i)] = s.attached() ? s : (f_ ? f_->zero() : s);
    }
    return w;
}

std::vector<Cyc> Mat::row(int i) const {
    std::vector<Cyc> v(static_cast<std::size_t>(c_));
    for (int j = 0; j < c_; ++j) v[static_cast<std::size_t>(j)] = at(i, j);
    return v;
}

std::vector<Cyc> Mat::col(int j) const {
    std::vector<Cyc> v(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
    return v;
}

Mat Mat::select_cols(const std::vector<int>& js) const {
    Mat s(*f_, r_, static_cast<int>(js.size()));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < s.cols(); ++j) s.at(i, j) = at(i, js[static_cast<std::size_t>(j)]);
    return s;
}

Mat Mat::select_rows(const std::vector<int>& is) const {
    Mat s(*f_, static_cast<int>(is.size()), c_);
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < c_; ++j) s.at(i, j) = at(is[static_cast<std::size_t>(i)], j);
    return s;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    require(a.r_ == b.r_, "hstack row mismatch");
    Mat s(*a.f_, a.r_, a.c_ + b.c_);
    for (int i = 0; i < a.r_; ++i) {
        for (int j = 0; j < a.c_; ++j) s.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.c_; ++j) s.at(i, a.c_ + j) = b.at(i, j);
    }
    return s;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    require(a.c_ == b.c_, "vstack column mismatch");
    Mat s(*a.f_, a.r_ + b.r_, a.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int j = 0; j < a.c_; ++j) s.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.r_; ++i)
        for (int j = 0; j < b.c_; ++j) s.at(a.r_ + i, j) = b.at(i, j);
    return s;
}

Mat Mat::block2(const Mat& tl, const Mat& tr, const Mat& bl, const Mat& br) {
    return vstack(hstack(tl, tr), hstack(bl, br));
}

std::vector<int> rref_in_place(Mat& A) {
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < A.cols() && rank < A.rows(); ++col) {
        int p = -1;
        for (int i = rank; i < A.rows(); ++i)
            if (!A.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != rank)
            for (int j = 0; j < A.cols(); ++j) std::swap(A.at(p, j), A.at(rank, j));
        Cyc inv = A.at(rank, col).inverse();
        for (int j = col; j < A.cols(); ++j) A.at(rank, j) *= inv;
        for (int i = 0; i < A.rows(); ++i) {
            if (i == rank) continue;
            Cyc f = A.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < A.cols(); ++j) {
                if (A.at(rank, j).is_zero()) continue;
                A.at(i, j).submul(f, A.at(rank, j));
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

int rank(Mat A) { return static_cast<int>(rref_in_place(A).size()); }

Cyc det(Mat A) {
    require(A.rows() == A.cols(), "det needs a square matrix");
    const Field& F = *A.field();
    Cyc d = F.one();
    int n = A.rows();
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!A.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) return F.zero();
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(p, j), A.at(col, j));
            d = -d;
        }
        const Cyc& piv = A.at(col, col);
        d *= piv;
        Cyc inv = piv.inverse();
        for (int i = col + 1; i < n; ++i) {
            Cyc f = A.at(i, col);
            if (f.is_zero()) continue;
            f *= inv;
            for (int j = col; j < n; ++j) {
                if (A.at(col, j).is_zero()) continue;
                A.at(i, j).submul(f, A.at(col, j));
            }
        }
    }
    return d;
}

std::optional<Mat> inverse(const Mat& A) {
    require(A.rows() == A.cols(), "inverse needs a square matrix");
    const Field& F = *A.field();
    Mat aug = Mat::hstack(A, Mat::identity(F, A.rows()));
    auto piv = rref_in_place(aug);
    if (static_cast<int>(piv.size()) != A.rows()) return std::nullopt;
    std::vector<int> right(static_cast<std::size_t>(A.rows()));
    for (int j = 0; j < A.rows(); ++j) right[static_cast<std::size_t>(j)] = A.cols() + j;
    return aug.select_cols(right);
}

Subspace Subspace::row_space(Mat gens) {
    Subspace s;
    s.ambient_ = gens.cols();
    s.pivots_ = rref_in_place(gens);
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(s.pivots_.size()); ++i) keep.push_back(i);
    s.basis_ = gens.select_rows(keep);
    return s;
}

Subspace Subspace::full(const Field& F, int ambient) {
    return row_space(Mat::identity(F, ambient));
}

std::vector<int> Subspace::free_columns() const {
    std::vector<int> free;
    std::size_t t = 0;
    for (int j = 0; j < ambient_; ++j) {
        if (t < pivots_.size() && pivots_[t] == j) { ++t; continue; }
        free.push_back(j);
    }
    return free;
}

std::vector<Cyc> Subspace::reduce(std::vector<Cyc> v) const {
    for (int i = 0; i < dim(); ++i) {
        const Cyc& lead = v[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])];
        if (lead.is_zero()) continue;
        Cyc f = lead; // pivot entries are 1, so the row is subtracted f times
        for (int j = 0; j < ambient_; ++j) {
            const Cyc& b = basis_.at(i, j);
            if (b.is_zero()) continue;
            v[static_cast<std::size_t>(j)].submul(f, b);
        }
    }
    return v;
}

bool Subspace::contains(const std::vector<Cyc>& v) const {
    require(static_cast<int>(v.size()) == ambient_, "ambient mismatch");
    auto r = reduce(v);
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    require(ambient_ == other.ambient_, "ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<std::vector<Cyc>> Subspace::coords(const std::vector<Cyc>& v) const {
    require(static_cast<int>(v.size()) == ambient_, "ambient mismatch");
    // Pivot columns carry the coordinates because the basis is in RREF.
    std::vector<Cyc> co(static_cast<std::size_t>(dim()));
    std::vector<Cyc> r = v;
    for (int i = 0; i < dim(); ++i) {
        Cyc f = r[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])];
        co[static_cast<std::size_t>(i)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j < ambient_; ++j) {
            const Cyc& b = basis_.at(i, j);
            if (b.is_zero()) continue;
            r[static_cast<std::size_t>(j)].submul(f, b);
        }
    }
    for (const auto& x : r)
        if (!x.is_zero()) return std::nullopt;
    return co;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    require(u.ambient() == v.ambient(), "ambient mismatch in sum");
    if (u.dim() == 0) return v;
    if (v.dim() == 0) return u;
    return Subspace::row_space(Mat::vstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require(u.ambient() == v.ambient(), "ambient mismatch in intersect");
    if (u.dim() == 0 || v.dim() == 0) {
        const Field* F = u.dim() ? u.basis().field() : v.basis().field();
        if (!F) return u; // both zero with no field attached
        return Subspace(*F, u.ambient());
    }
    // Zassenhaus: rows [u | u] and [v | 0]; rows of the echelon form with a
    // zero left half have right halves spanning the intersection.
    const Field& F = *u.basis().field();
    int a = u.ambient();
    Mat top = Mat::hstack(u.basis(), u.basis());
    Mat bot = Mat::hstack(v.basis(), Mat(F, v.dim(), a));
    Mat z = Mat::vstack(top, bot);
    rref_in_place(z);
    std::vector<std::vector<Cyc>> rows;
    for (int i = 0; i < z.rows(); ++i) {
        bool left_zero = true;
        for (int j = 0; j < a && left_zero; ++j) left_zero = z.at(i, j).is_zero();
        if (!left_zero) continue;
        std::vector<Cyc> r(static_cast<std::size_t>(a));
        bool nonzero = false;
        for (int j = 0; j < a; ++j) {
            r[static_cast<std::size_t>(j)] = z.at(i, a + j);
            nonzero = nonzero || !r[static_cast<std::size_t>(j)].is_zero();
        }
        if (nonzero) rows.push_back(std::move(r));
    }
    return Subspace::row_space(Mat::from_rows(F, rows, a));
}

Subspace kernel(const Mat& A) {
    const Field& F = *A.field();
    Mat R = A;
    auto piv = rref_in_place(R);
    std::vector<bool> is_piv(static_cast<std::size_t>(A.cols()), false);
    for (int p : piv) is_piv[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Cyc>> rows;
    for (int fc = 0; fc < A.cols(); ++fc) {
        if (is_piv[static_cast<std::size_t>(fc)]) continue;
        std::vector<Cyc> x(static_cast<std::size_t>(A.cols()), F.zero());
        x[static_cast<std::size_t>(fc)] = F.one();
        for (int i = 0; i < static_cast<int>(piv.size()); ++i)
            x[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = -R.at(i, fc);
        rows.push_back(std::move(x));
    }
    return Subspace::row_space(Mat::from_rows(F, rows, A.cols()));
}

Subspace row_space_of(const Mat& A) { return Subspace::row_space(A); }

Subspace column_space_of(const Mat& A) { return Subspace::row_space(A.transpose()); }

std::optional<std::vector<Cyc>> solve(const Mat& A, const std::vector<Cyc>& b) {
    require(static_cast<int>(b.size()) == A.rows(), "rhs length mismatch");
    const Field& F = *A.field();
    Mat rhs(F, A.rows(), 1);
    for (int i = 0; i < A.rows(); ++i) rhs.at(i, 0) = b[static_cast<std::size_t>(i)];
    Mat aug = Mat::hstack(A, rhs);
    auto piv = rref_in_place(aug);
    if (!piv.empty() && piv.back() == A.cols()) return std::nullopt; // pivot in rhs
    std::vector<Cyc> x(static_cast<std::size_t>(A.cols()), F.zero());
    for (int i = 0; i < static_cast<int>(piv.size()); ++i)
        x[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = aug.at(i, A.cols());
    return x;
}

} // namespace hmn
