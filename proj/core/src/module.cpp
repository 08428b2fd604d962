#include "hmn/module.hpp"

#include <sstream>
#include <stdexcept>

namespace hmn {

namespace {

int norm_mod(int v, int mod) {
    int r = v % mod;
    return r < 0 ? r + mod : r;
}

std::string param_label(const char* name, int l, int i, int N) {
    std::ostringstream os;
    os << name << "(" << l << "," << norm_mod(i, N) << ")";
    return os.str();
}

// d-shift on s coordinates: e_k -> e_{k-1}, e_1 -> 0 (superdiagonal ones).
Mat shift_D(const Field& F, int s) {
    Mat D(F, s, s);
    for (int p = 0; p + 1 < s; ++p) D.at(p, p + 1) = F.one();
    return D;
}

// n x n cyclic lower shift with weights w_1..w_n: subdiagonal w_1..w_{n-1},
// corner (1,n) = w_n. Shape shared by X_{l,i}, Z_{l,i}.
Mat cyclic_lower(const Field& F, const std::vector<Cyc>& w) {
    const int s = static_cast<int>(w.size());
    Mat A(F, s, s);
    for (int p = 0; p + 1 < s; ++p) A.at(p + 1, p) = w[static_cast<std::size_t>(p)];
    A.at(0, s - 1) = w[static_cast<std::size_t>(s) - 1];
    return A;
}

Mat x_matrix(const Field& F, int l, int i) {
    Coeffs cf(F, l, i);
    std::vector<Cyc> w;
    for (int k = 1; k <= F.n(); ++k) w.push_back(cf.gamma(k));
    return cyclic_lower(F, w);
}

Mat z_matrix(const Field& F, int l, int i) {
    Coeffs cf(F, l, i);
    std::vector<Cyc> w;
    for (int k = 1; k <= F.n(); ++k) w.push_back(cf.alpha(k));
    return cyclic_lower(F, w);
}

// l x l strictly lower bidiagonal with subdiagonal alpha_1(l,i)..alpha_{l-1}(l,i).
Mat a_matrix(const Field& F, int l, int i) {
    Coeffs cf(F, l, i);
    Mat A(F, l, l);
    for (int k = 1; k < l; ++k) A.at(k, k - 1) = cf.alpha(k);
    return A;
}

void require_l(const Field& F, int l) {
    if (l < 1 || l > F.n() - 1)
        throw std::invalid_argument("module parameter l must satisfy 1 <= l <= n-1");
}

} // namespace

Mat Module::act_mono(int i, int j, int l, int k) const {
    return act[GA].pow(i) * act[GB].pow(j) * act[GC].pow(l) * act[GD].pow(k);
}

Mat Module::act_element(const Algebra& A, const Element& e) const {
    Mat out(*F, dim, dim);
    for (const auto& [id, c] : e.t) {
        auto [i, j, l, k] = A.mono_parts(static_cast<int>(id));
        out = out + act_mono(i, j, l, k).scaled(c);
    }
    return out;
}

std::vector<std::string> Module::relation_failures(const Relations& R) const {
    for (const Mat& g : act)
        if (g.rows() != dim || g.cols() != dim)
            throw std::invalid_argument("action matrices must be dim x dim");
    return R.check_matrices(act);
}

std::vector<std::string> Module::relation_failures() const {
    Relations R(*F);
    return relation_failures(R);
}

bool in_I0(const Field& F, int i, int j) {
    // xi^{j-mi} must avoid {q^0, ..., q^{n-2}} = {xi^{mt} : 0 <= t <= n-2}.
    int r = norm_mod(j - F.m() * i, F.N());
    return !(r % F.m() == 0 && r / F.m() <= F.n() - 2);
}

int nonsimple_l(const Field& F, int i, int j) {
    int r = norm_mod(j - F.m() * i, F.N());
    if (r % F.m() != 0 || r / F.m() > F.n() - 2)
        throw std::invalid_argument("(i,j) lies in I_0");
    return r / F.m() + 1;
}

std::vector<std::pair<int, int>> enumerate_I0(const Field& F) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < F.N(); ++i)
        for (int j = 0; j < F.N(); ++j)
            if (in_I0(F, i, j)) out.emplace_back(i, j);
    return out;
}

Module simple_M(const Field& F, int l, int i) {
    require_l(F, l);
    Coeffs cf(F, l, i);
    Module M;
    M.F = &F;
    M.dim = l;
    Mat A(F, l, l);
    for (int k = 1; k < l; ++k) A.at(k, k - 1) = cf.alpha(k);
    std::vector<Cyc> b, c;
    for (int k = 1; k <= l; ++k) {
        b.push_back(F.q_pow(i + l - k));
        c.push_back(F.root(i + k - 1));
    }
    M.act = {std::move(A), Mat::diagonal(F, b), Mat::diagonal(F, c), shift_D(F, l)};
    M.label = param_label("M", l, i, F.N());
    return M;
}

Module verma_Z(const Algebra& A, int i, int j) {
    const Field& F = A.field();
    const int n = F.n();
    Module M;
    M.F = &F;
    M.dim = n;
    const int gen_ids[4] = {A.mono_id(1, 0, 0, 0), A.mono_id(0, 1, 0, 0),
                            A.mono_id(0, 0, 1, 0), A.mono_id(0, 0, 0, 1)};
    for (int g = 0; g < 4; ++g) {
        Mat act(F, n, n);
        for (int k = 0; k < n; ++k) {
            Element e = A.mono_product(gen_ids[g], A.mono_id(k, 0, 0, 0));
            for (const auto& [id, coeff] : e.t) {
                auto [i2, j2, l2, k2] = A.mono_parts(static_cast<int>(id));
                if (k2 != 0) continue; // d annihilates the inducing character
                act.at(i2, k) += coeff * F.root(static_cast<long>(j) * j2 +
                                                static_cast<long>(i) * l2);
            }
        }
        M.act[static_cast<std::size_t>(g)] = std::move(act);
    }
    {
        std::ostringstream os;
        os << "Z(" << norm_mod(i, F.N()) << "," << norm_mod(j, F.N()) << ")";
        M.label = os.str();
    }
    return M;
}

Module projective_P(const Field& F, int l, int i) {
    require_l(F, l);
    const int n = F.n();
    Module M;
    M.F = &F;
    M.dim = 2 * n;
    Mat zero_n(F, n, n);
    Mat Dn = shift_D(F, n);
    M.act[GA] = Mat::block2(x_matrix(F, l, i), zero_n, Dn.pow(n - l - 1), z_matrix(F, l, i));
    std::vector<Cyc> b, c;
    for (int k = 1; k <= n; ++k) b.push_back(F.q_pow(i - k));
    for (int k = 1; k <= n; ++k) b.push_back(F.q_pow(i + l - k));
    for (int k = 1; k <= n; ++k) c.push_back(F.root(i + l - n + k - 1));
    for (int k = 1; k <= n; ++k) c.push_back(F.root(i + k - 1));
    M.act[GB] = Mat::diagonal(F, b);
    M.act[GC] = Mat::diagonal(F, c);
    M.act[GD] = Mat::block2(Dn, zero_n, zero_n, Dn);
    M.label = param_label("P", l, i, F.N());
    return M;
}

Module t1_module(const Field& F, int l, int i) {
    require_l(F, l);
    const int n = F.n();
    Module M;
    M.F = &F;
    M.dim = n;
    std::vector<Cyc> b, c;
    for (int k = 1; k <= n; ++k) {
        b.push_back(F.q_pow(i + l - k));
        c.push_back(F.root(i + k - 1));
    }
    M.act = {z_matrix(F, l, i), Mat::diagonal(F, b), Mat::diagonal(F, c), shift_D(F, n)};
    M.label = param_label("T1", l, i, F.N());
    return M;
}

Module t1bar_module(const Field& F, int l, int i) {
    require_l(F, l);
    const int n = F.n();
    Module M;
    M.F = &F;
    M.dim = n;
    // Corner coupling: (1, n-l) entry of the l x (n-l) lower-left block.
    Mat T(F, l, n - l);
    T.at(0, n - l - 1) = F.one();
    M.act[GA] = Mat::block2(a_matrix(F, n - l, i + l - n), Mat(F, n - l, l), T, a_matrix(F, l, i));
    M.act[GD] = Mat::block2(shift_D(F, n - l), Mat(F, n - l, l), Mat(F, l, n - l), shift_D(F, l));
    std::vector<Cyc> b, c;
    for (int k = 1; k <= n; ++k) {
        b.push_back(F.q_pow(i - k));
        c.push_back(F.root(i + l - n + k - 1));
    }
    M.act[GB] = Mat::diagonal(F, b);
    M.act[GC] = Mat::diagonal(F, c);
    M.label = param_label("T1bar", l, i, F.N());
    return M;
}

Module m1_module(const Field& F, int l, int i, const Cyc& eta) {
    require_l(F, l);
    if (eta.is_zero()) throw std::invalid_argument("eta must be nonzero");
    const int n = F.n(), m = F.m();
    Coeffs cf(F, l, i);
    Module M;
    M.F = &F;
    M.dim = m * n;
    auto idx = [n](int j, int k) { return k * n + (j - 1); }; // j = 1..n, k = 0..m-1
    Mat A(F, m * n, m * n), D(F, m * n, m * n);
    std::vector<Cyc> b(static_cast<std::size_t>(m) * n), c(static_cast<std::size_t>(m) * n);
    for (int k = 0; k < m; ++k) {
        for (int j = 1; j <= n; ++j) {
            const int p = idx(j, k);
            b[static_cast<std::size_t>(p)] = F.q_pow(i + l - j);
            c[static_cast<std::size_t>(p)] = F.root(i + k * n + j - 1);
            if (j < n) {
                A.at(idx(j + 1, k), p) = cf.alpha(j);
            } else {
                A.at(idx(1, k), p) = cf.alpha(n);
                if (k < m - 1)
                    A.at(idx(1, k + 1), p) = F.one();
                else
                    A.at(idx(1, 0), p) = eta;
            }
            if (j > 1) D.at(idx(j - 1, k), p) = F.one();
        }
    }
    M.act = {std::move(A), Mat::diagonal(F, b), Mat::diagonal(F, c), std::move(D)};
    {
        std::ostringstream os;
        os << "M1(" << l << "," << norm_mod(i, F.N()) << "," << cyc_label(eta) << ")";
        M.label = os.str();
    }
    return M;
}

Module regular_module(const Algebra& A) {
    Module M;
    M.F = &A.field();
    M.dim = A.dim();
    for (int g = 0; g < 4; ++g)
        M.act[static_cast<std::size_t>(g)] = A.left_regular(A.gen(static_cast<Gen>(g)));
    M.label = "H";
    return M;
}

Module direct_sum(const Module& x, const Module& y) {
    if (x.F != y.F) throw std::invalid_argument("direct_sum: field mismatch");
    const Field& F = *x.F;
    Module M;
    M.F = &F;
    M.dim = x.dim + y.dim;
    for (int g = 0; g < 4; ++g) {
        auto gi = static_cast<std::size_t>(g);
        M.act[gi] = Mat::block2(x.act[gi], Mat(F, x.dim, y.dim), Mat(F, y.dim, x.dim), y.act[gi]);
    }
    M.label = x.label + " + " + y.label;
    return M;
}

Module direct_sum(const Field& F, const std::vector<const Module*>& parts) {
    Module M;
    M.F = &F;
    M.dim = 0;
    for (int g = 0; g < 4; ++g) M.act[static_cast<std::size_t>(g)] = Mat(F, 0, 0);
    M.label = "0";
    bool first = true;
    for (const Module* p : parts) {
        M = first ? *p : direct_sum(M, *p);
        first = false;
    }
    return M;
}

Subspace generated_submodule(const Module& M, const Mat& seed) {
    Subspace span = Subspace::row_space(seed);
    for (;;) {
        Mat stacked = span.basis();
        for (int g = 0; g < 4; ++g)
            stacked = Mat::vstack(stacked, span.basis() * M.act[static_cast<std::size_t>(g)].transpose());
        Subspace next = Subspace::row_space(stacked);
        if (next.dim() == span.dim()) return next;
        span = next;
    }
}

namespace {

bool action_stable(const Module& M, const Subspace& U) {
    for (int g = 0; g < 4; ++g) {
        Mat imgs = U.basis() * M.act[static_cast<std::size_t>(g)].transpose();
        for (int r = 0; r < imgs.rows(); ++r)
            if (!U.contains(imgs.row(r))) return false;
    }
    return true;
}

} // namespace

Module submodule_module(const Module& M, const Subspace& U, Mat* inclusion) {
    if (U.ambient() != M.dim) throw std::invalid_argument("submodule: ambient mismatch");
    if (!action_stable(M, U)) throw std::invalid_argument("submodule: subspace not action-stable");
    const Field& F = *M.F;
    Module S;
    S.F = &F;
    S.dim = U.dim();
    for (int g = 0; g < 4; ++g) {
        Mat imgs = U.basis() * M.act[static_cast<std::size_t>(g)].transpose();
        Mat R(F, S.dim, S.dim);
        for (int r = 0; r < S.dim; ++r) {
            auto co = U.coords(imgs.row(r));
            for (int s = 0; s < S.dim; ++s) R.at(s, r) = (*co)[static_cast<std::size_t>(s)];
        }
        S.act[static_cast<std::size_t>(g)] = std::move(R);
    }
    S.label = "sub(" + M.label + ")";
    if (inclusion) *inclusion = U.basis().transpose();
    return S;
}

Module quotient_module(const Module& M, const Subspace& U, Mat* projection) {
    if (U.ambient() != M.dim) throw std::invalid_argument("quotient: ambient mismatch");
    if (!action_stable(M, U)) throw std::invalid_argument("quotient: subspace not action-stable");
    const Field& F = *M.F;
    const std::vector<int> free = U.free_columns();
    const int qd = static_cast<int>(free.size());
    // pi(w) = residual of w mod U, read off at the free coordinates.
    Mat P(F, qd, M.dim);
    for (int s = 0; s < M.dim; ++s) {
        std::vector<Cyc> e(static_cast<std::size_t>(M.dim), F.zero());
        e[static_cast<std::size_t>(s)] = F.one();
        std::vector<Cyc> res = U.reduce(std::move(e));
        for (int r = 0; r < qd; ++r) P.at(r, s) = res[static_cast<std::size_t>(free[static_cast<std::size_t>(r)])];
    }
    Module Q;
    Q.F = &F;
    Q.dim = qd;
    for (int g = 0; g < 4; ++g) {
        // Quotient action: project the action of each free-coordinate vector.
        Mat R(F, qd, qd);
        for (int r = 0; r < qd; ++r) {
            std::vector<Cyc> img =
                M.act[static_cast<std::size_t>(g)].col(free[static_cast<std::size_t>(r)]);
            std::vector<Cyc> res = U.reduce(std::move(img));
            for (int s = 0; s < qd; ++s)
                R.at(s, r) = res[static_cast<std::size_t>(free[static_cast<std::size_t>(s)])];
        }
        Q.act[static_cast<std::size_t>(g)] = std::move(R);
    }
    Q.label = "quot(" + M.label + ")";
    if (projection) *projection = std::move(P);
    return Q;
}

Subspace weight_space(const Module& M, int i) {
    Mat A = M.act[GC] - Mat::identity(*M.F, M.dim).scaled(M.F->root(i));
    return kernel(A);
}

std::map<int, Subspace> weight_decomposition(const Module& M) {
    std::map<int, Subspace> out;
    for (int i = 0; i < M.F->N(); ++i) {
        Subspace W = weight_space(M, i);
        if (!W.is_zero()) out.emplace(i, std::move(W));
    }
    return out;
}

Subspace d_invariants(const Module& M) { return kernel(M.act[GD]); }

std::string cyc_label(const Cyc& c) {
    if (c.is_zero()) return "0";
    if (c.is_rational()) {
        std::string s = rat_to_string(c.rational_part());
        if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
        return s;
    }
    const auto& co = c.coords();
    int nonzero = 0, power = 0;
    for (std::size_t k = 0; k < co.size(); ++k)
        if (co[k] != 0) {
            ++nonzero;
            power = static_cast<int>(k);
        }
    if (nonzero == 1 && co[static_cast<std::size_t>(power)] == 1) {
        std::ostringstream os;
        os << "xi^" << power;
        return os.str();
    }
    return c.str();
}

} // namespace hmn
