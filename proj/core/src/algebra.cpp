#include "hmn/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hmn {

void el_axpy(Element& dst, const Element& src, const Cyc& coeff) {
    if (coeff.is_zero() || src.t.empty()) return;
    Element out;
    out.t.reserve(dst.t.size() + src.t.size());
    std::size_t i = 0, j = 0;
    while (i < dst.t.size() || j < src.t.size()) {
        if (j >= src.t.size() ||
            (i < dst.t.size() && dst.t[i].first < src.t[j].first)) {
            out.t.push_back(dst.t[i++]);
        } else if (i >= dst.t.size() || src.t[j].first < dst.t[i].first) {
            out.t.emplace_back(src.t[j].first, src.t[j].second * coeff);
            if (out.t.back().second.is_zero()) out.t.pop_back();
            ++j;
        } else {
            Cyc v = dst.t[i].second + src.t[j].second * coeff;
            if (!v.is_zero()) out.t.emplace_back(dst.t[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

namespace {
Element el_scaled(const Element& x, const Cyc& c) {
    Element r;
    el_axpy(r, x, c);
    return r;
}
} // namespace

Relations::Relations(const Field& F) : f_(&F) {
    const long n = F.n(), m = F.m(), N = F.N();
    auto word_pow = [](int g, long k) { return std::vector<int>(static_cast<std::size_t>(k), g); };
    auto add = [&](std::string name, std::vector<RelTerm> terms) {
        rels_.push_back(Relation{std::move(name), std::move(terms)});
    };
    const Cyc one = F.one(), minus = F.integer(-1);
    const Cyc q = F.q_pow(1), xi = F.root(1);

    add("a-power", {{one, word_pow(GA, n)}, {minus, word_pow(GB, n)}, {one, {}}});
    add("b-order", {{one, word_pow(GB, N)}, {minus, {}}});
    add("c-order", {{one, word_pow(GC, N)}, {minus, {}}});
    add("d-nilpotence", {{one, word_pow(GD, n)}});
    add("ab-commutation", {{one, {GA, GB}}, {-q, {GB, GA}}});
    add("dc-commutation", {{one, {GD, GC}}, {-xi, {GC, GD}}});
    add("bc-commutation", {{one, {GB, GC}}, {minus, {GC, GB}}});
    add("bd-commutation", {{one, {GB, GD}}, {-q, {GD, GB}}});
    {
        std::vector<RelTerm> terms{{one, {GA, GD}}, {minus, {GD, GA}}, {minus, {GB}}};
        terms.push_back({one, word_pow(GC, m)});
        add("ad-bracket", std::move(terms));
    }
    {
        // ac = xi^{-1} ca + kappa (c^{m+1} - q b c) d^{n-1},
        // kappa = (xi^{-1} - xi^{n-1}) / (n-1)!_q.
        Cyc kappa = (F.root(-1) - F.root(n - 1)) / F.q_fact(n - 1);
        std::vector<RelTerm> terms{{one, {GA, GC}}, {-F.root(-1), {GC, GA}}};
        std::vector<int> w1 = word_pow(GC, m + 1);
        auto tail = word_pow(GD, n - 1);
        w1.insert(w1.end(), tail.begin(), tail.end());
        terms.push_back({-kappa, std::move(w1)});
        std::vector<int> w2{GB, GC};
        w2.insert(w2.end(), tail.begin(), tail.end());
        terms.push_back({kappa * q, std::move(w2)});
        add("ac-bracket", std::move(terms));
    }
}

std::vector<std::string> Relations::check_matrices(const std::array<Mat, 4>& g) const {
    std::vector<std::string> bad;
    const int d = g[0].rows();
    for (const auto& m : g)
        if (m.rows() != d || m.cols() != d)
            throw std::invalid_argument("generator matrices must be square of equal size");
    const Mat one = Mat::identity(*f_, d);
    const Mat zero(*f_, d, d);
    for (const auto& rel : rels_) {
        Mat v = eval_relation<Mat>(
            rel, g, one, zero, [](const Mat& x, const Mat& y) { return x * y; },
            [](Mat& acc, const Mat& x, const Cyc& c) { acc = acc + x.scaled(c); });
        if (!v.is_zero()) bad.push_back(rel.name);
    }
    return bad;
}

std::vector<std::string> Relations::check_scalars(const std::array<Cyc, 4>& g) const {
    std::vector<std::string> bad;
    for (const auto& rel : rels_) {
        Cyc v = eval_relation<Cyc>(
            rel, g, f_->one(), f_->zero(),
            [](const Cyc& x, const Cyc& y) { return x * y; },
            [](Cyc& acc, const Cyc& x, const Cyc& c) { acc += x * c; });
        if (!v.is_zero()) bad.push_back(rel.name);
    }
    return bad;
}

Algebra::Algebra(const Field& F)
    : f_(&F), m_(F.m()), n_(F.n()), N_(F.N()),
      dim_(F.m() * F.m() * F.n() * F.n() * F.n() * F.n()), rels_(F),
      kappa_prime_((F.one() - F.root(F.n())) / F.q_fact(F.n() - 1)) {
    rma_.resize(static_cast<std::size_t>(dim_));
    // prod_ is sized on first use; dim^2 entries.
}

int Algebra::mono_id(int i, int j, int l, int k) const {
    return ((i * N_ + j) * N_ + l) * n_ + k;
}

std::array<int, 4> Algebra::mono_parts(int id) const {
    int k = id % n_;
    id /= n_;
    int l = id % N_;
    id /= N_;
    int j = id % N_;
    id /= N_;
    return {id, j, l, k};
}

std::string Algebra::mono_str(int id) const {
    auto [i, j, l, k] = mono_parts(id);
    std::ostringstream os;
    auto emit = [&](const char* gname, int e) {
        if (e == 0) return;
        if (os.tellp() > 0) os << " ";
        os << gname;
        if (e > 1) os << "^" << e;
    };
    emit("a", i);
    emit("b", j);
    emit("c", l);
    emit("d", k);
    if (os.tellp() == 0) return "1";
    return os.str();
}

Element Algebra::unit() const { return mono(mono_id(0, 0, 0, 0)); }

Element Algebra::mono(int id) const {
    Element e;
    e.t.emplace_back(static_cast<std::uint32_t>(id), f_->one());
    return e;
}

Element Algebra::gen(int g) const {
    switch (g) {
        case GA: return mono(mono_id(1, 0, 0, 0));
        case GB: return mono(mono_id(0, 1, 0, 0));
        case GC: return mono(mono_id(0, 0, 1, 0));
        case GD: return mono(mono_id(0, 0, 0, 1));
        default: throw std::invalid_argument("bad generator index");
    }
}

// Right multiplication of the normal monomial id by a. The d and c exponents
// peel off one at a time via
//   d^k a = (d^{k-1} a) d - q^{-(k-1)} b d^{k-1} + xi^{m(k-1)} c^m d^{k-1}
//   c^l a = xi (c^{l-1} a) c - kappa' c^{l-1} (c^{m+1} - q b c) d^{n-1}
// with kappa' = (1 - xi^n)/(n-1)!_q, and the base case folds a^n = b^n - 1.
const Element& Algebra::rightmul_a(int id) const {
    auto& slot = rma_[static_cast<std::size_t>(id)];
    if (slot) return *slot;
    auto [i, j, l, k] = mono_parts(id);
    Element res;
    if (k > 0) {
        const Element& inner = rightmul_a(mono_id(i, j, l, k - 1));
        res = rightmul_gen(inner, GD);
        el_axpy(res, mono(mono_id(i, (j + 1) % N_, l, k - 1)), -f_->q_pow(-(k - 1)));
        el_axpy(res, mono(mono_id(i, j, (l + m_) % N_, k - 1)), f_->root(m_ * (k - 1)));
    } else if (l > 0) {
        const Element& inner = rightmul_a(mono_id(i, j, l - 1, 0));
        res = rightmul_gen(inner, GC);
        Element tmp = el_scaled(res, f_->root(1));
        res = std::move(tmp);
        el_axpy(res, mono(mono_id(i, j, (l + m_) % N_, n_ - 1)), -kappa_prime_);
        el_axpy(res, mono(mono_id(i, (j + 1) % N_, l, n_ - 1)), kappa_prime_ * f_->q_pow(1));
    } else {
        Cyc coef = f_->q_pow(-j);
        if (i + 1 < n_) {
            el_axpy(res, mono(mono_id(i + 1, j, 0, 0)), coef);
        } else {
            // a^n = b^n - 1
            el_axpy(res, mono(mono_id(0, (j + n_) % N_, 0, 0)), coef);
            el_axpy(res, mono(mono_id(0, j, 0, 0)), -coef);
        }
    }
    slot = std::make_unique<Element>(std::move(res));
    return *slot;
}

Element Algebra::rightmul_gen(const Element& x, int g) const {
    Element res;
    for (const auto& [id, coef] : x.t) {
        auto [i, j, l, k] = mono_parts(static_cast<int>(id));
        switch (g) {
            case GA:
                el_axpy(res, rightmul_a(static_cast<int>(id)), coef);
                break;
            case GB:
                // d^k b = q^{-k} b d^k; b commutes with c
                el_axpy(res, mono(mono_id(i, (j + 1) % N_, l, k)), coef * f_->q_pow(-k));
                break;
            case GC:
                // d^k c = xi^k c d^k
                el_axpy(res, mono(mono_id(i, j, (l + 1) % N_, k)), coef * f_->root(k));
                break;
            case GD:
                if (k + 1 < n_) el_axpy(res, mono(mono_id(i, j, l, k + 1)), coef);
                break; // d^n = 0
            default:
                throw std::invalid_argument("bad generator index");
        }
    }
    return res;
}

const Element& Algebra::mono_product(int p, int q) const {
    if (prod_.empty()) prod_.resize(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_));
    auto& slot = prod_[static_cast<std::size_t>(p) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(q)];
    if (slot) return *slot;
    auto [i, j, l, k] = mono_parts(q);
    Element cur = mono(p);
    for (int t = 0; t < i; ++t) cur = rightmul_gen(cur, GA);
    for (int t = 0; t < j; ++t) cur = rightmul_gen(cur, GB);
    for (int t = 0; t < l; ++t) cur = rightmul_gen(cur, GC);
    for (int t = 0; t < k; ++t) cur = rightmul_gen(cur, GD);
    slot = std::make_unique<Element>(std::move(cur));
    return *slot;
}

Element Algebra::mul(const Element& x, const Element& y) const {
    Element res;
    for (const auto& [px, cx] : x.t)
        for (const auto& [py, cy] : y.t)
            el_axpy(res, mono_product(static_cast<int>(px), static_cast<int>(py)), cx * cy);
    return res;
}

std::vector<Cyc> Algebra::to_dense(const Element& x) const {
    std::vector<Cyc> v(static_cast<std::size_t>(dim_), f_->zero());
    for (const auto& [id, c] : x.t) v[id] = c;
    return v;
}

Element Algebra::from_dense(const std::vector<Cyc>& v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("dense vector length mismatch");
    Element e;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) e.t.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return e;
}

std::vector<std::string> Algebra::relation_failures() const {
    std::array<Element, 4> g{gen(GA), gen(GB), gen(GC), gen(GD)};
    std::vector<std::string> bad;
    for (const auto& rel : rels_.all()) {
        Element v = eval_relation<Element>(
            rel, g, unit(), Element{},
            [this](const Element& x, const Element& y) { return mul(x, y); },
            [](Element& acc, const Element& x, const Cyc& c) { el_axpy(acc, x, c); });
        if (!v.is_zero()) bad.push_back(rel.name);
    }
    return bad;
}

namespace {
bool assoc_triple(const Algebra& A, int p, int q, int r, std::string* msg) {
    // (e_p e_q) e_r and e_p (e_q e_r) via the memoized pair table.
    Element lhs, rhs;
    for (const auto& [t, c] : A.mono_product(p, q).t)
        el_axpy(lhs, A.mono_product(static_cast<int>(t), r), c);
    for (const auto& [t, c] : A.mono_product(q, r).t)
        el_axpy(rhs, A.mono_product(p, static_cast<int>(t)), c);
    if (lhs == rhs) return true;
    if (msg) {
        std::ostringstream os;
        os << "associativity fails at (" << A.mono_str(p) << ", " << A.mono_str(q)
           << ", " << A.mono_str(r) << ")";
        *msg = os.str();
    }
    return false;
}
} // namespace

bool Algebra::associativity_exhaustive(std::string* first_failure) const {
    for (int p = 0; p < dim_; ++p)
        for (int q = 0; q < dim_; ++q)
            for (int r = 0; r < dim_; ++r)
                if (!assoc_triple(*this, p, q, r, first_failure)) return false;
    return true;
}

bool Algebra::associativity_sampled(int count, std::uint64_t seed,
                                    std::string* first_failure) const {
    std::uint64_t s = seed;
    auto next = [&s](int hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((s >> 33) % static_cast<std::uint64_t>(hi));
    };
    for (int t = 0; t < count; ++t)
        if (!assoc_triple(*this, next(dim_), next(dim_), next(dim_), first_failure))
            return false;
    return true;
}

Mat Algebra::left_regular(const Element& x) const {
    Mat L(*f_, dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (const auto& [px, cx] : x.t)
            for (const auto& [tid, tc] : mono_product(static_cast<int>(px), j).t)
                L.at(static_cast<int>(tid), j) += cx * tc;
    return L;
}

void Algebra::ensure_product_table() const {
    if (table_complete_) return;
    for (int p = 0; p < dim_; ++p)
        for (int q = 0; q < dim_; ++q) mono_product(p, q);
    table_complete_ = true;
}

const Subspace& Algebra::radical() const {
    if (rad_) return *rad_;
    ensure_product_table();
    // tau(p) = tr L_{e_p}; the Gram matrix of tr(L_x L_y) = tau(xy) follows
    // from the product table because L is multiplicative.
    std::vector<Cyc> tau(static_cast<std::size_t>(dim_), f_->zero());
    for (int p = 0; p < dim_; ++p) {
        Cyc s = f_->zero();
        for (int k = 0; k < dim_; ++k)
            for (const auto& [tid, tc] : mono_product(p, k).t)
                if (static_cast<int>(tid) == k) s += tc;
        tau[static_cast<std::size_t>(p)] = s;
    }
    Mat G(*f_, dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Cyc s = f_->zero();
            for (const auto& [tid, tc] : mono_product(i, j).t)
                s += tc * tau[tid];
            G.at(i, j) = std::move(s);
        }
    rad_ = std::make_unique<Subspace>(kernel(G));
    return *rad_;
}

const std::vector<Element>& Algebra::radical_left_gens() const {
    if (!lgens_.empty() || radical().dim() == 0) return lgens_;
    const Subspace& J = radical();
    Subspace W(*f_, dim_);
    for (int r = 0; r < J.dim() && W.dim() < J.dim(); ++r) {
        auto v = J.basis().row(r);
        if (W.contains(v)) continue;
        Element ev = from_dense(v);
        lgens_.push_back(ev);
        std::vector<std::vector<Cyc>> orbit;
        for (int k = 0; k < dim_; ++k)
            orbit.push_back(to_dense(mul(mono(k), ev)));
        W = sum(W, Subspace::row_space(Mat::from_rows(*f_, orbit, dim_)));
    }
    if (W != J) throw std::logic_error("left ideal generation of the radical failed");
    return lgens_;
}

const std::vector<Element>& Algebra::radical_right_gens() const {
    if (!rgens_.empty() || radical().dim() == 0) return rgens_;
    const Subspace& J = radical();
    Subspace W(*f_, dim_);
    for (int r = 0; r < J.dim() && W.dim() < J.dim(); ++r) {
        auto v = J.basis().row(r);
        if (W.contains(v)) continue;
        Element ev = from_dense(v);
        rgens_.push_back(ev);
        std::vector<std::vector<Cyc>> orbit;
        for (int k = 0; k < dim_; ++k)
            orbit.push_back(to_dense(mul(ev, mono(k))));
        W = sum(W, Subspace::row_space(Mat::from_rows(*f_, orbit, dim_)));
    }
    if (W != J) throw std::logic_error("right ideal generation of the radical failed");
    return rgens_;
}

Subspace Algebra::radical_power(int k) const {
    if (k < 1) throw std::invalid_argument("radical_power needs k >= 1");
    Subspace P = radical();
    const auto& gens = radical_right_gens();
    for (int t = 1; t < k; ++t) {
        if (P.dim() == 0) return P;
        // J^{t+1} = J * J^t = sum_g g * J^t since J = sum_g g H and J^t is a
        // left ideal.
        std::vector<std::vector<Cyc>> rows;
        for (const auto& g : gens)
            for (int r = 0; r < P.dim(); ++r)
                rows.push_back(to_dense(mul(g, from_dense(P.basis().row(r)))));
        P = Subspace::row_space(Mat::from_rows(*f_, rows, dim_));
    }
    return P;
}

} // namespace hmn
