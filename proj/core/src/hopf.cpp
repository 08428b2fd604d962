#include "hmn/hopf.hpp"

#include <map>

namespace hmn {

void tn_axpy(Tensor& dst, const Tensor& src, const Cyc& coeff) {
    if (coeff.is_zero() || src.t.empty()) return;
    Tensor out;
    out.t.reserve(dst.t.size() + src.t.size());
    std::size_t i = 0, j = 0;
    while (i < dst.t.size() || j < src.t.size()) {
        if (j >= src.t.size() || (i < dst.t.size() && dst.t[i].first < src.t[j].first)) {
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

Hopf::Hopf(const Algebra& A) : A_(&A) {
    const Field& F = A.field();
    const int m = F.m(), n = F.n(), N = F.N();
    auto mono2 = [&](int p, int q) {
        return std::pair<std::uint32_t, std::uint32_t>{static_cast<std::uint32_t>(p),
                                                       static_cast<std::uint32_t>(q)};
    };
    const int id_one = A.mono_id(0, 0, 0, 0);
    const int id_a = A.mono_id(1, 0, 0, 0), id_b = A.mono_id(0, 1, 0, 0);
    const int id_c = A.mono_id(0, 0, 1, 0), id_d = A.mono_id(0, 0, 0, 1);
    const int id_cm = A.mono_id(0, 0, m, 0);

    // Delta(a) = a (x) b + 1 (x) a
    delta_[GA].t = {{mono2(id_one, id_a), F.one()}, {mono2(id_a, id_b), F.one()}};
    // Delta(b) = b (x) b
    delta_[GB].t = {{mono2(id_b, id_b), F.one()}};
    // Delta(d) = c^m (x) d + d (x) 1
    delta_[GD].t = {{mono2(id_cm, id_d), F.one()}, {mono2(id_d, id_one), F.one()}};
    // Delta(c) = c (x) c
    //          + (xi^n - 1) sum_{k=1}^{n-1} [ (k)!_q (n-k)!_q ]^{-1}
    //            c^{mk+1} d^{n-k} (x) c d^k
    {
        Tensor dc;
        Tensor base;
        base.t = {{mono2(A.mono_id(0, 0, 1, 0), A.mono_id(0, 0, 1, 0)), F.one()}};
        tn_axpy(dc, base, F.one());
        Cyc lead = F.root(n) - F.one();
        for (int k = 1; k <= n - 1; ++k) {
            Cyc coef = lead / (F.q_fact(k) * F.q_fact(n - k));
            Tensor term;
            term.t = {{mono2(A.mono_id(0, 0, (m * k + 1) % N, n - k), A.mono_id(0, 0, 1, k)),
                       F.one()}};
            tn_axpy(dc, term, coef);
        }
        delta_[GC] = std::move(dc);
    }

    eps_ = {F.zero(), F.one(), F.one(), F.zero()};

    // S(a) = -a b^{-1}, S(b) = b^{-1}, S(c) = c^{-1}, S(d) = -c^{-m} d
    s_[GA].t = {{static_cast<std::uint32_t>(A.mono_id(1, N - 1, 0, 0)), F.integer(-1)}};
    s_[GB].t = {{static_cast<std::uint32_t>(A.mono_id(0, N - 1, 0, 0)), F.one()}};
    s_[GC].t = {{static_cast<std::uint32_t>(A.mono_id(0, 0, N - 1, 0)), F.one()}};
    s_[GD].t = {{static_cast<std::uint32_t>(A.mono_id(0, 0, N - m, 1)), F.integer(-1)}};
}

Cyc Hopf::counit_mono(int id) const {
    auto [i, j, l, k] = A_->mono_parts(id);
    (void)j;
    (void)l;
    // eps(a) = eps(d) = 0 and eps(b) = eps(c) = 1
    return (i == 0 && k == 0) ? A_->field().one() : A_->field().zero();
}

Element Hopf::antipode_mono(int id) const {
    auto [i, j, l, k] = A_->mono_parts(id);
    Element r = A_->unit();
    auto times_pow = [&](const Element& base, int e) {
        for (int t = 0; t < e; ++t) r = A_->mul(r, base);
    };
    times_pow(s_[GD], k);
    times_pow(s_[GC], l);
    times_pow(s_[GB], j);
    times_pow(s_[GA], i);
    return r;
}

Tensor Hopf::tensor_of(const Element& x, const Element& y) const {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Cyc> acc;
    for (const auto& [px, cx] : x.t)
        for (const auto& [py, cy] : y.t) acc[{px, py}] = cx * cy;
    Tensor r;
    for (auto& [k, v] : acc)
        if (!v.is_zero()) r.t.emplace_back(k, std::move(v));
    return r;
}

Tensor Hopf::tensor_mul(const Tensor& x, const Tensor& y) const {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Cyc> acc;
    for (const auto& [px, cx] : x.t)
        for (const auto& [py, cy] : y.t) {
            Cyc c = cx * cy;
            const Element& L = A_->mono_product(static_cast<int>(px.first), static_cast<int>(py.first));
            const Element& R = A_->mono_product(static_cast<int>(px.second), static_cast<int>(py.second));
            for (const auto& [lp, lc] : L.t)
                for (const auto& [rp, rc] : R.t) {
                    Cyc add = c * lc * rc;
                    auto key = std::pair<std::uint32_t, std::uint32_t>{lp, rp};
                    auto it = acc.find(key);
                    if (it == acc.end())
                        acc.emplace(key, std::move(add));
                    else
                        it->second += add;
                }
        }
    Tensor r;
    for (auto& [k, v] : acc)
        if (!v.is_zero()) r.t.emplace_back(k, std::move(v));
    return r;
}

Hopf::Report Hopf::verify() const {
    Report rep;
    const Field& F = A_->field();
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.failures.push_back(std::move(msg));
    };

    // 1. The coproduct respects every defining equation inside H (x) H.
    {
        Tensor one;
        one.t = {{{static_cast<std::uint32_t>(A_->mono_id(0, 0, 0, 0)),
                   static_cast<std::uint32_t>(A_->mono_id(0, 0, 0, 0))},
                  F.one()}};
        std::array<Tensor, 4> g{delta_[0], delta_[1], delta_[2], delta_[3]};
        for (const auto& rel : A_->relations().all()) {
            Tensor v = eval_relation<Tensor>(
                rel, g, one, Tensor{},
                [this](const Tensor& x, const Tensor& y) { return tensor_mul(x, y); },
                [](Tensor& acc, const Tensor& x, const Cyc& c) { tn_axpy(acc, x, c); });
            if (!v.is_zero()) fail("coproduct breaks " + rel.name);
        }
    }

    // 2. The counit respects every defining equation.
    for (const auto& name : A_->relations().check_scalars(eps_))
        fail("counit breaks " + name);

    // 3. Counit axiom on generators: (eps (x) id) Delta = id = (id (x) eps) Delta.
    for (int g = 0; g < 4; ++g) {
        Element left, right;
        for (const auto& [pq, c] : delta_[static_cast<std::size_t>(g)].t) {
            Element mono_r = A_->mono(static_cast<int>(pq.second));
            el_axpy(left, mono_r, c * counit_mono(static_cast<int>(pq.first)));
            Element mono_l = A_->mono(static_cast<int>(pq.first));
            el_axpy(right, mono_l, c * counit_mono(static_cast<int>(pq.second)));
        }
        if (!(left == A_->gen(g))) fail("counit axiom (left) fails on generator " + std::to_string(g));
        if (!(right == A_->gen(g))) fail("counit axiom (right) fails on generator " + std::to_string(g));
    }

    // 4. Antipode axiom on generators: m(S (x) id) Delta(g) = eps(g) 1 = m(id (x) S) Delta(g).
    for (int g = 0; g < 4; ++g) {
        Element left, right;
        for (const auto& [pq, c] : delta_[static_cast<std::size_t>(g)].t) {
            el_axpy(left,
                    A_->mul(antipode_mono(static_cast<int>(pq.first)),
                            A_->mono(static_cast<int>(pq.second))),
                    c);
            el_axpy(right,
                    A_->mul(A_->mono(static_cast<int>(pq.first)),
                            antipode_mono(static_cast<int>(pq.second))),
                    c);
        }
        Element expect;
        el_axpy(expect, A_->unit(), eps_[static_cast<std::size_t>(g)]);
        if (!(left == expect)) fail("antipode axiom (left) fails on generator " + std::to_string(g));
        if (!(right == expect)) fail("antipode axiom (right) fails on generator " + std::to_string(g));
    }

    return rep;
}

} // namespace hmn
