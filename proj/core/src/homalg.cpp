#include "hmn/homalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hmn/structure.hpp"

namespace hmn {

namespace {

bool vec_is_zero(const std::vector<Cyc>& v) {
    for (const Cyc& c : v)
        if (!c.is_zero()) return false;
    return true;
}

void require_same_field(const Module& M, const Module& N, const char* who) {
    if (&M.field() != &N.field())
        throw std::invalid_argument(std::string(who) + ": modules over different field instances");
}

// Change of basis grouping the coordinates by c-eigenvalue. Every module here
// has a semisimple c-action (c has order mn), so the weight spaces fill the
// whole space; anything else means a relation failure upstream.
struct WeightForm {
    Mat B, Binv;          // x = B y between original x and weight coords y
    std::array<Mat, 4> act; // conjugated generator actions
    std::vector<int> wt;  // weight exponent per new coordinate, in [0, N)
};

WeightForm to_weight_form(const Module& M) {
    const Field& F = M.field();
    WeightForm out;
    Mat R(F, 0, M.dim);
    for (int i = 0; i < F.N(); ++i) {
        Subspace w = weight_space(M, i);
        if (w.dim() == 0) continue;
        R = Mat::vstack(R, w.basis());
        for (int r = 0; r < w.dim(); ++r) out.wt.push_back(i);
    }
    if (static_cast<int>(out.wt.size()) != M.dim)
        throw std::logic_error("weight form: the c action on " + M.label + " is not semisimple");
    out.B = R.transpose();
    auto inv = inverse(out.B);
    if (!inv)
        throw std::logic_error("weight form: dependent weight vectors on " + M.label);
    out.Binv = *inv;
    for (int g = 0; g < 4; ++g) out.act[g] = out.Binv * M.act[g] * out.B;
    for (int p = 0; p < M.dim; ++p)
        for (int r = 0; r < M.dim; ++r) {
            const Cyc want = (p == r) ? F.root(out.wt[p]) : F.zero();
            if (out.act[GC].at(p, r) != want)
                throw std::logic_error("weight form: c is not diagonal after the change of basis");
        }
    return out;
}

Mat unflatten(const Field& F, const std::vector<Cyc>& v, int rows, int cols) {
    Mat A(F, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int s = 0; s < cols; ++s) A.at(r, s) = v[static_cast<std::size_t>(r) * cols + s];
    return A;
}

std::vector<Cyc> flatten(const Mat& A) {
    std::vector<Cyc> v;
    v.reserve(static_cast<std::size_t>(A.rows()) * A.cols());
    for (int r = 0; r < A.rows(); ++r)
        for (int s = 0; s < A.cols(); ++s) v.push_back(A.at(r, s));
    return v;
}

} // namespace

HomBasis hom_space(const Module& M, const Module& N) {
    require_same_field(M, N, "hom_space");
    const Field& F = M.field();
    HomBasis out;
    out.src_dim = M.dim;
    out.dst_dim = N.dim;
    if (M.dim == 0 || N.dim == 0) return out;

    WeightForm wm = to_weight_form(M);
    WeightForm wn = to_weight_form(N);

    // Unknowns: entries F'(r, s) with matching weights; everything else is
    // forced to zero by the c-intertwining equation.
    std::vector<std::pair<int, int>> vars;
    std::vector<int> vid(static_cast<std::size_t>(N.dim) * M.dim, -1);
    for (int r = 0; r < N.dim; ++r)
        for (int s = 0; s < M.dim; ++s)
            if (wn.wt[r] == wm.wt[s]) {
                vid[static_cast<std::size_t>(r) * M.dim + s] = static_cast<int>(vars.size());
                vars.emplace_back(r, s);
            }
    if (vars.empty()) return out;

    // Remaining equations, entry by entry: (g_N F' - F' g_M)(r, s) = 0.
    std::vector<std::vector<Cyc>> rows;
    for (int g : {GA, GB, GD}) {
        const Mat& gm = wm.act[g];
        const Mat& gn = wn.act[g];
        for (int r = 0; r < N.dim; ++r)
            for (int s = 0; s < M.dim; ++s) {
                std::vector<Cyc> row(vars.size(), F.zero());
                bool nz = false;
                for (int t = 0; t < M.dim; ++t) {
                    int v = vid[static_cast<std::size_t>(r) * M.dim + t];
                    if (v >= 0 && !gm.at(t, s).is_zero()) {
                        row[static_cast<std::size_t>(v)] -= gm.at(t, s);
                        nz = true;
                    }
                }
                for (int t = 0; t < N.dim; ++t) {
                    int v = vid[static_cast<std::size_t>(t) * M.dim + s];
                    if (v >= 0 && !gn.at(r, t).is_zero()) {
                        row[static_cast<std::size_t>(v)] += gn.at(r, t);
                        nz = true;
                    }
                }
                if (nz) rows.push_back(std::move(row));
            }
    }
    Subspace K = kernel(Mat::from_rows(F, rows, static_cast<int>(vars.size())));
    if (K.dim() == 0) return out;

    // Expand to original coordinates and canonicalize the span there.
    std::vector<std::vector<Cyc>> flat;
    for (int b = 0; b < K.dim(); ++b) {
        std::vector<Cyc> coeff = K.basis().row(b);
        Mat Fp(F, N.dim, M.dim);
        for (std::size_t v = 0; v < vars.size(); ++v)
            Fp.at(vars[v].first, vars[v].second) = coeff[v];
        flat.push_back(flatten(wn.B * Fp * wm.Binv));
    }
    Subspace span = Subspace::row_space(Mat::from_rows(F, flat, N.dim * M.dim));
    for (int b = 0; b < span.dim(); ++b) {
        Mat f = unflatten(F, span.basis().row(b), N.dim, M.dim);
        for (int g = 0; g < 4; ++g)
            if (N.act[g] * f != f * M.act[g])
                throw std::logic_error("hom_space: basis map fails to intertwine (internal error)");
        out.maps.push_back(std::move(f));
    }
    return out;
}

int hom_dim(const Module& M, const Module& N) { return hom_space(M, N).dim(); }

int max_rank_on_grid(const HomBasis& H) {
    if (H.dim() == 0 || H.src_dim == 0 || H.dst_dim == 0) return 0;
    const Field& F = *H.maps[0].field();
    const int target = H.src_dim < H.dst_dim ? H.src_dim : H.dst_dim;
    const int D = H.src_dim > H.dst_dim ? H.src_dim : H.dst_dim;

    unsigned long long points = 1;
    for (int i = 0; i < H.dim(); ++i) {
        points *= static_cast<unsigned long long>(D) + 1;
        if (points > 2000000ull)
            throw std::runtime_error("max_rank_on_grid: grid larger than the exhaustive-search budget");
    }

    auto rank_at = [&](const std::vector<int>& pt) {
        Mat A(F, H.dst_dim, H.src_dim);
        for (int i = 0; i < H.dim(); ++i)
            if (pt[static_cast<std::size_t>(i)] != 0)
                A = A + H.maps[static_cast<std::size_t>(i)].scaled(F.integer(pt[static_cast<std::size_t>(i)]));
        return rank(A);
    };

    std::vector<int> pt(static_cast<std::size_t>(H.dim()), 1);
    int best = rank_at(pt); // the all-ones point almost always settles it
    if (best == target) return best;

    std::fill(pt.begin(), pt.end(), 0);
    while (true) {
        int r = rank_at(pt);
        if (r > best) {
            best = r;
            if (best == target) return best;
        }
        int j = 0;
        while (j < H.dim() && pt[static_cast<std::size_t>(j)] == D) {
            pt[static_cast<std::size_t>(j)] = 0;
            ++j;
        }
        if (j == H.dim()) break;
        ++pt[static_cast<std::size_t>(j)];
    }
    return best;
}

bool is_isomorphic(const Module& M, const Module& N) {
    require_same_field(M, N, "is_isomorphic");
    if (M.dim != N.dim) return false;
    if (M.dim == 0) return true;
    HomBasis H = hom_space(M, N);
    if (H.dim() == 0) return false;
    return max_rank_on_grid(H) == M.dim;
}

// ---- extensions ------------------------------------------------------------

Ext1 ext1(const Module& M, const Module& N) {
    require_same_field(M, N, "ext1");
    const Field& F = M.field();
    Ext1 out;
    if (M.dim == 0 || N.dim == 0) return out;

    WeightForm wm = to_weight_form(M);
    WeightForm wn = to_weight_form(N);
    const int dM = M.dim, dN = N.dim, NN = F.N();
    auto norm = [NN](int x) { return ((x % NN) + NN) % NN; };

    // With Z_c = 0 the commutation equations with c force each remaining
    // block onto fixed weight shifts: Z_b on 0, Z_d on -1, Z_a on +1 and
    // 1 - n (the second component feeds the kappa terms of the ac equation).
    std::array<std::vector<int>, 4> allowed;
    allowed[GA] = {norm(1), norm(1 - F.n())};
    allowed[GB] = {0};
    allowed[GD] = {norm(-1)};

    std::vector<std::array<int, 3>> vars; // (generator, row, col) in weight coords
    std::vector<int> vid(static_cast<std::size_t>(4) * dN * dM, -1);
    std::array<std::vector<int>, 4> vars_of;
    for (int g : {GA, GB, GD})
        for (int r = 0; r < dN; ++r)
            for (int s = 0; s < dM; ++s) {
                int shift = norm(wn.wt[static_cast<std::size_t>(r)] - wm.wt[static_cast<std::size_t>(s)]);
                bool ok = false;
                for (int a : allowed[static_cast<std::size_t>(g)]) ok = ok || (a == shift);
                if (!ok) continue;
                int id = static_cast<int>(vars.size());
                vid[(static_cast<std::size_t>(g) * dN + r) * dM + s] = id;
                vars.push_back({g, r, s});
                vars_of[static_cast<std::size_t>(g)].push_back(id);
            }

    // Cocycle equations: the top-right block of every defining relation on
    // [[g_N, Z_g], [0, g_M]] is a sum of prefix * Z * suffix products, linear
    // in the Z entries.
    std::vector<std::vector<Cyc>> rows;
    Relations R(F);
    for (const Relation& rel : R.all()) {
        std::vector<std::vector<Cyc>> ent(static_cast<std::size_t>(dN) * dM,
                                          std::vector<Cyc>(vars.size(), F.zero()));
        bool any = false;
        for (const RelTerm& term : rel.terms) {
            const int k = static_cast<int>(term.word.size());
            if (k == 0) continue;
            std::vector<Mat> pre(static_cast<std::size_t>(k) + 1), suf(static_cast<std::size_t>(k) + 1);
            pre[0] = Mat::identity(F, dN);
            for (int p = 1; p <= k; ++p)
                pre[static_cast<std::size_t>(p)] =
                    pre[static_cast<std::size_t>(p) - 1] * wn.act[static_cast<std::size_t>(term.word[static_cast<std::size_t>(p) - 1])];
            suf[static_cast<std::size_t>(k)] = Mat::identity(F, dM);
            for (int p = k - 1; p >= 0; --p)
                suf[static_cast<std::size_t>(p)] =
                    wm.act[static_cast<std::size_t>(term.word[static_cast<std::size_t>(p)])] * suf[static_cast<std::size_t>(p) + 1];
            for (int p = 0; p < k; ++p) {
                const int g = term.word[static_cast<std::size_t>(p)];
                if (g == GC) continue; // gauged away
                const Mat& L = pre[static_cast<std::size_t>(p)];
                const Mat& Sf = suf[static_cast<std::size_t>(p) + 1];
                for (int id : vars_of[static_cast<std::size_t>(g)]) {
                    const int rp = vars[static_cast<std::size_t>(id)][1];
                    const int sp = vars[static_cast<std::size_t>(id)][2];
                    for (int r = 0; r < dN; ++r) {
                        if (L.at(r, rp).is_zero()) continue;
                        Cyc lv = term.coeff * L.at(r, rp);
                        for (int s = 0; s < dM; ++s) {
                            if (Sf.at(sp, s).is_zero()) continue;
                            ent[static_cast<std::size_t>(r) * dM + s][static_cast<std::size_t>(id)] += lv * Sf.at(sp, s);
                            any = true;
                        }
                    }
                }
            }
        }
        if (!any) continue;
        for (auto& row : ent)
            if (!vec_is_zero(row)) rows.push_back(std::move(row));
    }
    Subspace K = kernel(Mat::from_rows(F, rows, static_cast<int>(vars.size())));

    // Coboundaries of the gauge: Z_g = g_N S - S g_M for weight-preserving S.
    std::vector<std::vector<Cyc>> cob;
    for (int r0 = 0; r0 < dN; ++r0)
        for (int s0 = 0; s0 < dM; ++s0) {
            if (wn.wt[static_cast<std::size_t>(r0)] != wm.wt[static_cast<std::size_t>(s0)]) continue;
            std::vector<Cyc> v(vars.size(), F.zero());
            for (int g = 0; g < 4; ++g) {
                Mat Z(F, dN, dM);
                for (int r = 0; r < dN; ++r) Z.at(r, s0) += wn.act[static_cast<std::size_t>(g)].at(r, r0);
                for (int s = 0; s < dM; ++s) Z.at(r0, s) -= wm.act[static_cast<std::size_t>(g)].at(s0, s);
                for (int r = 0; r < dN; ++r)
                    for (int s = 0; s < dM; ++s) {
                        if (Z.at(r, s).is_zero()) continue;
                        int id = vid[(static_cast<std::size_t>(g) * dN + r) * dM + s];
                        if (id < 0)
                            throw std::logic_error("ext1: coboundary escapes the variable support");
                        v[static_cast<std::size_t>(id)] += Z.at(r, s);
                    }
            }
            cob.push_back(std::move(v));
        }
    Subspace B = Subspace::row_space(Mat::from_rows(F, cob, static_cast<int>(vars.size())));
    if (!K.contains(B))
        throw std::logic_error("ext1: a coboundary fails the cocycle equations");
    out.dim = K.dim() - B.dim();

    // Canonical representatives: cocycle basis vectors reduced modulo the
    // coboundaries, kept when independent; then pushed back to the original
    // coordinates.
    Subspace span = B;
    for (int b = 0; b < K.dim(); ++b) {
        std::vector<Cyc> red = span.reduce(K.basis().row(b));
        if (vec_is_zero(red)) continue;
        span = sum(span, Subspace::row_space(Mat::from_rows(F, {red}, static_cast<int>(vars.size()))));
        std::array<Mat, 4> Z{Mat(F, dN, dM), Mat(F, dN, dM), Mat(F, dN, dM), Mat(F, dN, dM)};
        for (std::size_t v = 0; v < vars.size(); ++v)
            Z[static_cast<std::size_t>(vars[v][0])].at(vars[v][1], vars[v][2]) = red[v];
        std::array<Mat, 4> Zo;
        for (int g = 0; g < 4; ++g) Zo[static_cast<std::size_t>(g)] = wn.B * Z[static_cast<std::size_t>(g)] * wm.Binv;
        out.reps.push_back(std::move(Zo));
    }
    if (static_cast<int>(out.reps.size()) != out.dim)
        throw std::logic_error("ext1: representative count disagrees with the quotient dimension");
    for (const auto& rep : out.reps) (void)build_extension(M, N, rep); // validates the middle
    return out;
}

SES build_extension(const Module& M, const Module& N, const std::array<Mat, 4>& Z) {
    require_same_field(M, N, "build_extension");
    const Field& F = N.field();
    for (int g = 0; g < 4; ++g)
        if (Z[static_cast<std::size_t>(g)].rows() != N.dim || Z[static_cast<std::size_t>(g)].cols() != M.dim)
            throw std::invalid_argument("build_extension: block shapes must be dim(N) x dim(M)");

    Module E;
    E.F = &F;
    E.dim = N.dim + M.dim;
    for (int g = 0; g < 4; ++g)
        E.act[static_cast<std::size_t>(g)] =
            Mat::block2(N.act[static_cast<std::size_t>(g)], Z[static_cast<std::size_t>(g)],
                        Mat(F, M.dim, N.dim), M.act[static_cast<std::size_t>(g)]);
    E.label = "E(" + N.label + " | " + M.label + ")";
    auto fails = E.relation_failures();
    if (!fails.empty())
        throw std::invalid_argument("build_extension: blocks violate " + fails.front());

    SES s;
    s.sub = N;
    s.middle = E;
    s.quot = M;
    s.incl = Mat(F, E.dim, N.dim);
    for (int i = 0; i < N.dim; ++i) s.incl.at(i, i) = F.one();
    s.proj = Mat(F, M.dim, E.dim);
    for (int r = 0; r < M.dim; ++r) s.proj.at(r, N.dim + r) = F.one();
    return s;
}

std::vector<std::string> ses_failures(const SES& s) {
    std::vector<std::string> out;
    if (s.middle.dim != s.sub.dim + s.quot.dim)
        out.push_back("middle dimension is not sub + quot");
    if (s.incl.rows() != s.middle.dim || s.incl.cols() != s.sub.dim) {
        out.push_back("inclusion has the wrong shape");
        return out;
    }
    if (s.proj.rows() != s.quot.dim || s.proj.cols() != s.middle.dim) {
        out.push_back("projection has the wrong shape");
        return out;
    }
    static const char* gname[4] = {"a", "b", "c", "d"};
    for (int g = 0; g < 4; ++g) {
        if (s.middle.act[static_cast<std::size_t>(g)] * s.incl != s.incl * s.sub.act[static_cast<std::size_t>(g)])
            out.push_back(std::string("inclusion does not intertwine ") + gname[g]);
        if (s.quot.act[static_cast<std::size_t>(g)] * s.proj != s.proj * s.middle.act[static_cast<std::size_t>(g)])
            out.push_back(std::string("projection does not intertwine ") + gname[g]);
    }
    if (rank(s.incl) != s.sub.dim) out.push_back("inclusion is not injective");
    if (rank(s.proj) != s.quot.dim) out.push_back("projection is not surjective");
    if (!(column_space_of(s.incl) == kernel(s.proj)))
        out.push_back("image of the inclusion differs from the kernel of the projection");
    for (const std::string& f : s.middle.relation_failures())
        out.push_back("middle: " + f);
    return out;
}

bool ses_split(const Module& M, const Module& N, const std::array<Mat, 4>& Z) {
    require_same_field(M, N, "ses_split");
    const Field& F = N.field();
    const int dM = M.dim, dN = N.dim;
    if (dM == 0 || dN == 0) return true;
    // Splitting matrix S with g_N S - S g_M = Z_g for all four generators.
    const int unknowns = dN * dM;
    std::vector<std::vector<Cyc>> rows;
    std::vector<Cyc> rhs;
    for (int g = 0; g < 4; ++g) {
        const Mat& gn = N.act[static_cast<std::size_t>(g)];
        const Mat& gm = M.act[static_cast<std::size_t>(g)];
        for (int r = 0; r < dN; ++r)
            for (int s = 0; s < dM; ++s) {
                std::vector<Cyc> row(static_cast<std::size_t>(unknowns), F.zero());
                for (int t = 0; t < dN; ++t) row[static_cast<std::size_t>(t) * dM + s] += gn.at(r, t);
                for (int t = 0; t < dM; ++t) row[static_cast<std::size_t>(r) * dM + t] -= gm.at(t, s);
                rows.push_back(std::move(row));
                rhs.push_back(Z[static_cast<std::size_t>(g)].at(r, s));
            }
    }
    return solve(Mat::from_rows(F, rows, unknowns), rhs).has_value();
}

// ---- covers, envelopes, syzygies -------------------------------------------

CoverData projective_cover(const Context& C, const Module& M) {
    const Field& F = M.field();
    Subspace W = radical_subspace(C, M);
    std::vector<const Module*> summands;
    std::vector<Mat> kept;
    CoverData out;
    for (int si = 0; si < C.simple_count(); ++si) {
        if (W.dim() == M.dim) break;
        const SimpleEntry& e = C.simple(si);
        HomBasis hb = hom_space(e.pim, M);
        int mu = 0;
        for (const Mat& f : hb.maps) {
            Subspace grown = sum(W, column_space_of(f));
            if (grown.dim() > W.dim()) {
                W = std::move(grown);
                kept.push_back(f);
                summands.push_back(&e.pim);
                ++mu;
            }
        }
        if (mu > 0) out.parts.emplace_back(si, mu);
    }
    if (W.dim() != M.dim)
        throw std::logic_error("projective_cover: images do not reach the top of " + M.label);
    out.cover = direct_sum(F, summands);
    out.onto = Mat(F, M.dim, 0);
    for (const Mat& f : kept) out.onto = Mat::hstack(out.onto, f);
    if (rank(out.onto) != M.dim)
        throw std::logic_error("projective_cover: map onto " + M.label + " is not surjective");
    if (!(out.parts == top_of(C, M).parts))
        throw std::logic_error("projective_cover: multiplicities disagree with the top of " + M.label);
    return out;
}

EnvelopeData injective_envelope(const Context& C, const Module& M) {
    const Field& F = M.field();
    Subspace soc = socle_subspace(C, M);
    Subspace ksoc = soc; // socle not yet separated by the kept maps
    std::vector<const Module*> summands;
    std::vector<Mat> kept;
    EnvelopeData out;
    for (int si = 0; si < C.simple_count(); ++si) {
        if (ksoc.dim() == 0) break;
        const SimpleEntry& e = C.simple(si);
        HomBasis hb = hom_space(M, e.pim);
        int nu = 0;
        for (const Mat& f : hb.maps) {
            Subspace cut = intersect(ksoc, kernel(f));
            if (cut.dim() < ksoc.dim()) {
                ksoc = std::move(cut);
                kept.push_back(f);
                summands.push_back(&e.pim);
                ++nu;
            }
        }
        if (nu > 0) out.parts.emplace_back(si, nu);
    }
    if (ksoc.dim() != 0)
        throw std::logic_error("injective_envelope: maps do not separate the socle of " + M.label);
    out.envelope = direct_sum(F, summands);
    out.into = Mat(F, 0, M.dim);
    for (const Mat& f : kept) out.into = Mat::vstack(out.into, f);
    // A submodule meeting the socle trivially is zero, so the joint kernel is.
    if (rank(out.into) != M.dim)
        throw std::logic_error("injective_envelope: map out of " + M.label + " is not injective");
    if (!(out.parts == socle_of(C, M).parts))
        throw std::logic_error("injective_envelope: multiplicities disagree with the socle of " + M.label);
    return out;
}

Module syzygy(const Context& C, const Module& M) {
    CoverData cd = projective_cover(C, M);
    Module res = submodule_module(cd.cover, kernel(cd.onto));
    res.label = "Omega(" + M.label + ")";
    return res;
}

Module cosyzygy(const Context& C, const Module& M) {
    EnvelopeData ed = injective_envelope(C, M);
    Module res = quotient_module(ed.envelope, column_space_of(ed.into));
    res.label = "Omega^-1(" + M.label + ")";
    return res;
}

Module syzygy_power(const Context& C, Module M, int power, bool inverse) {
    if (power < 0) throw std::invalid_argument("syzygy_power: power must be >= 0");
    if (power == 0) return M;
    const std::string base = M.label;
    for (int k = 0; k < power && M.dim > 0; ++k)
        M = inverse ? cosyzygy(C, M) : syzygy(C, M);
    if (power > 1)
        M.label = "Omega^" + std::string(inverse ? "-" : "") + std::to_string(power) + "(" + base + ")";
    return M;
}

} // namespace hmn
