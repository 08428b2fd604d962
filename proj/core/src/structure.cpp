#include "hmn/structure.hpp"

#include <stdexcept>

#include "hmn/homalg.hpp"

namespace hmn {

int SimpleDecomposition::length() const {
    int t = 0;
    for (const auto& p : parts) t += p.second;
    return t;
}

int SimpleDecomposition::total_dim(const Context& C) const {
    int t = 0;
    for (const auto& p : parts) t += p.second * C.simple(p.first).rep.dim;
    return t;
}

std::string SimpleDecomposition::str(const Context& C) const {
    if (parts.empty()) return "0";
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += " + ";
        if (p.second != 1) out += std::to_string(p.second) + "*";
        out += C.simple(p.first).rep.label;
    }
    return out;
}

Subspace socle_subspace(const Context& C, const Module& M) {
    const Field& F = M.field();
    Subspace via_homs(F, M.dim);
    for (const SimpleEntry& e : C.simples()) {
        HomBasis hb = hom_space(e.rep, M);
        for (const Mat& f : hb.maps) via_homs = sum(via_homs, column_space_of(f));
    }
    Subspace via_ann = Subspace::full(F, M.dim);
    for (const Element& g : C.algebra().radical_left_gens())
        via_ann = intersect(via_ann, kernel(M.act_element(C.algebra(), g)));
    if (!(via_homs == via_ann))
        throw std::logic_error("socle_subspace: intertwiner images and radical "
                               "annihilator disagree on " + M.label);
    return via_homs;
}

Subspace radical_subspace(const Context& C, const Module& M) {
    const Field& F = M.field();
    Subspace via_gens(F, M.dim);
    for (const Element& g : C.algebra().radical_right_gens())
        via_gens = sum(via_gens, column_space_of(M.act_element(C.algebra(), g)));
    Subspace via_homs = Subspace::full(F, M.dim);
    for (const SimpleEntry& e : C.simples()) {
        HomBasis hb = hom_space(M, e.rep);
        for (const Mat& f : hb.maps) via_homs = intersect(via_homs, kernel(f));
    }
    if (!(via_gens == via_homs))
        throw std::logic_error("radical_subspace: generator images and joint "
                               "intertwiner kernel disagree on " + M.label);
    return via_gens;
}

// {v : P v in W}, for a projection P out of the ambient space of the result.
static Subspace preimage_under(const Subspace& W, const Mat& P) {
    Subspace ann = kernel(W.basis()); // functionals vanishing on W, as rows
    return kernel(ann.basis() * P);
}

LoewyData loewy_data(const Context& C, const Module& M) {
    LoewyData out;
    if (M.dim == 0) return out;
    const Field& F = M.field();

    Subspace S(F, M.dim);
    while (S.dim() < M.dim) {
        Mat proj;
        Module Q = quotient_module(M, S, &proj);
        Subspace socQ = socle_subspace(C, Q);
        if (socQ.is_zero())
            throw std::logic_error("loewy_data: zero socle in a nonzero quotient of " + M.label);
        S = preimage_under(socQ, proj);
        out.soc_series.push_back(S);
    }

    Subspace R = radical_subspace(C, M);
    while (!R.is_zero()) {
        out.rad_series.push_back(R);
        Mat incl;
        Module W = submodule_module(M, R, &incl);
        Subspace r2 = radical_subspace(C, W);
        Subspace next = column_space_of(incl * r2.basis().transpose());
        if (next.dim() >= R.dim())
            throw std::logic_error("loewy_data: radical series stalls on " + M.label);
        R = next;
    }
    out.rad_series.push_back(Subspace(F, M.dim));

    if (out.soc_series.size() != out.rad_series.size())
        throw std::logic_error("loewy_data: socle and radical series lengths disagree on " + M.label);
    out.loewy_length = static_cast<int>(out.soc_series.size());

    if (out.loewy_length == 2) {
        out.has_type = true;
        out.t = decompose_semisimple(C, submodule_module(M, out.soc_series[0])).length();
        out.s = decompose_semisimple(C, quotient_module(M, out.soc_series[0])).length();
    }
    return out;
}

SimpleDecomposition decompose_semisimple(const Context& C, const Module& M) {
    if (!radical_subspace(C, M).is_zero())
        throw std::invalid_argument("decompose_semisimple: " + M.label + " has a nonzero radical");
    SimpleDecomposition out;
    int covered = 0;
    for (int s = 0; s < C.simple_count(); ++s) {
        int mu = hom_dim(C.simple(s).rep, M);
        if (mu > 0) {
            out.parts.emplace_back(s, mu);
            covered += mu * C.simple(s).rep.dim;
        }
    }
    if (covered != M.dim)
        throw std::logic_error("decompose_semisimple: multiplicities cover dimension " +
                               std::to_string(covered) + " of " + std::to_string(M.dim) +
                               " in " + M.label + "; the simple list cannot be complete");
    return out;
}

SimpleDecomposition socle_of(const Context& C, const Module& M) {
    return decompose_semisimple(C, submodule_module(M, socle_subspace(C, M)));
}

SimpleDecomposition top_of(const Context& C, const Module& M) {
    return decompose_semisimple(C, quotient_module(M, radical_subspace(C, M)));
}

bool is_indecomposable(const Context&, const Module& M) {
    HomBasis endos = hom_space(M, M);
    const int h = endos.dim();
    if (h == 0) return false; // zero module
    Mat gram(M.field(), h, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            gram.at(i, j) = (endos.maps[static_cast<std::size_t>(i)] *
                             endos.maps[static_cast<std::size_t>(j)]).trace();
    return rank(gram) == 1;
}

} // namespace hmn
