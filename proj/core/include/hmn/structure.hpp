#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hmn/context.hpp"

namespace hmn {

// Multiset of simple summands of a semisimple module.
struct SimpleDecomposition {
    std::vector<std::pair<int, int>> parts; // (simple index, multiplicity > 0)

    int length() const; // number of summands counted with multiplicity
    int total_dim(const Context& C) const;
    std::string str(const Context& C) const; // e.g. "M(1,0) + 2*M(1,2)"
    bool operator==(const SimpleDecomposition& o) const { return parts == o.parts; }
};

// Largest semisimple submodule. Computed two independent ways - the sum of
// the images of all intertwiners out of the classified simples, and the
// joint kernel of the radical's left generators - which must agree; a
// mismatch throws std::logic_error, since it would mean the simple list or
// the radical is wrong.
Subspace socle_subspace(const Context& C, const Module& M);

// J*M, the sum of the images of the radical's right generators; cross-checked
// as the joint kernel of all intertwiners from M into the simples (same
// failure contract as socle_subspace).
Subspace radical_subspace(const Context& C, const Module& M);

// Ascending socle series soc M < soc^2 M < ... < M and descending radical
// series rad M > rad^2 M > ... > 0, both of length rl(M) (the final entries,
// all of M and the zero subspace, are included). For rl(M) = 2 the (s,t)-type
// is populated: s = length of M/soc M, t = length of soc M.
struct LoewyData {
    std::vector<Subspace> soc_series;
    std::vector<Subspace> rad_series;
    int loewy_length = 0;
    bool has_type = false;
    int s = 0, t = 0;
};
LoewyData loewy_data(const Context& C, const Module& M);

// Multiplicity of S = dim Hom(S, M), valid because dim End(S) = 1 is asserted
// when the Context is built. Throws std::invalid_argument if rad M != 0 and
// std::logic_error if the multiplicities do not exhaust dim M (which would
// mean the simple list is incomplete).
SimpleDecomposition decompose_semisimple(const Context& C, const Module& M);

// Decompositions of soc M and of M/rad M.
SimpleDecomposition socle_of(const Context& C, const Module& M);
SimpleDecomposition top_of(const Context& C, const Module& M);

// dim(End M / rad End M) == 1. The radical of the intertwiner algebra is the
// kernel of the exact trace form (x, y) -> tr(xy) (characteristic zero).
bool is_indecomposable(const Context& C, const Module& M);

} // namespace hmn
