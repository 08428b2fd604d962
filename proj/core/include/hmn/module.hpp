#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hmn/algebra.hpp"
#include "hmn/linalg.hpp"

namespace hmn {

// A finite dimensional left module, presented by the four generator actions.
// Invariant for every constructor in this header: the defining equations hold
// on (act[GA], act[GB], act[GC], act[GD]); b and c act invertibly, d acts
// nilpotently with d^n = 0. All of that is implied by the equations and can be
// re-checked with relation_failures().
struct Module {
    const Field* F = nullptr;
    int dim = 0;
    std::array<Mat, 4> act;
    std::string label;

    const Field& field() const { return *F; }

    // Action of the basis monomial a^i b^j c^l d^k.
    Mat act_mono(int i, int j, int l, int k) const;
    // Action of a general algebra element (monomial ids decoded through A).
    Mat act_element(const Algebra& A, const Element& e) const;

    std::vector<std::string> relation_failures(const Relations& R) const;
    std::vector<std::string> relation_failures() const;
};

// ---- simple modules and the I_0 index set ----------------------------------

// (i,j) indexes the character b -> xi^j, c -> xi^i. The induced n-dimensional
// module Z(i,j) is simple iff xi^{j-mi} avoids {1, q, ..., q^{n-2}}.
bool in_I0(const Field& F, int i, int j);
// For (i,j) outside I_0, the unique 1 <= l <= n-1 with xi^{j-mi} = q^{l-1}.
int nonsimple_l(const Field& F, int i, int j);
// All of I_0 inside [0,mn) x [0,mn), lexicographic. Size (mn)^2 - mn(n-1).
std::vector<std::pair<int, int>> enumerate_I0(const Field& F);

// Simple module of dimension l on the standard basis m_1..m_l:
//   a m_k = alpha_k(l,i) m_{k+1} (k < l),  a m_l = 0,
//   d m_1 = 0,  d m_k = m_{k-1},
//   b m_k = q^{i+l-k} m_k,  c m_k = xi^{i+k-1} m_k.
// Requires 1 <= l <= n-1.
Module simple_M(const Field& F, int l, int i);

// Induced module on the basis a^k (x) 1, 0 <= k < n. Generator actions are
// computed by normal-forming g * a^k in the algebra and evaluating the
// right-hand factor through b -> xi^j, c -> xi^i, d -> 0. Simple iff
// (i,j) is in I_0.
Module verma_Z(const Algebra& A, int i, int j);

// Projective indecomposable of dimension 2n, standard basis v_1..v_n,u_1..u_n.
// Requires 1 <= l <= n-1.
Module projective_P(const Field& F, int l, int i);

// The two (1,1)-type modules of dimension n. Requires 1 <= l <= n-1.
Module t1_module(const Field& F, int l, int i);
Module t1bar_module(const Field& F, int l, int i);

// The one-parameter family of dimension mn on the basis x_j^k
// (1 <= j <= n, 0 <= k <= m-1, flat index k*n + j-1), coupling parameter
// eta != 0 entering the a-action at (j,k) = (n,m-1).
Module m1_module(const Field& F, int l, int i, const Cyc& eta);

// The left regular module (dimension m^2 n^4).
Module regular_module(const Algebra& A);

// ---- plumbing --------------------------------------------------------------

Module direct_sum(const Module& x, const Module& y);
Module direct_sum(const Field& F, const std::vector<const Module*>& parts);

// Closure of the row space of `seed` under the four generator actions.
Subspace generated_submodule(const Module& M, const Mat& seed);

// Restriction of the action to an action-stable subspace. `inclusion`, if
// given, receives the dim x dim(U) matrix embedding coordinates of the result
// into M. Throws std::invalid_argument if U is not action-stable.
Module submodule_module(const Module& M, const Subspace& U, Mat* inclusion = nullptr);

// Quotient by an action-stable subspace; coordinates are carried by the
// non-pivot positions of U's canonical basis. `projection`, if given,
// receives the dim(M/U) x dim matrix. Throws if U is not action-stable.
Module quotient_module(const Module& M, const Subspace& U, Mat* projection = nullptr);

// ---- c-weights and d-invariants --------------------------------------------

// M_(i) = ker(act_c - xi^i). Depends on i mod mn only.
Subspace weight_space(const Module& M, int i);
// All nonzero weight spaces, keyed by i in [0, mn). Dimensions sum to dim M.
std::map<int, Subspace> weight_decomposition(const Module& M);
// M^d = ker(act_d). Contains the d-invariant line of every simple submodule,
// so dim M^d bounds the number of socle summands from above (the bound is not
// tight: higher Loewy layers can contribute, as they do for the projectives).
Subspace d_invariants(const Module& M);

// Compact display for labels: "2", "-1/3", "xi^3", or a generic sum.
std::string cyc_label(const Cyc& c);

} // namespace hmn
