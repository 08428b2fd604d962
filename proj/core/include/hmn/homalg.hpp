#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hmn/context.hpp"
#include "hmn/module.hpp"

namespace hmn {

// Basis of the intertwiner space Hom(M, N) = {F : F g_M = g_N F for all four
// generators}. Maps are dst_dim x src_dim matrices; the basis is canonical
// (reduced echelon form of the row-major flattenings), so equal spaces have
// identical bases no matter how they were computed.
struct HomBasis {
    int src_dim = 0, dst_dim = 0;
    std::vector<Mat> maps;

    int dim() const { return static_cast<int>(maps.size()); }
};

// Solved in a c-eigenbasis, where every intertwiner is block diagonal; the
// result is expressed in the original coordinates.
HomBasis hom_space(const Module& M, const Module& N);
int hom_dim(const Module& M, const Module& N);

// Largest rank attained by any k-linear combination of the basis maps,
// decided exactly: the r x r minors of a generic combination have degree at
// most r per variable, so evaluating on the integer grid {0..D}^dim with
// D = max(src_dim, dst_dim) is exhaustive. Deterministic; the all-ones point
// is probed first and enumeration short-circuits once min(src,dst) is hit.
int max_rank_on_grid(const HomBasis& H);

// True iff an invertible intertwiner exists: dimensions equal and the hom
// space attains full rank on the grid.
bool is_isomorphic(const Module& M, const Module& N);

// One extension class 0 -> N -> E -> M -> 0, represented by the off-diagonal
// blocks of the middle action [[g_N, Z_g], [0, g_M]]; Z_g is dim(N) x dim(M).
// Classes are gauge-fixed to Z_c = 0 (the restriction to k[c] always splits),
// which leaves exactly the block-diagonal coboundaries S with c_N S = S c_M.
struct Ext1 {
    int dim = 0;
    std::vector<std::array<Mat, 4>> reps; // canonical class representatives
};

// Classes of extensions of M by N (N the submodule). Cocycles are cut out by
// the off-diagonal parts of the defining equations, which are linear in the
// Z_g; the reported dimension is cocycles modulo coboundaries.
Ext1 ext1(const Module& M, const Module& N);

// A short exact sequence 0 -> sub -> middle -> quot -> 0 with explicit
// intertwining inclusion and projection.
struct SES {
    Module sub, middle, quot;
    Mat incl; // middle.dim x sub.dim
    Mat proj; // quot.dim x middle.dim
};

// Empty iff incl/proj intertwine, incl is injective, proj is surjective,
// im(incl) = ker(proj), and the middle satisfies the defining equations.
std::vector<std::string> ses_failures(const SES& s);

// Materializes the middle term of a cocycle (validated against the defining
// equations; throws std::invalid_argument on an invalid block quadruple).
SES build_extension(const Module& M, const Module& N, const std::array<Mat, 4>& Z);

// Whether the extension splits, i.e. the blocks are a coboundary.
bool ses_split(const Module& M, const Module& N, const std::array<Mat, 4>& Z);

// Projective cover P = (+) pim(S)^{mu_S} with mu_S the multiplicity of S in
// M/rad M, together with a surjection inducing an isomorphism on tops. The
// summand maps are chosen greedily from each Hom(P(S), M) basis: a candidate
// is kept iff it enlarges im + rad M, which forces exact multiplicities.
struct CoverData {
    Module cover;
    Mat onto;                               // M.dim x cover.dim, surjective
    std::vector<std::pair<int, int>> parts; // (simple index, multiplicity)
};
CoverData projective_cover(const Context& C, const Module& M);

// Injective envelope I = (+) pim(S)^{nu_S}, nu_S the multiplicity of S in
// soc M (the covers are also the injective hulls here: the algebra is
// symmetric). The embedding rows are chosen greedily from each Hom(M, P(S))
// basis: a candidate is kept iff it separates more of soc M, which forces
// exact multiplicities; the joint kernel is then a submodule meeting the
// socle trivially, hence zero.
struct EnvelopeData {
    Module envelope;
    Mat into;                               // envelope.dim x M.dim, injective
    std::vector<std::pair<int, int>> parts; // (simple index, multiplicity)
};
EnvelopeData injective_envelope(const Context& C, const Module& M);

// Kernel of the projective cover / cokernel of the injective envelope. A
// projective (equivalently injective) input yields the zero module. Minimal
// covers guarantee the result carries no projective direct summand, so the
// two operations are mutually inverse away from projectives.
Module syzygy(const Context& C, const Module& M);
Module cosyzygy(const Context& C, const Module& M);
// Omega^power (inverse = false) or Omega^{-power} (inverse = true), power >= 0.
Module syzygy_power(const Context& C, Module M, int power, bool inverse);

// The three iterated-extension families. Floor t is the middle of the unique
// extension class of floor t-1 (with shifted parameter) by the base module;
// the builder asserts dim Ext^1 = 1 and validates the floor's socle length
// before caching it. Results are memoized per (kind, l, i, eta, t).
enum class TowerKind { T, Tbar, MFam };

class TowerBuilder {
public:
    explicit TowerBuilder(const Context& C) : C_(C) {}

    // eta is ignored for kinds T and Tbar; t >= 1.
    const Module& floor(TowerKind kind, int l, int i, const Cyc& eta, int t);

private:
    const Context& C_;
    std::map<std::string, Module> memo_;
};

} // namespace hmn
