#pragma once

#include "hmn/field.hpp"
#include "hmn/linalg.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hmn {

/// Generator indices used for words, module actions and relation terms.
enum Gen : int { GA = 0, GB = 1, GC = 2, GD = 3 };

/// Sparse element of the algebra in the PBW basis a^i b^j c^l d^k
/// (0 <= i,k < n; 0 <= j,l < mn). Terms are sorted by monomial id and
/// coefficients are nonzero.
struct Element {
    std::vector<std::pair<std::uint32_t, Cyc>> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const Element& o) const { return t == o.t; }
};

/// dst += coeff * src, merging sorted term lists and dropping zeros.
void el_axpy(Element& dst, const Element& src, const Cyc& coeff);

/// One term of a defining relation: coeff times a word in the generators.
struct RelTerm {
    Cyc coeff;
    std::vector<int> word; // entries are Gen values; empty word is the unit
};

struct Relation {
    std::string name;
    std::vector<RelTerm> terms;
};

/// Sums coeff * g[w1] g[w2] ... over the relation's terms. T needs a product
/// via `mul`, and `add_scaled(acc, x, coeff)` accumulation; `one` is the
/// multiplicative unit and `zero` the starting accumulator.
template <class T, class MulFn, class AddScaledFn>
T eval_relation(const Relation& rel, const std::array<T, 4>& g, const T& one,
                const T& zero, MulFn mul, AddScaledFn add_scaled) {
    T acc = zero;
    for (const auto& term : rel.terms) {
        T w = one;
        for (int gi : term.word) w = mul(w, g[static_cast<std::size_t>(gi)]);
        add_scaled(acc, w, term.coeff);
    }
    return acc;
}

/// The defining equations of the algebra at (m, n): the power identities
/// a^n = b^n - 1, b^mn = c^mn = 1, d^n = 0, the four commutation rules, the
/// ad - da bracket and the ac bracket with its d^{n-1} correction term.
class Relations {
public:
    explicit Relations(const Field& F);

    const std::vector<Relation>& all() const { return rels_; }

    /// Evaluates every equation on four square matrices acting as a, b, c, d;
    /// returns the names of equations that fail to vanish.
    std::vector<std::string> check_matrices(const std::array<Mat, 4>& g) const;

    /// Evaluates every equation on scalar images of the generators (used for
    /// the counit); returns the names of equations that fail to vanish.
    std::vector<std::string> check_scalars(const std::array<Cyc, 4>& g) const;

private:
    const Field* f_;
    std::vector<Relation> rels_;
};

/// The m^2 n^4-dimensional algebra itself: PBW monomial arithmetic with
/// memoized normal-form products, the left regular representation, and the
/// Jacobson radical via the regular trace form (char 0, Dickson).
///
/// Product memo tables fill lazily on first use; instances are meant for
/// single-threaded use and must outlive any Element consumers.
class Algebra {
public:
    explicit Algebra(const Field& F);

    const Field& field() const { return *f_; }
    int dim() const { return dim_; }

    int mono_id(int i, int j, int l, int k) const;
    std::array<int, 4> mono_parts(int id) const; ///< {i, j, l, k}
    std::string mono_str(int id) const;          ///< e.g. "a b^2 d" or "1"

    Element unit() const;
    Element mono(int id) const;
    Element gen(int g) const; ///< the generator as an element

    /// Normal form of e_p e_q, memoized.
    const Element& mono_product(int p, int q) const;
    Element mul(const Element& x, const Element& y) const;
    Element rightmul_gen(const Element& x, int g) const;

    std::vector<Cyc> to_dense(const Element& x) const;
    Element from_dense(const std::vector<Cyc>& v) const;

    const Relations& relations() const { return rels_; }

    /// The defining equations evaluated through the product engine itself.
    std::vector<std::string> relation_failures() const;

    /// (xy)z == x(yz) over every basis triple (exhaustive: dim^3 checks).
    bool associativity_exhaustive(std::string* first_failure = nullptr) const;
    /// Same check over `count` seeded triples.
    bool associativity_sampled(int count, std::uint64_t seed,
                               std::string* first_failure = nullptr) const;

    Mat left_regular(const Element& x) const;

    /// Jacobson radical J as a subspace of the PBW coordinate space,
    /// computed as the kernel of the Gram matrix of (x, y) -> tr(L_{xy}).
    const Subspace& radical() const;
    /// Small generating sets: J = sum_g H g (left) and J = sum_g g H (right).
    const std::vector<Element>& radical_left_gens() const;
    const std::vector<Element>& radical_right_gens() const;
    /// J^k as a subspace, k >= 1; J^{k+1} = sum of g J^k over right generators.
    Subspace radical_power(int k) const;

private:
    const Element& rightmul_a(int id) const;
    void ensure_product_table() const;

    const Field* f_;
    int m_, n_, N_, dim_;
    Relations rels_;
    Cyc kappa_prime_; // (1 - xi^n) / (n-1)!_q, from commuting c past a

    mutable std::vector<std::unique_ptr<Element>> rma_;
    mutable std::vector<std::unique_ptr<Element>> prod_;
    mutable bool table_complete_ = false;
    mutable std::unique_ptr<Subspace> rad_;
    mutable std::vector<Element> lgens_, rgens_;
};

} // namespace hmn
