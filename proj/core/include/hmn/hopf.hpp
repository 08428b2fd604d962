#pragma once

#include "hmn/algebra.hpp"

namespace hmn {

/// Sparse element of H (x) H over the PBW basis pairs, sorted by index pair.
struct Tensor {
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Cyc>> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const Tensor& o) const { return t == o.t; }
};

void tn_axpy(Tensor& dst, const Tensor& src, const Cyc& coeff);

/// Coproduct, counit and antipode on the generators, together with the
/// structure checks: the coproduct and counit respect every defining
/// equation, and the counit/antipode axioms hold on the generators.
class Hopf {
public:
    explicit Hopf(const Algebra& A);

    const Algebra& algebra() const { return *A_; }

    const Tensor& delta_gen(int g) const { return delta_[static_cast<std::size_t>(g)]; }
    const Cyc& counit_gen(int g) const { return eps_[static_cast<std::size_t>(g)]; }
    const Element& antipode_gen(int g) const { return s_[static_cast<std::size_t>(g)]; }

    Cyc counit_mono(int id) const;
    /// Anti-homomorphic extension: S(a^i b^j c^l d^k) = S(d)^k S(c)^l S(b)^j S(a)^i.
    Element antipode_mono(int id) const;

    Tensor tensor_of(const Element& x, const Element& y) const;
    Tensor tensor_mul(const Tensor& x, const Tensor& y) const;

    struct Report {
        bool ok = true;
        std::vector<std::string> failures;
    };
    Report verify() const;

private:
    const Algebra* A_;
    std::array<Tensor, 4> delta_;
    std::array<Cyc, 4> eps_;
    std::array<Element, 4> s_;
};

} // namespace hmn
