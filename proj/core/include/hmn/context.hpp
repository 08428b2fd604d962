#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hmn/algebra.hpp"
#include "hmn/module.hpp"

namespace hmn {

// One entry of the classified list of simple modules, together with its
// projective cover (which doubles as its injective envelope: the algebra is
// symmetric).
struct SimpleEntry {
    enum Kind { Weight, Induced } kind; // M(l,i) vs a simple Z(i,j)
    int p1, p2;                         // (l, i) for Weight, (i, j) for Induced
    Module rep;
    Module pim; // P(l,i) for weight simples; an induced simple covers itself
};

// Shared workspace for one (m, n): the field, the algebra, and the complete
// irredundant list of simple modules in a fixed order (weight simples M(l,i)
// by (l, i), then induced simples Z(i,j) lexicographically over the critical
// index set). Construction asserts dim End(S) = 1 for every listed simple;
// a violation would mean S is not absolutely simple over Q(xi), so decompose
// multiplicities downstream would silently be wrong. In that case the
// constructor throws std::runtime_error naming the simple and the needed
// field extension instead of proceeding.
class Context {
public:
    Context(int m, int n);
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    const Field& field() const { return *field_; }
    const Algebra& algebra() const { return *alg_; }

    int simple_count() const { return static_cast<int>(simples_.size()); }
    const SimpleEntry& simple(int s) const { return simples_[static_cast<std::size_t>(s)]; }
    const std::vector<SimpleEntry>& simples() const { return simples_; }

    // Index into simples() by display label ("M(1,0)" or "Z(0,1)"); -1 if absent.
    int simple_index(const std::string& label) const;

private:
    std::unique_ptr<Field> field_;
    std::unique_ptr<Algebra> alg_;
    std::vector<SimpleEntry> simples_;
};

} // namespace hmn
