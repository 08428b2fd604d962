#include "hmn/context.hpp"

#include "hmn/homalg.hpp"

#include <sstream>
#include <stdexcept>

namespace hmn {

Context::Context(int m, int n)
    : field_(std::make_unique<Field>(m, n)), alg_(std::make_unique<Algebra>(*field_)) {
    const Field& F = *field_;
    for (int l = 1; l < n; ++l)
        for (int i = 0; i < F.N(); ++i)
            simples_.push_back(
                {SimpleEntry::Weight, l, i, simple_M(F, l, i), projective_P(F, l, i)});
    for (auto [i, j] : enumerate_I0(F)) {
        Module Z = verma_Z(*alg_, i, j);
        simples_.push_back({SimpleEntry::Induced, i, j, Z, Z});
    }
    for (const SimpleEntry& e : simples_) {
        int d = hom_dim(e.rep, e.rep);
        if (d != 1) {
            std::ostringstream os;
            os << "End(" << e.rep.label << ") has dimension " << d << " over Q(xi) at (m,n)=("
               << m << "," << n << "); the simple is not absolutely simple and multiplicity "
               << "counts would be wrong. Extend the coefficient field before proceeding.";
            throw std::runtime_error(os.str());
        }
    }
}

int Context::simple_index(const std::string& label) const {
    for (int s = 0; s < simple_count(); ++s)
        if (simples_[static_cast<std::size_t>(s)].rep.label == label) return s;
    return -1;
}

} // namespace hmn
