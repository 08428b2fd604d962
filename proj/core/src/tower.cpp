#include <stdexcept>
#include <string>
#include <utility>

#include "hmn/homalg.hpp"
#include "hmn/structure.hpp"

namespace hmn {

const Module& TowerBuilder::floor(TowerKind kind, int l, int i, const Cyc& eta, int t) {
    const Field& F = C_.field();
    const int NN = F.N(), n = F.n(), m = F.m();
    if (t < 1) throw std::invalid_argument("tower floor: t must be >= 1");
    if (l < 1 || l > n - 1) throw std::invalid_argument("tower floor: l out of range");
    const int ii = ((i % NN) + NN) % NN;

    std::string key;
    switch (kind) {
        case TowerKind::T: key = "T"; break;
        case TowerKind::Tbar: key = "B"; break;
        case TowerKind::MFam: key = "M:" + cyc_label(eta); break;
    }
    key += ":" + std::to_string(l) + ":" + std::to_string(ii) + ":" + std::to_string(t);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    Module result;
    if (t == 1) {
        switch (kind) {
            case TowerKind::T: result = t1_module(F, l, ii); break;
            case TowerKind::Tbar: result = t1bar_module(F, l, ii); break;
            case TowerKind::MFam: result = m1_module(F, l, ii, eta); break;
        }
    } else {
        const Module& base = floor(kind, l, ii, eta, 1);
        const int prev_i = kind == TowerKind::T ? ii - n : kind == TowerKind::Tbar ? ii + n : ii;
        const Module& prev = floor(kind, l, prev_i, eta, t - 1);
        Ext1 e = ext1(prev, base);
        if (e.dim != 1)
            throw std::logic_error("tower floor: extension space of " + prev.label + " by " +
                                   base.label + " has dimension " + std::to_string(e.dim) +
                                   ", expected 1");
        SES s = build_extension(prev, base, e.reps[0]);
        result = s.middle;
        const std::string params = std::to_string(l) + "," + std::to_string(ii);
        switch (kind) {
            case TowerKind::T: result.label = "T" + std::to_string(t) + "(" + params + ")"; break;
            case TowerKind::Tbar: result.label = "T" + std::to_string(t) + "bar(" + params + ")"; break;
            case TowerKind::MFam:
                result.label = "M" + std::to_string(t) + "(" + params + "," + cyc_label(eta) + ")";
                break;
        }
        const int expected = kind == TowerKind::MFam ? t * m : t;
        const int got = socle_of(C_, result).length();
        if (got != expected)
            throw std::logic_error("tower floor: " + result.label + " has socle length " +
                                   std::to_string(got) + ", expected " + std::to_string(expected));
    }
    auto pos = memo_.emplace(std::move(key), std::move(result)).first;
    return pos->second;
}

} // namespace hmn
