#include "hmn/field.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

namespace hmn {

std::string rat_to_string(const Rat& r) {
    Rat c = r; // two-argument mpq_class construction is not canonicalized
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    // mpq_class(string) accepts "a/b" and "a" but aborts on garbage, so vet
    // the character set first.
    auto slash = s.find('/');
    auto check_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) return false;
        return std::all_of(t.begin() + start, t.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
        throw std::invalid_argument("malformed rational literal: " + s);
    if (num[0] == '+') num.erase(0, 1); // GMP's parser rejects a leading '+'
    if (den[0] == '+') den.erase(0, 1);
    Rat r(num + "/" + den);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

namespace {

using Poly = std::vector<Rat>; // little-endian, no trailing-zero guarantee

int degree(const Poly& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (p[static_cast<std::size_t>(d)] != 0) return d;
    return -1;
}

// Long division p / d; returns quotient, leaves remainder in p.
Poly divmod(Poly& p, const Poly& d) {
    int dd = degree(d);
    if (dd < 0) throw std::domain_error("polynomial division by zero");
    int dp = degree(p);
    Poly q(static_cast<std::size_t>(std::max(dp - dd + 1, 0)), Rat(0));
    const Rat& lead = d[static_cast<std::size_t>(dd)];
    for (int k = dp - dd; k >= 0; --k) {
        Rat f = p[static_cast<std::size_t>(k + dd)] / lead;
        if (f == 0) continue;
        q[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= dd; ++j)
            p[static_cast<std::size_t>(k + j)] -= f * d[static_cast<std::size_t>(j)];
    }
    return q;
}

// N-th cyclotomic polynomial via Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
// over the divisor lattice of N. Exact; asserts each division is remainder-free.
Poly cyclotomic_poly(int N) {
    std::vector<int> divs;
    for (int d = 1; d <= N; ++d)
        if (N % d == 0) divs.push_back(d);
    std::vector<Poly> phi_of(static_cast<std::size_t>(N) + 1);
    for (int d : divs) {
        Poly num(static_cast<std::size_t>(d) + 1, Rat(0));
        num[0] = -1;
        num[static_cast<std::size_t>(d)] = 1; // x^d - 1
        for (int e : divs) {
            if (e >= d || d % e != 0) continue;
            num = [&] {
                Poly q = divmod(num, phi_of[static_cast<std::size_t>(e)]);
                if (degree(num) >= 0)
                    throw std::logic_error("cyclotomic division left a remainder");
                return q;
            }();
        }
        phi_of[static_cast<std::size_t>(d)] = num;
    }
    return phi_of[static_cast<std::size_t>(N)];
}

long mod_pos(long k, long n) {
    long r = k % n;
    return r < 0 ? r + n : r;
}

} // namespace

Field::Field(int m, int n) : m_(m), n_(n) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("degenerate parameters: need m >= 2 and n >= 2");
    N_ = m * n;
    Poly cp = cyclotomic_poly(N_);
    phi_ = degree(cp);
    cyclo_.assign(cp.begin(), cp.begin() + phi_ + 1);

    // x^{phi+t} mod cyclo, built by shift-and-fold; cyclo is monic.
    xpow_.clear();
    std::vector<Rat> cur(cyclo_.begin(), cyclo_.begin() + phi_); // -(x^phi) folded
    for (auto& v : cur) v = -v;
    for (int t = 0; t + 1 < phi_; ++t) {
        xpow_.push_back(cur);
        std::vector<Rat> next(static_cast<std::size_t>(phi_), Rat(0));
        // next = x*cur mod cyclo
        for (int j = 0; j + 1 < phi_; ++j) next[static_cast<std::size_t>(j + 1)] = cur[static_cast<std::size_t>(j)];
        const Rat& top = cur[static_cast<std::size_t>(phi_ - 1)];
        if (top != 0)
            for (int j = 0; j < phi_; ++j)
                next[static_cast<std::size_t>(j)] -= top * cyclo_[static_cast<std::size_t>(j)];
        cur = std::move(next);
    }

    roots_.reserve(static_cast<std::size_t>(N_));
    std::vector<Rat> acc(static_cast<std::size_t>(phi_), Rat(0));
    acc[0] = 1;
    for (int k = 0; k < N_; ++k) {
        roots_.push_back(Cyc(this, acc));
        // multiply by x and reduce
        std::vector<Rat> next(static_cast<std::size_t>(phi_) + 1, Rat(0));
        for (int j = 0; j < phi_; ++j) next[static_cast<std::size_t>(j + 1)] = acc[static_cast<std::size_t>(j)];
        acc = reduce(std::move(next));
    }
}

std::vector<Rat> Field::reduce(std::vector<Rat> p) const {
    std::size_t phi = static_cast<std::size_t>(phi_);
    while (p.size() > phi) {
        // repeatedly fold the top term; p.size()-1 is its degree
        std::size_t deg = p.size() - 1;
        Rat top = std::move(p.back());
        p.pop_back();
        if (top != 0) {
            std::size_t t = deg - phi; // 0-based index into xpow_, valid while deg <= 2phi-2
            if (t < xpow_.size()) {
                const auto& row = xpow_[t];
                for (std::size_t j = 0; j < phi; ++j) p[j] += top * row[j];
            } else {
                // degree too high for the table: fold one step via cyclo
                for (std::size_t j = 0; j < phi; ++j)
                    p[p.size() - phi + j] -= top * cyclo_[j];
            }
        }
    }
    p.resize(phi, Rat(0));
    return p;
}

Cyc Field::zero() const { return Cyc(this, std::vector<Rat>(static_cast<std::size_t>(phi_), Rat(0))); }

Cyc Field::one() const { return integer(1); }

Cyc Field::integer(long v) const {
    std::vector<Rat> c(static_cast<std::size_t>(phi_), Rat(0));
    c[0] = v;
    return Cyc(this, std::move(c));
}

Cyc Field::rational(const Rat& r) const {
    std::vector<Rat> c(static_cast<std::size_t>(phi_), Rat(0));
    c[0] = r;
    return Cyc(this, std::move(c));
}

Cyc Field::from_coords(std::vector<Rat> coords) const {
    if (coords.size() != static_cast<std::size_t>(phi_))
        throw std::invalid_argument("coordinate vector has wrong length");
    for (auto& r : coords) r.canonicalize();
    return Cyc(this, std::move(coords));
}

Cyc Field::root(long k) const { return roots_[static_cast<std::size_t>(mod_pos(k, N_))]; }

Cyc Field::q_pow(long k) const { return root(m_ * mod_pos(k, n_)); }

Cyc Field::q_int(long k) const {
    if (k < 0) throw std::invalid_argument("q_int needs k >= 0");
    Cyc s = zero();
    for (long j = 0; j < k; ++j) s += q_pow(j);
    return s;
}

Cyc Field::q_fact(long k) const {
    if (k < 0) throw std::invalid_argument("q_fact needs k >= 0");
    Cyc p = one();
    for (long j = 1; j <= k; ++j) p *= q_int(j);
    return p;
}

std::vector<Rat> Field::inv_coords(const std::vector<Rat>& a) const {
    // Extended Euclid in Q[x] against the cyclotomic polynomial, tracking only
    // the cofactor of a: invariant r_k == s_k * a (mod cyclo).
    Poly r0(cyclo_.begin(), cyclo_.end()), r1(a.begin(), a.end());
    Poly s0{Rat(0)}, s1{Rat(1)};
    while (degree(r1) > 0) {
        Poly rem = r0;
        Poly q = divmod(rem, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        // s2 = s0 - q*s1
        Poly qs(q.size() + s1.size(), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        Poly s2(std::max(s0.size(), qs.size()), Rat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    int d = degree(r1);
    if (d < 0) throw std::domain_error("division by zero in Q(xi)");
    const Rat c = r1[0]; // gcd is a nonzero constant: cyclo is irreducible
    for (auto& v : s1) v /= c;
    return reduce(std::move(s1));
}

bool Cyc::is_zero() const {
    if (!f_) return true;
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyc::is_one() const {
    if (!f_) return false;
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyc::is_rational() const {
    if (!f_) return true;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r == 0; });
}

Rat Cyc::rational_part() const { return f_ ? c_[0] : Rat(0); }

Cyc Cyc::operator-() const {
    if (!f_) return Cyc();
    Cyc r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (!o.f_) return *this;
    if (!f_) { *this = o; return *this; }
    if (f_ != o.f_) throw std::invalid_argument("mixing values from different fields");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    if (!o.f_) return *this;
    if (!f_) { *this = -o; return *this; }
    if (f_ != o.f_) throw std::invalid_argument("mixing values from different fields");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    if (!f_ || !o.f_) { *this = Cyc(); return *this; }
    if (f_ != o.f_) throw std::invalid_argument("mixing values from different fields");
    std::size_t phi = c_.size();
    std::vector<Rat> prod(2 * phi - 1, Rat(0));
    for (std::size_t i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = f_->reduce(std::move(prod));
    return *this;
}

Cyc& Cyc::operator/=(const Cyc& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(xi)");
    return *this *= o.inverse();
}

void Cyc::submul(const Cyc& x, const Cyc& y) {
    if (!x.f_ || !y.f_) return;
    *this -= x * y;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(xi)");
    return Cyc(f_, f_->inv_coords(c_));
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (!a.f_) return b.is_zero();
    if (!b.f_) return a.is_zero();
    if (a.f_ != b.f_) throw std::invalid_argument("mixing values from different fields");
    return a.c_ == b.c_;
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        Rat v = c_[j];
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        bool unit = (v == 1) && j > 0;
        if (!unit) os << v.get_str();
        if (j > 0) {
            if (!unit) os << "*";
            os << "xi";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

Cyc Coeffs::gamma(long k) const {
    const Field& F = *f_;
    long n = F.n();
    if (k < 1 || k > n) throw std::invalid_argument("gamma index out of range");
    if (k == n) return (F.q_pow(i_) - F.q_pow(i_ + l_)) / F.q_fact(n - 1);
    return F.q_int(k) * (F.q_pow(i_ + l_) - F.q_pow(i_ - k));
}

Cyc Coeffs::alpha(long k) const {
    const Field& F = *f_;
    long n = F.n();
    if (k < 1 || k > n) throw std::invalid_argument("alpha index out of range");
    if (k == n) return (F.q_pow(i_ + l_) - F.q_pow(i_)) / F.q_fact(n - 1);
    return F.q_int(k) * (F.q_pow(i_) - F.q_pow(i_ + l_ - k));
}

} // namespace hmn
