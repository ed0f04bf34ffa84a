#include "cobhamlab/algebraic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cobhamlab {

namespace {

// Primitive linear polynomial den*x - num for the canonical rational r.
IntPoly linear_for(const Rat& r) {
    return IntPoly(std::vector<Int>{-r.get_num(), r.get_den()});
}

// Strict upper bound on the absolute value of every root (Cauchy).
Rat cauchy_bound(const IntPoly& q) {
    Rat best = 0;
    for (int i = 0; i < q.degree(); ++i) {
        Rat c = Rat(abs(q.coeff(i))) / Rat(abs(q.leading()));
        if (c > best) best = c;
    }
    return Rat(rat_ceil(best + 1));
}

}  // namespace

AlgebraicInterval::AlgebraicInterval(IntPoly poly, Rat lo, Rat hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

Rat AlgebraicInterval::default_width() { return Rat(1, 1000000000000L); }

AlgebraicInterval AlgebraicInterval::exact(const Rat& r) {
    return AlgebraicInterval(linear_for(r), r, r);
}

namespace {

// Isolates the largest real root of q inside (lo, hi).
// pre: q square-free primitive with positive leading coefficient,
// q(lo) != 0, q(hi) != 0, at least one root in (lo, hi) and none >= hi.
std::pair<IntPoly, std::pair<Rat, Rat>> isolate_largest_in(IntPoly q, Rat lo, Rat hi) {
    while (true) {
        if (q.degree() == 1) {
            Rat root = Rat(-q.coeff(0)) / Rat(q.coeff(1));
            return {linear_for(root), {root, root}};
        }
        SturmChain chain(q);
        if (chain.count_open(lo, hi) == 1) return {q, {lo, hi}};
        Rat mid = (lo + hi) / 2;
        if (q.sign_at(mid) == 0) {
            // mid is a rational root; peel it off and keep whatever
            // lives above it, else mid itself is the answer.
            IntPoly rest = q.divexact(linear_for(mid));
            if (rest.degree() >= 1 && SturmChain(rest).count_open(mid, hi) >= 1) {
                q = rest;
                lo = mid;
                continue;
            }
            return {linear_for(mid), {mid, mid}};
        }
        if (chain.count_open(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
}

}  // namespace

AlgebraicInterval AlgebraicInterval::largest_real_root(const IntPoly& p, const Rat& width) {
    IntPoly q = p.square_free_part();
    if (q.degree() < 1) throw DomainError("largest_real_root: polynomial has no roots");
    Rat bound = cauchy_bound(q);
    if (SturmChain(q).count_open(-bound, bound) == 0)
        throw DomainError("largest_real_root: no real roots");
    auto [poly, iv] = isolate_largest_in(std::move(q), -bound, bound);
    AlgebraicInterval out(std::move(poly), std::move(iv.first), std::move(iv.second));
    out.refine_below(width);
    return out;
}

std::optional<Rat> AlgebraicInterval::rational_value() const {
    if (is_exact()) return lo_;
    if (poly_.degree() == 1) return Rat(-poly_.coeff(0)) / Rat(poly_.coeff(1));
    return std::nullopt;
}

void AlgebraicInterval::bisect_step() {
    if (is_exact()) return;
    Rat mid = (lo_ + hi_) / 2;
    int s = poly_.sign_at(mid);
    if (s == 0) {
        poly_ = linear_for(mid);
        lo_ = hi_ = mid;
        return;
    }
    if (s == poly_.sign_at(lo_))
        lo_ = mid;
    else
        hi_ = mid;
}

void AlgebraicInterval::refine_below(const Rat& width) {
    while (!is_exact() && hi_ - lo_ > width) bisect_step();
}

bool AlgebraicInterval::equals(const AlgebraicInterval& other) const {
    if (is_exact() && other.is_exact()) return lo_ == other.lo_;
    auto contains_root = [](const AlgebraicInterval& iv, const Rat& r) {
        return iv.poly_.sign_at(r) == 0 && iv.lo_ < r && r < iv.hi_;
    };
    if (is_exact()) return contains_root(other, lo_);
    if (other.is_exact()) return contains_root(*this, other.lo_);
    IntPoly g = IntPoly::gcd(poly_, other.poly_);
    if (g.degree() < 1) return false;
    // Endpoints are non-roots of the respective polys, hence of g.
    SturmChain sg(g);
    if (sg.count_open(lo_, hi_) == 0) return false;
    Rat a = std::max(lo_, other.lo_);
    Rat b = std::min(hi_, other.hi_);
    if (!(a < b)) return false;
    return sg.count_open(a, b) >= 1;
}

int AlgebraicInterval::compare(const AlgebraicInterval& other) const {
    if (equals(other)) return 0;
    AlgebraicInterval a = *this, b = other;
    while (true) {
        if (a.hi_ <= b.lo_) return -1;
        if (b.hi_ <= a.lo_) return 1;
        a.bisect_step();
        b.bisect_step();
    }
}

int AlgebraicInterval::compare(const Rat& r) const {
    if (is_exact()) return sgn(Rat(lo_ - r));
    if (poly_.sign_at(r) == 0 && lo_ < r && r < hi_) return 0;
    AlgebraicInterval c = *this;
    while (c.lo_ < r && r < c.hi_) c.bisect_step();
    if (c.is_exact()) return sgn(Rat(c.lo_ - r));
    return r <= c.lo_ ? 1 : -1;
}

AlgebraicInterval AlgebraicInterval::power(unsigned long p) const {
    if (p == 0) throw DomainError("power: exponent must be positive");
    if (p == 1) return *this;
    if (is_exact()) return exact(rat_pow(lo_, p));
    AlgebraicInterval base = *this;
    if (base.compare(Rat(0)) <= 0) throw DomainError("power: value must be positive");
    while (!(base.lo_ > 0)) base.bisect_step();
    if (base.is_exact()) return exact(rat_pow(base.lo_, p));
    IntPoly pw = power_roots_poly(base.poly_, p);
    while (true) {
        Rat lop = rat_pow(base.lo_, p);
        Rat hip = rat_pow(base.hi_, p);
        // Deflate stray rational roots sitting exactly on an endpoint;
        // the represented value stays strictly inside.
        if (pw.sign_at(lop) == 0) {
            pw = pw.divexact(linear_for(lop));
            continue;
        }
        if (pw.sign_at(hip) == 0) {
            pw = pw.divexact(linear_for(hip));
            continue;
        }
        if (pw.degree() == 1) {
            Rat root = Rat(-pw.coeff(0)) / Rat(pw.coeff(1));
            return exact(root);
        }
        if (SturmChain(pw).count_open(lop, hip) == 1)
            return AlgebraicInterval(pw, lop, hip);
        base.bisect_step();
        if (base.is_exact()) return exact(rat_pow(base.lo_, p));
    }
}

std::string AlgebraicInterval::str(int digits) const {
    std::ostringstream out;
    out << decimal_string(midpoint(), digits);
    if (is_exact())
        out << " (exact)";
    else
        out << " (root of " << poly_.str() << ")";
    return out.str();
}

namespace {

// Exponent vector of n over its prime support; trial division first,
// probable-prime certification for any large cofactor.
std::map<Int, unsigned long> factorize(Int n) {
    std::map<Int, unsigned long> out;
    for (Int d = 2; d * d <= n && d < 1000000; d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            out[d]++;
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw DomainError("factorize: composite cofactor beyond trial bound");
        out[n]++;
    }
    return out;
}

std::optional<DependenceResult> integer_dependence(const Int& m, const Int& n,
                                                   unsigned long max_exp) {
    if (m == n)
        return DependenceResult{DependenceStatus::Dependent, std::make_pair(1UL, 1UL), max_exp};
    auto fm = factorize(m);
    auto fn = factorize(n);
    if (fm.size() != fn.size())
        return DependenceResult{DependenceStatus::Independent, std::nullopt, max_exp};
    for (const auto& [prime, e] : fm)
        if (fn.find(prime) == fn.end())
            return DependenceResult{DependenceStatus::Independent, std::nullopt, max_exp};
    // Proportionality of exponent vectors: e_i * f_j == e_j * f_i.
    auto it = fm.begin();
    auto jt = fn.begin();
    unsigned long e0 = it->second, f0 = jt->second;
    for (; it != fm.end(); ++it, ++jt) {
        if (static_cast<unsigned long long>(e0) * jt->second !=
            static_cast<unsigned long long>(f0) * it->second)
            return DependenceResult{DependenceStatus::Independent, std::nullopt, max_exp};
    }
    unsigned long g = std::gcd(e0, f0);
    unsigned long p = f0 / g, q = e0 / g;
    return DependenceResult{DependenceStatus::Dependent, std::make_pair(p, q), max_exp};
}

}  // namespace

DependenceResult multiplicatively_dependent(const AlgebraicInterval& a,
                                            const AlgebraicInterval& b,
                                            unsigned long max_exp) {
    if (max_exp == 0) throw DomainError("multiplicatively_dependent: max_exp must be positive");
    if (a.compare(Rat(1)) <= 0 || b.compare(Rat(1)) <= 0)
        throw DomainError("multiplicatively_dependent: both values must exceed 1");
    auto ra = a.rational_value();
    auto rb = b.rational_value();
    if (ra && rb && ra->get_den() == 1 && rb->get_den() == 1) {
        if (auto r = integer_dependence(ra->get_num(), rb->get_num(), max_exp)) return *r;
    }
    std::vector<AlgebraicInterval> apow, bpow;
    apow.reserve(max_exp);
    bpow.reserve(max_exp);
    for (unsigned long p = 1; p <= max_exp; ++p) apow.push_back(a.power(p));
    for (unsigned long q = 1; q <= max_exp; ++q) bpow.push_back(b.power(q));
    for (unsigned long p = 1; p <= max_exp; ++p) {
        for (unsigned long q = 1; q <= max_exp; ++q) {
            const AlgebraicInterval& ap = apow[p - 1];
            const AlgebraicInterval& bq = bpow[q - 1];
            if (ap.hi() < bq.lo() || bq.hi() < ap.lo()) continue;
            if (ap.equals(bq))
                return DependenceResult{DependenceStatus::Dependent, std::make_pair(p, q), max_exp};
        }
    }
    return DependenceResult{DependenceStatus::IndependentUpToBound, std::nullopt, max_exp};
}

AlgebraicInterval dominant_eigenvalue(const IntMatrix& m, const Rat& width) {
    if (m.size() == 0) throw DomainError("dominant_eigenvalue: empty matrix");
    if (m.is_zero()) throw DomainError("dominant_eigenvalue: zero matrix");
    if (m.has_zero_column())
        throw DomainError("dominant_eigenvalue: matrix has a zero column");
    return AlgebraicInterval::largest_real_root(char_poly(m), width);
}

}  // namespace cobhamlab
