#include "cobhamlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cobhamlab {

namespace {
const Int kZeroInt = 0;
const Rat kZeroRat = 0;
}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Int c) { return IntPoly(std::vector<Int>{std::move(c)}); }

IntPoly IntPoly::x() { return IntPoly(std::vector<Int>{0, 1}); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return kZeroInt;
    return coeffs_[static_cast<size_t>(i)];
}

const Int& IntPoly::leading() const {
    if (is_zero()) return kZeroInt;
    return coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rat(coeffs_[i]);
    return acc;
}

int IntPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& c : coeffs_) g = int_gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (sgn(leading()) < 0) g = -g;
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        Int q;
        mpz_divexact(q.get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
        out[i] = q;
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::square_free_part() const {
    if (degree() <= 0) return primitive_part();
    IntPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive_part();
    return primitive_part().divexact(g).primitive_part();
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const Int& c) const {
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) throw DomainError("polynomial division is not exact");
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(static_cast<size_t>(degree() - d.degree()) + 1, Int(0));
    for (int k = degree() - d.degree(); k >= 0; --k) {
        const Int& top = rem[static_cast<size_t>(k + d.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.leading().get_mpz_t()))
            throw DomainError("polynomial division is not exact");
        Int q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        quot[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= d.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * d.coeff(i);
    }
    for (const Int& c : rem)
        if (c != 0) throw DomainError("polynomial division is not exact");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Primitive pseudo-remainder sequence: scale by lc(b) before each
    // elimination step so every division stays in Z.
    while (!b.is_zero()) {
        if (a.degree() < b.degree()) std::swap(a, b);
        IntPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Int q = r.leading();
            int k = r.degree() - b.degree();
            std::vector<Int> rc = r.coeffs_;
            for (Int& c : rc) c *= b.leading();
            for (int i = 0; i <= b.degree(); ++i)
                rc[static_cast<size_t>(k + i)] -= q * b.coeff(i);
            r = IntPoly(std::move(rc));
        }
        a = b;
        b = r.primitive_part();
    }
    return a.primitive_part();
}

std::string IntPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        Int a = abs(Int(c));
        if (first) {
            if (sgn(c) < 0) out << '-';
            first = false;
        } else {
            out << (sgn(c) < 0 ? "-" : "+");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i >= 1) {
            out << var;
            if (i >= 2) out << '^' << i;
        }
    }
    return out.str();
}

IntPoly IntPoly::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty polynomial");
    std::vector<Int> coeffs;
    auto add_term = [&](const Int& c, int e) {
        if (e < 0) throw DomainError("negative exponent in polynomial");
        if (coeffs.size() <= static_cast<size_t>(e)) coeffs.resize(static_cast<size_t>(e) + 1, Int(0));
        coeffs[static_cast<size_t>(e)] += c;
    };
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw DomainError("dangling sign in polynomial '" + s + "'");
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        bool has_var = i < s.size() && (s[i] == 'x' || s[i] == 'X');
        Int c = digits.empty() ? Int(1) : Int(digits);
        if (digits.empty() && !has_var) throw DomainError("malformed polynomial '" + s + "'");
        if (sign < 0) c = -c;
        if (!has_var) {
            add_term(c, 0);
            continue;
        }
        ++i;  // consume the variable
        if (i < s.size() && s[i] == '*') ++i;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::string ed;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
            if (ed.empty()) throw DomainError("malformed exponent in polynomial '" + s + "'");
            e = std::stoi(ed);
        }
        add_term(c, e);
    }
    return IntPoly(std::move(coeffs));
}

namespace {

// Bareiss fraction-free determinant over Z[x].  Exact divisions hold in
// any integral domain.
IntPoly bareiss_det(std::vector<std::vector<IntPoly>> m) {
    size_t n = m.size();
    if (n == 0) return IntPoly::constant(1);
    IntPoly prev = IntPoly::constant(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return IntPoly();  // singular
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                IntPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.divexact(prev);
            }
            m[i][k] = IntPoly();
        }
        prev = m[k][k];
    }
    IntPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

IntPoly power_roots_poly(const IntPoly& poly, unsigned long p) {
    IntPoly q = poly.square_free_part();
    if (q.degree() < 1) throw DomainError("power_roots_poly: polynomial has no roots");
    if (p == 0) throw DomainError("power_roots_poly: exponent must be positive");
    if (p == 1) return q;
    // Sylvester matrix of q(y) (degree n in y) and g(y) = x - y^p
    // (degree p in y, coefficients in Z[x]).
    int n = q.degree();
    size_t dim = static_cast<size_t>(n) + p;
    std::vector<std::vector<IntPoly>> m(dim, std::vector<IntPoly>(dim));
    // p rows of q's coefficients (constants in x), highest power first.
    for (size_t r = 0; r < p; ++r)
        for (int i = 0; i <= n; ++i)
            m[r][r + static_cast<size_t>(n - i)] = IntPoly::constant(q.coeff(i));
    // n rows of g's coefficients: y^p -> -1, y^0 -> x.
    for (size_t r = 0; r < static_cast<size_t>(n); ++r) {
        m[p + r][r] = IntPoly::constant(-1);
        m[p + r][r + p] = IntPoly::x();
    }
    IntPoly res = bareiss_det(std::move(m));
    if (res.is_zero()) throw DomainError("power_roots_poly: resultant vanished");
    return res.square_free_part();
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::from(const IntPoly& p) {
    std::vector<Rat> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.coeffs()[i]);
    return RatPoly(std::move(c));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& RatPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return kZeroRat;
    return coeffs_[static_cast<size_t>(i)];
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

int RatPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

RatPoly RatPoly::derivative() const {
    if (degree() < 1) return RatPoly();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return RatPoly(std::move(d));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return RatPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::scaled(const Rat& c) const {
    std::vector<Rat> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return RatPoly(std::move(out));
}

RatPoly RatPoly::rem(const RatPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial remainder by zero");
    std::vector<Rat> r = coeffs_;
    while (static_cast<int>(r.size()) - 1 >= d.degree()) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        int deg = static_cast<int>(r.size()) - 1;
        if (deg < d.degree()) break;
        Rat q = r.back() / d.coeff(d.degree());
        int k = deg - d.degree();
        for (int i = 0; i <= d.degree(); ++i) r[static_cast<size_t>(k + i)] -= q * d.coeff(i);
    }
    return RatPoly(std::move(r));
}

RatPoly RatPoly::quo(const RatPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial quotient by zero");
    std::vector<Rat> r = coeffs_;
    if (degree() < d.degree()) return RatPoly();
    std::vector<Rat> q(static_cast<size_t>(degree() - d.degree()) + 1, Rat(0));
    for (int k = degree() - d.degree(); k >= 0; --k) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        int deg = static_cast<int>(r.size()) - 1;
        if (deg < d.degree()) break;
        Rat c = r.back() / d.coeff(d.degree());
        int shift = deg - d.degree();
        q[static_cast<size_t>(shift)] = c;
        for (int i = 0; i <= d.degree(); ++i) r[static_cast<size_t>(shift + i)] -= c * d.coeff(i);
    }
    return RatPoly(std::move(q));
}

SturmChain::SturmChain(const IntPoly& square_free) {
    RatPoly p0 = RatPoly::from(square_free);
    if (p0.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
    chain_.push_back(p0);
    if (p0.degree() == 0) return;
    RatPoly p1 = p0.derivative();
    chain_.push_back(p1);
    while (chain_.back().degree() > 0) {
        RatPoly next = -(chain_[chain_.size() - 2].rem(chain_.back()));
        if (next.is_zero()) break;  // cannot happen for square-free input
        chain_.push_back(next);
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int var = 0, last = 0;
    for (const RatPoly& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::count_open(const Rat& a, const Rat& b) const {
    if (!(a < b)) throw DomainError("Sturm count on an empty interval");
    if (chain_.front().sign_at(a) == 0 || chain_.front().sign_at(b) == 0)
        throw DomainError("Sturm count requires non-root endpoints");
    return variations_at(a) - variations_at(b);
}

}  // namespace cobhamlab
