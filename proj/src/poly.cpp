#include "adq/poly.hpp"

#include "adq/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace adq {

bool is_valid_var(char c) {
    return c >= 'a' && c <= 'z';
}

Monomial::Monomial(VarId v, unsigned exp) {
    if (!is_valid_var(v)) throw Error(std::string("invalid variable name '") + v + "'");
    if (exp > 0) vars_.emplace_back(v, exp);
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : vars_) d += e;
    return d;
}

unsigned Monomial::degree_in(VarId v) const {
    for (const auto& [w, e] : vars_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = vars_.begin(), b = o.vars_.begin();
    while (a != vars_.end() || b != o.vars_.end()) {
        if (b == o.vars_.end() || (a != vars_.end() && a->first < b->first)) {
            r.vars_.push_back(*a++);
        } else if (a == vars_.end() || b->first < a->first) {
            r.vars_.push_back(*b++);
        } else {
            r.vars_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [v, e] : vars_)
        if (o.degree_in(v) < e) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    Monomial r;
    for (const auto& [v, e] : vars_) {
        unsigned oe = o.degree_in(v);
        if (oe > e) throw Error("monomial division is not exact");
        if (e - oe > 0) r.vars_.emplace_back(v, e - oe);
    }
    return r;
}

Monomial Monomial::without(VarId v) const {
    Monomial r;
    for (const auto& f : vars_)
        if (f.first != v) r.vars_.push_back(f);
    return r;
}

Monomial Monomial::with_power(VarId v, unsigned exp) const {
    Monomial r = without(v);
    if (exp > 0) {
        auto it = std::lower_bound(r.vars_.begin(), r.vars_.end(), v,
                                   [](const auto& f, VarId w) { return f.first < w; });
        r.vars_.insert(it, {v, exp});
    }
    return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Same total degree: alphabetically earlier variables weigh more.
    auto ia = a.vars_.begin(), ib = b.vars_.begin();
    while (ia != a.vars_.end() && ib != b.vars_.end()) {
        if (ia->first != ib->first)
            // The side whose next factor is the earlier letter has the
            // higher exponent on that letter (the other side has zero).
            return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    if (ia != a.vars_.end()) return 1;
    if (ib != b.vars_.end()) return -1;
    return 0;
}

std::string Monomial::str() const {
    std::string s;
    for (const auto& [v, e] : vars_) {
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Poly Poly::variable(VarId v) {
    Poly p;
    p.terms_.emplace(Monomial(v), Rational(1));
    return p;
}

Poly Poly::monomial(Rational coeff, Monomial m) {
    Poly p;
    if (!coeff.is_zero()) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned Poly::degree_in(VarId v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

bool Poly::contains_var(VarId v) const {
    for (const auto& [m, c] : terms_)
        if (m.contains(v)) return true;
    return false;
}

std::set<VarId> Poly::variables() const {
    std::set<VarId> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vs.insert(v);
    return vs;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else {
        for (auto& [m, k] : terms_) k *= c;
    }
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly r(Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Poly Poly::coeff_of(VarId v, unsigned k) const {
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.degree_in(v) == k) r.add_term(m.without(v), c);
    return r;
}

std::vector<std::pair<unsigned, Poly>> Poly::collect_powers(VarId v) const {
    std::map<unsigned, Poly> by_deg;
    for (const auto& [m, c] : terms_) by_deg[m.degree_in(v)].add_term(m.without(v), c);
    std::vector<std::pair<unsigned, Poly>> out;
    for (auto& [k, p] : by_deg)
        if (!p.is_zero()) out.emplace_back(k, std::move(p));
    return out;
}

Poly Poly::substitute(VarId v, const Poly& value) const {
    // Cache powers of the replacement up to the highest needed.
    std::vector<Poly> powers{Poly(Rational(1))};
    unsigned dmax = degree_in(v);
    for (unsigned k = 1; k <= dmax; ++k) powers.push_back(powers.back() * value);

    Poly r;
    for (const auto& [m, c] : terms_) {
        unsigned k = m.degree_in(v);
        if (k == 0) {
            r.add_term(m, c);
        } else {
            r += Poly::monomial(c, m.without(v)) * powers[k];
        }
    }
    return r;
}

Rational Poly::eval(const std::map<VarId, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end())
                throw Error(std::string("no value supplied for variable '") + v + "'");
            Rational p(1);
            Rational base = it->second;
            for (unsigned k = 0; k < e; ++k) p *= base;
            t *= p;
        }
        total += t;
    }
    return total;
}

double Poly::eval_double(const std::map<VarId, double>& point) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end())
                throw Error(std::string("no value supplied for variable '") + v + "'");
            t *= std::pow(it->second, static_cast<int>(e));
        }
        total += t;
    }
    return total;
}

Rational Poly::content() const {
    if (terms_.empty()) return Rational(1);
    Integer den_lcm = 1;
    for (const auto& [m, c] : terms_) den_lcm = den_lcm / gcd(den_lcm, c.den()) * c.den();
    Integer num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        Integer scaled = c.num() * (den_lcm / c.den());
        num_gcd = gcd(num_gcd, scaled);
    }
    return Rational(num_gcd, den_lcm);
}

Poly Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw Error("division by zero");
    Poly q;
    Poly r = *this;
    const auto& dlead = *d.terms_.begin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.begin();
        if (!dlead.first.divides(rlead.first))
            throw Error("polynomial division is not exact: " + str() + " by " + d.str());
        Poly t = Poly::monomial(rlead.second / dlead.second, rlead.first.divide_by(dlead.first));
        q += t;
        r -= t * d;
    }
    return q;
}

std::optional<Poly> Poly::sqrt_exact() const {
    if (is_zero()) return Poly();
    const auto& [lm, lc] = *terms_.begin();
    if (lc.is_negative()) return std::nullopt;
    Rational root_c(0);
    if (!lc.sqrt_exact(root_c)) return std::nullopt;
    Monomial root_m;
    for (const auto& [v, e] : lm.factors()) {
        if (e % 2 != 0) return std::nullopt;
        root_m = root_m.with_power(v, e / 2);
    }
    // Leading-term long division: each step cancels the current leading
    // term of the remainder, which strictly decreases in graded-lex, so
    // the loop ends (monomial orders are well-orders).
    Poly q = Poly::monomial(root_c, root_m);
    Poly r = *this - q * q;
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms_.begin();
        if (!root_m.divides(rm)) return std::nullopt;
        if (Monomial::compare(rm, lm) >= 0) return std::nullopt;
        Poly n = Poly::monomial(rc / (root_c * Rational(2)), rm.divide_by(root_m));
        r -= Rational(2) * (q * n) + n * n;
        q += n;
    }
    return q;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.is_negative()) s += '-';
            first = false;
        } else {
            s += c.is_negative() ? " - " : " + ";
        }
        if (m.is_unit()) {
            s += a.str();
        } else if (a.is_one()) {
            s += m.str();
        } else {
            s += a.str();
            s += '*';
            s += m.str();
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

Poly substitute_increment(const Poly& p, VarId unknown, VarId increment) {
    if (unknown == increment) throw Error("unknown and increment must be distinct variables");
    if (p.contains_var(increment))
        throw Error(std::string("increment variable '") + increment +
                    "' already occurs in the expression");
    return p.substitute(unknown, Poly::variable(unknown) + Poly::variable(increment));
}

std::vector<std::pair<unsigned, Poly>> collect_e_powers(const Poly& p, VarId increment) {
    return p.collect_powers(increment);
}

}  // namespace adq
