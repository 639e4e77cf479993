#include "ioelim/poly.hpp"

#include <algorithm>
#include <map>

#include "ioelim/error.hpp"

namespace ioelim {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Syntax: return "SyntaxError";
        case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
        case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
        case ErrorKind::OutputDependsOnInput: return "OutputDependsOnInput";
        case ErrorKind::OutputDependsOnDerivative: return "OutputDependsOnDerivative";
        case ErrorKind::InvalidReference: return "InvalidReference";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::UnsupportedShape: return "UnsupportedShape";
        case ErrorKind::DegenerateDivisor: return "DegenerateDivisor";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
        case ErrorKind::EmptyElimination: return "EmptyElimination";
        case ErrorKind::InsufficientRelations: return "InsufficientRelations";
        case ErrorKind::ZeroPivot: return "ZeroPivot";
        case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorKind::InsufficientOrder: return "InsufficientOrder";
        case ErrorKind::NonTermination: return "NonTermination";
        case ErrorKind::Io: return "IoError";
    }
    return "Error";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(JetVar v, int exp) {
    if (exp != 0) factors_.emplace_back(v, exp);
    assert(exp >= 0);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
        return a.first.rank_key() > b.first.rank_key();
    });
    Monomial m;
    for (const auto& [v, e] : factors) {
        assert(e >= 0);
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(v, e);
    }
    return m;
}

int Monomial::degree(JetVar v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

bool Monomial::contains_kind(VarKind k) const {
    for (const auto& [v, e] : factors_)
        if (v.kind() == k) return true;
    return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < o.factors_.size()) {
        if (j == o.factors_.size() ||
            (i < factors_.size() && factors_[i].first.rank_key() > o.factors_[j].first.rank_key())) {
            r.factors_.push_back(factors_[i++]);
        } else if (i == factors_.size() ||
                   o.factors_[j].first.rank_key() > factors_[i].first.rank_key()) {
            r.factors_.push_back(o.factors_[j++]);
        } else {
            r.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    std::size_t j = 0;
    for (const auto& [v, e] : factors_) {
        while (j < o.factors_.size() && o.factors_[j].first.rank_key() > v.rank_key()) ++j;
        if (j == o.factors_.size() || !(o.factors_[j].first == v) || o.factors_[j].second < e)
            return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
    assert(d.divides(*this));
    Monomial r;
    std::size_t j = 0;
    for (const auto& [v, e] : factors_) {
        int sub = 0;
        if (j < d.factors_.size() && d.factors_[j].first == v) sub = d.factors_[j++].second;
        if (e - sub > 0) r.factors_.emplace_back(v, e - sub);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() || j < b.factors_.size()) {
        if (j == b.factors_.size() ||
            (i < a.factors_.size() && a.factors_[i].first.rank_key() > b.factors_[j].first.rank_key())) {
            r.factors_.push_back(a.factors_[i++]);
        } else if (i == a.factors_.size() ||
                   b.factors_[j].first.rank_key() > a.factors_[i].first.rank_key()) {
            r.factors_.push_back(b.factors_[j++]);
        } else {
            r.factors_.emplace_back(a.factors_[i].first,
                                    std::max(a.factors_[i].second, b.factors_[j].second));
            ++i, ++j;
        }
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
        if (a.factors_[i].first.rank_key() > b.factors_[j].first.rank_key()) ++i;
        else if (b.factors_[j].first.rank_key() > a.factors_[i].first.rank_key()) ++j;
        else {
            r.factors_.emplace_back(a.factors_[i].first,
                                    std::min(a.factors_[i].second, b.factors_[j].second));
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
        if (factors_[i].first == o.factors_[j].first) return false;
        if (factors_[i].first.rank_key() > o.factors_[j].first.rank_key()) ++i;
        else ++j;
    }
    return true;
}

int Monomial::cmp(const Monomial& o) const {
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
        const auto& [va, ea] = factors_[i];
        const auto& [vb, eb] = o.factors_[j];
        if (va == vb) {
            if (ea != eb) return ea > eb ? 1 : -1;
            ++i, ++j;
        } else {
            // The side holding the higher-ranked variable has a positive
            // exponent where the other has zero.
            return va.rank_key() > vb.rank_key() ? 1 : -1;
        }
    }
    if (i < factors_.size()) return 1;
    if (j < o.factors_.size()) return -1;
    return 0;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rat& c) {
    if (c != 0) terms_.emplace_back(Monomial(), c);
}

Poly::Poly(JetVar v) { terms_.emplace_back(Monomial(v), Rat(1)); }

Poly::Poly(Monomial m, Rat c) {
    if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::map<Monomial, Rat, MonomialGreater> acc;
    for (auto& [m, c] : terms) acc[std::move(m)] += c;
    Poly p;
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c;
        if (i == terms_.size()) c = -1;
        else if (j == o.terms_.size()) c = 1;
        else c = terms_[i].first.cmp(o.terms_[j].first);
        if (c > 0) r.terms_.push_back(terms_[i++]);
        else if (c < 0) r.terms_.push_back(o.terms_[j++]);
        else {
            Rat s = terms_[i].second + o.terms_[j].second;
            if (s != 0) r.terms_.emplace_back(terms_[i].first, std::move(s));
            ++i, ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::map<Monomial, Rat, MonomialGreater> acc;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
    Poly r;
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& [m, k] : r.terms_) k *= c;
    return r;
}

Poly Poly::derivative() const {
    std::map<Monomial, Rat, MonomialGreater> acc;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.factors()) {
            if (v.kind() == VarKind::Param) continue;
            std::vector<Monomial::Factor> fs;
            for (const auto& f : m.factors()) {
                if (f.first == v) {
                    if (f.second - 1 > 0) fs.emplace_back(f.first, f.second - 1);
                } else {
                    fs.push_back(f);
                }
            }
            fs.emplace_back(v.derivative(), 1);
            acc[Monomial::from_factors(std::move(fs))] += c * e;
        }
    }
    Poly r;
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    return r;
}

Poly Poly::derivative(int times) const {
    Poly p = *this;
    for (int i = 0; i < times; ++i) p = p.derivative();
    return p;
}

int Poly::degree_in(JetVar v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
    return d;
}

bool Poly::contains(JetVar v) const {
    for (const auto& [m, c] : terms_)
        if (m.contains(v)) return true;
    return false;
}

bool Poly::contains_kind(VarKind k) const {
    for (const auto& [m, c] : terms_)
        if (m.contains_kind(k)) return true;
    return false;
}

std::optional<JetVar> Poly::highest_var() const {
    std::optional<JetVar> best;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (!best || v.rank_key() > best->rank_key()) best = v;
    return best;
}

int Poly::max_order(VarKind k) const {
    int best = -1;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (v.kind() == k) best = std::max(best, static_cast<int>(v.order()));
    return best;
}

Poly Poly::coefficient_of(JetVar v, int k) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
        if (m.degree(v) != k) continue;
        out.emplace_back(m.divided_by(Monomial(v, k)), c);
    }
    return from_terms(std::move(out));
}

Rat Poly::evaluate(const std::function<Rat(JetVar)>& value_of) const {
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (const auto& [v, e] : m.factors()) {
            Rat base = value_of(v);
            for (int i = 0; i < e; ++i) t *= base;
        }
        total += t;
    }
    return total;
}

Rat Poly::content() const {
    if (is_zero()) return Rat(1);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading_coeff() < 0) content = -content;
    return content;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    Rat c = content();
    Poly r = *this;
    for (auto& [m, k] : r.terms_) k /= c;
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Rat lc = leading_coeff();
    Poly r = *this;
    for (auto& [m, k] : r.terms_) k /= lc;
    return r;
}

// ---------------------------------------------------------------------------
// Division

Poly reduce(const Poly& f, std::span<const Poly> basis, const Ranking&) {
    std::vector<Poly::Term> kept;
    Poly rest = f;
    while (!rest.is_zero()) {
        const Monomial& lm = rest.leading_monomial();
        const Poly* divisor = nullptr;
        for (const Poly& b : basis) {
            if (!b.is_zero() && b.leading_monomial().divides(lm)) {
                divisor = &b;
                break;
            }
        }
        if (divisor) {
            Rat factor = rest.leading_coeff() / divisor->leading_coeff();
            Monomial shift = lm.divided_by(divisor->leading_monomial());
            rest = rest - (*divisor * Poly(shift, factor));
        } else {
            kept.push_back(rest.terms().front());
            rest = rest - Poly(lm, rest.leading_coeff());
        }
    }
    return Poly::from_terms(std::move(kept));
}

PseudoDivision pseudo_divide(const Poly& a, const Poly& b, JetVar v) {
    int db = b.degree_in(v);
    if (db <= 0)
        throw Error(ErrorKind::DegenerateDivisor, "pseudodivision divisor is free of the variable");
    Poly lc = b.coefficient_of(v, db);
    PseudoDivision out{Poly(), a, 0};
    while (!out.remainder.is_zero() && out.remainder.degree_in(v) >= db) {
        int dr = out.remainder.degree_in(v);
        Poly t = out.remainder.coefficient_of(v, dr) * Poly(Monomial(v, dr - db));
        out.quotient = lc * out.quotient + t;
        out.remainder = lc * out.remainder - t * b;
        ++out.power;
    }
    return out;
}

} // namespace ioelim
