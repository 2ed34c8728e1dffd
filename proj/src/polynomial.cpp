#include "semi2x2/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace semi2x2 {

/******** VariableId text form ********/

std::string VariableId::str() const {
    switch (var_class()) {
        case VarClass::X:
            return "x[" + std::to_string(index1()) + "," + std::to_string(index2()) + "," + std::to_string(index3()) + "]";
        case VarClass::T:
            return "t[" + std::to_string(index1()) + "," + std::to_string(index2()) + "," + std::to_string(index3()) + "]";
        case VarClass::Z:
            return "z[" + std::to_string(index1()) + "]";
        case VarClass::W:
            return "w[" + std::to_string(index1()) + "]";
    }
    return "?";
}

VariableId VariableId::parse(const std::string& s) {
    if (s.size() < 4 || s[1] != '[' || s.back() != ']')
        throw std::invalid_argument("VariableId::parse: bad token '" + s + "'");
    std::vector<int> idx;
    std::size_t pos = 2;
    while (pos < s.size() - 1) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos || next > s.size() - 1) next = s.size() - 1;
        idx.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    char c = s[0];
    if (c == 'x' && idx.size() == 3) return VariableId::x(idx[0], idx[1], idx[2]);
    if (c == 't' && idx.size() == 3) return VariableId::t(idx[0], idx[1], idx[2]);
    if (c == 'z' && idx.size() == 1) return VariableId::z(idx[0]);
    if (c == 'w' && idx.size() == 1) return VariableId::w(idx[0]);
    throw std::invalid_argument("VariableId::parse: bad token '" + s + "'");
}

std::string multidegree_str(const MultiDegree& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
    }
    return out + ")";
}

/******** Monomial ********/

Monomial Monomial::variable(VariableId v, unsigned exp) {
    Monomial m;
    if (exp > 0) m.factors_.push_back({v, exp});
    return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<VariableId, unsigned>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.push_back({v, e});
    }
    return m;
}

unsigned Monomial::exponent_of(VariableId v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const auto& f, VariableId x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

unsigned Monomial::degree_in_class(VarClass c) const {
    unsigned d = 0;
    for (const auto& [v, e] : factors_)
        if (v.var_class() == c) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first) out.factors_.push_back(*a++);
        else if (b->first < a->first) out.factors_.push_back(*b++);
        else {
            out.factors_.push_back({a->first, a->second + b->second});
            ++a; ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, o.factors_.end());
    return out;
}

std::pair<Monomial, Monomial> Monomial::split_by_class(const std::set<VarClass>& classes) const {
    Monomial sel, rest;
    for (const auto& f : factors_) {
        if (classes.count(f.first.var_class())) sel.factors_.push_back(f);
        else rest.factors_.push_back(f);
    }
    return {sel, rest};
}

bool Monomial::operator<(const Monomial& o) const {
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first == b->first) {
            if (a->second != b->second) return a->second < b->second;
            ++a; ++b;
        } else if (a->first < b->first) {
            return false;  // *this has the smaller variable with positive exponent
        } else {
            return true;
        }
    }
    if (a != factors_.end()) return false;
    return b != o.factors_.end();
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += " * ";
        out += factors_[i].first.str();
        if (factors_[i].second > 1) out += "^" + std::to_string(factors_[i].second);
    }
    return out;
}

/******** Polynomial ********/

Polynomial Polynomial::constant(const Scalar& c) {
    Polynomial f(c.ring());
    f.add_term(Monomial(), c);
    return f;
}

Polynomial Polynomial::variable(const Ring& r, VariableId v, unsigned exp) {
    Polynomial f(r);
    f.add_term(Monomial::variable(v, exp), Scalar::one(r));
    return f;
}

Polynomial Polynomial::term(const Scalar& coeff, const Monomial& m) {
    Polynomial f(coeff.ring());
    f.add_term(m, coeff);
    return f;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!(ring_ == o.ring_))
        throw std::invalid_argument("Polynomial: ring mismatch (" + ring_.str() + " vs " + o.ring_.str() + ")");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial out(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::mul_filtered(const Polynomial& o, const MonomialFilter& keep) const {
    check_same_ring(o);
    if (!keep) return *this * o;
    Polynomial out(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            if (keep(m)) out.add_term(m, ca * cb);
        }
    return out;
}

Polynomial Polynomial::filtered(const MonomialFilter& keep) const {
    if (!keep) return *this;
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_)
        if (keep(m)) out.terms_.emplace(m, c);
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.add_term(m, k * c);
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = Polynomial::constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return out;
}

Polynomial Polynomial::coeff_extract(const Monomial& pattern, const std::set<VarClass>& classes) const {
    for (const auto& [v, e] : pattern.factors())
        if (!classes.count(v.var_class()))
            throw std::invalid_argument("coeff_extract: pattern variable outside selected classes");
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) {
        auto [sel, rest] = m.split_by_class(classes);
        if (sel == pattern) out.add_term(rest, c);
    }
    return out;
}

Polynomial Polynomial::coeff_extract(const Monomial& pattern) const {
    std::set<VarClass> classes;
    for (const auto& [v, e] : pattern.factors()) classes.insert(v.var_class());
    return coeff_extract(pattern, classes);
}

std::map<MultiDegree, Polynomial> Polynomial::multidegree_split(int m) const {
    std::map<MultiDegree, Polynomial> parts;
    for (const auto& [mon, c] : terms_) {
        MultiDegree d(m, 0);
        for (const auto& [v, e] : mon.factors()) {
            if (v.var_class() != VarClass::X)
                throw std::invalid_argument("multidegree_split: non-X variable present");
            if (v.slot() > m) throw std::invalid_argument("multidegree_split: slot exceeds m");
            d[v.slot() - 1] += static_cast<int>(e);
        }
        auto [it, inserted] = parts.emplace(d, Polynomial(ring_));
        it->second.add_term(mon, c);
    }
    return parts;
}

std::optional<MultiDegree> Polynomial::multidegree(int m) const {
    auto parts = multidegree_split(m);
    if (parts.size() != 1) return std::nullopt;
    return parts.begin()->first;
}

Polynomial Polynomial::substitute(const std::map<VariableId, Polynomial>& assignment) const {
    for (const auto& [v, g] : assignment)
        if (!(g.ring() == ring_)) throw std::invalid_argument("substitute: ring mismatch");
    // powers of assigned values show up repeatedly; cache them
    std::map<std::pair<std::uint64_t, unsigned>, Polynomial> powers;
    Polynomial out(ring_);
    for (const auto& [mon, c] : terms_) {
        Polynomial term = Polynomial::constant(c);
        Monomial kept;
        for (const auto& [v, e] : mon.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                kept = kept * Monomial::variable(v, e);
                continue;
            }
            auto key = std::make_pair(v.key(), e);
            auto pit = powers.find(key);
            if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
            term = term * pit->second;
        }
        if (!kept.is_one()) term = term * Polynomial::term(Scalar::one(ring_), kept);
        out = out + term;
    }
    return out;
}

Polynomial Polynomial::substitute_scalars(const std::map<VariableId, Scalar>& assignment) const {
    std::map<VariableId, Polynomial> polys;
    for (const auto& [v, s] : assignment) polys.emplace(v, Polynomial::constant(s));
    return substitute(polys);
}

Scalar Polynomial::evaluate(const std::map<VariableId, Scalar>& point) const {
    Scalar acc = Scalar::zero(ring_);
    for (const auto& [mon, c] : terms_) {
        Scalar v = c;
        for (const auto& [var, e] : mon.factors()) {
            auto it = point.find(var);
            if (it == point.end())
                throw std::invalid_argument("evaluate: unassigned variable " + var.str());
            Scalar val = it->second.convert_to(ring_);
            for (unsigned i = 0; i < e; ++i) v = v * val;
        }
        acc = acc + v;
    }
    return acc;
}

Polynomial Polynomial::convert_to(const Ring& target) const {
    Polynomial out(target);
    for (const auto& [m, c] : terms_) out.add_term(m, c.convert_to(target));
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // descending monomial order: leading term first
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str();
        if (!it->first.is_one()) out += " * " + it->first.str();
    }
    return out;
}

/******** parser for the canonical text form ********/

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    bool eof() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
};

std::string read_number(Cursor& c) {
    c.skip_ws();
    std::string out;
    if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) out += c.s[c.pos++];
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) out += c.s[c.pos++];
    if (out.empty() || out == "-" || out == "+")
        throw std::invalid_argument("Polynomial::parse: expected number at position " + std::to_string(c.pos));
    return out;
}

Scalar read_coefficient(Cursor& c, const Ring& ring) {
    std::string num = read_number(c);
    if (c.accept('/')) {
        std::string den = read_number(c);
        mpq_class q(num + "/" + den);
        q.canonicalize();
        return Scalar(ring, q);
    }
    return Scalar(ring, mpz_class(num));
}

VariableId read_variable(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && c.s[c.pos] != ']') ++c.pos;
    if (c.pos >= c.s.size()) throw std::invalid_argument("Polynomial::parse: unterminated variable");
    ++c.pos;  // consume ']'
    return VariableId::parse(c.s.substr(start, c.pos - start));
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const Ring& ring) {
    Cursor c{text};
    Polynomial out(ring);
    if (c.eof()) throw std::invalid_argument("Polynomial::parse: empty input");
    bool first = true;
    while (!c.eof()) {
        if (!first && !c.accept('+'))
            throw std::invalid_argument("Polynomial::parse: expected '+' between terms");
        first = false;
        char ch = c.peek();
        Scalar coeff = Scalar::one(ring);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
            coeff = read_coefficient(c, ring);
            have_coeff = true;
        }
        std::vector<std::pair<VariableId, unsigned>> factors;
        while ((have_coeff || !factors.empty()) ? c.accept('*') : true) {
            char v = c.peek();
            if (v != 'x' && v != 't' && v != 'z' && v != 'w') {
                if (factors.empty() && !have_coeff)
                    throw std::invalid_argument("Polynomial::parse: expected term");
                break;
            }
            VariableId var = read_variable(c);
            unsigned exp = 1;
            if (c.accept('^')) exp = static_cast<unsigned>(std::stoul(read_number(c)));
            factors.push_back({var, exp});
        }
        out.add_term(Monomial::from_factors(std::move(factors)), coeff);
    }
    return out;
}

}  // namespace semi2x2
