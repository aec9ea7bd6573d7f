#include "rrsing/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace rrsing {

std::string order_name(OrderKind k) {
    return k == OrderKind::grevlex ? "grevlex" : "lex";
}

OrderKind order_from_name(const std::string& name) {
    if (name == "grevlex") return OrderKind::grevlex;
    if (name == "lex") return OrderKind::lex;
    throw std::invalid_argument("unknown monomial order: " + name);
}

RingDesc::RingDesc(std::vector<std::string> vars, std::uint64_t characteristic, OrderKind order)
    : vars_(std::move(vars)), char_(characteristic), order_(order) {
    if (vars_.empty()) throw std::invalid_argument("ring needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw std::invalid_argument("bad variable name: '" + v + "'");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable name: '" + v + "'");
    }
    if (char_ != 0) PrimeField check(char_);  // validates primality and size
}

int RingDesc::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

Rational RingDesc::normalize_coeff(const Rational& c) const {
    if (char_ == 0) return c;
    PrimeField f(char_);
    return Rational(Int(static_cast<unsigned long>(f.reduce(c))));
}

Rational RingDesc::coeff_inverse(const Rational& c) const {
    if (c.is_zero()) throw std::domain_error("coefficient inverse of zero");
    if (char_ == 0) return Rational(1) / c;
    PrimeField f(char_);
    return Rational(Int(static_cast<unsigned long>(f.inv(f.reduce(c)))));
}

Ring make_ring(std::vector<std::string> vars, std::uint64_t characteristic, OrderKind order) {
    return std::make_shared<const RingDesc>(std::move(vars), characteristic, order);
}

Ring with_order(const Ring& ring, OrderKind order) {
    if (ring->order() == order) return ring;
    return make_ring(ring->vars(), ring->characteristic(), order);
}

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(exps.begin(), exps.end()), deg_(0) {
    for (auto e : e_) deg_ += e;
}

Monomial Monomial::one(std::size_t nvars) {
    Monomial m;
    m.e_.assign(nvars, 0);
    m.deg_ = 0;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint64_t s = std::uint64_t{r.e_[i]} + o.e_[i];
        if (s > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
        r.e_[i] = static_cast<std::uint32_t>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide_exact(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i] > r.e_[i]) throw std::domain_error("non-exact monomial division");
        r.e_[i] -= o.e_[i];
    }
    r.deg_ = deg_ - o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg_ = 0;
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

int mono_compare(const Monomial& a, const Monomial& b, OrderKind k) {
    const std::size_t n = a.nvars();
    if (k == OrderKind::grevlex) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree() ? -1 : 1;
        for (std::size_t i = n; i-- > 0;) {
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) > b.exponent(i) ? -1 : 1;
        }
        return 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? -1 : 1;
    }
    return 0;
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
    Polynomial p(ring);
    Rational cc = ring->normalize_coeff(c);
    if (!cc.is_zero()) p.terms_.push_back({Monomial::one(ring->nvars()), cc});
    return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::out_of_range("variable index out of range");
    std::vector<std::uint32_t> e(ring->nvars(), 0);
    e[i] = 1;
    Polynomial p(ring);
    p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.mono.nvars() != ring->nvars())
            throw std::invalid_argument("term with wrong variable count");
    OrderKind ord = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_compare(a.mono, b.mono, ord) > 0;
    });
    Polynomial p(ring);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    auto& out = p.terms_;
    std::size_t w = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational c = ring->normalize_coeff(out[i].coeff);
        if (!c.is_zero()) {
            out[w].mono = out[i].mono;
            out[w].coeff = std::move(c);
            ++w;
        }
    }
    out.resize(w);
    return p;
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

namespace {
void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring() == b.ring()) return;
    if (!a.ring()->same_domain(*b.ring()) || a.ring()->order() != b.ring()->order())
        throw std::invalid_argument("polynomials from different rings");
}
}  // namespace

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    const OrderKind ord = a.ring_->order();
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = mono_compare(a.terms_[i].mono, b.terms_[j].mono, ord);
        if (c > 0) {
            out.push_back(a.terms_[i++]);
        } else if (c < 0) {
            out.push_back(b.terms_[j++]);
        } else {
            Rational s = a.ring_->normalize_coeff(a.terms_[i].coeff + b.terms_[j].coeff);
            if (!s.is_zero()) out.push_back({a.terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
    Polynomial r(a.ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial acc = Polynomial::zero(a.ring_);
    for (const auto& t : b.terms_) acc = acc + a.mono_multiple(t.mono, t.coeff);
    return acc;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Rational cc = ring_->normalize_coeff(c);
    Polynomial r(ring_);
    if (cc.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational v = ring_->normalize_coeff(t.coeff * cc);
        if (!v.is_zero()) r.terms_.push_back({t.mono, std::move(v)});
    }
    return r;
}

Polynomial Polynomial::mono_multiple(const Monomial& m, const Rational& c) const {
    Rational cc = ring_->normalize_coeff(c);
    Polynomial r(ring_);
    if (cc.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational v = ring_->normalize_coeff(t.coeff * cc);
        if (!v.is_zero()) r.terms_.push_back({t.mono * m, std::move(v)});
    }
    return r;
}

Polynomial Polynomial::pow(std::uint32_t n) const {
    Polynomial r = Polynomial::constant(ring_, Rational(1));
    Polynomial base = *this;
    while (n) {
        if (n & 1) r = r * base;
        if (n >>= 1) base = base * base;
    }
    return r;
}

Polynomial Polynomial::monic() const {
    return scaled(ring_->coeff_inverse(leading_term().coeff));
}

bool Polynomial::homogeneous() const {
    if (terms_.empty()) return true;
    const std::uint64_t d = terms_.front().mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

Polynomial Polynomial::to_ring(const Ring& other) const {
    if (!ring_->same_domain(*other))
        throw std::invalid_argument("to_ring: incompatible ring domains");
    return Polynomial::from_terms(other, terms_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_->same_domain(*b.ring_)) return false;
    if (a.ring_->order() != b.ring_->order()) return a == b.to_ring(a.ring_);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono && a.terms_[i].coeff == b.terms_[i].coeff))
            return false;
    return true;
}

std::string mono_str(const Monomial& m, const RingDesc& ring) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.vars()[i];
        if (m.exponent(i) > 1) s += "^" + std::to_string(m.exponent(i));
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        Rational ac = neg ? -c : c;
        if (t.mono.is_one()) {
            s += ac.str();
        } else {
            if (!(ac == Rational(1))) s += ac.str() + "*";
            s += mono_str(t.mono, *ring_);
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    Parser(const std::string& text, Ring ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        skip_ws();
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    Ring ring_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Polynomial expr() {
        bool negate = accept('-');
        Polynomial p = term();
        if (negate) p = -p;
        for (;;) {
            if (accept('+')) {
                p = p + term();
            } else if (accept('-')) {
                p = p - term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            if (digits.empty()) fail("expected exponent");
            if (digits.size() > 9) {
                pos_ = start;
                fail("exponent overflow");
            }
            unsigned long e = std::stoul(digits);
            if (e > 0x7fffffffUL) {
                pos_ = start;
                fail("exponent overflow");
            }
            return b.pow(static_cast<std::uint32_t>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            if (pos_ < text_.size() &&
                (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                fail("implicit multiplication is not allowed");
            return Polynomial::constant(ring_, Rational(Int(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            int idx = ring_->var_index(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    return Parser(text, ring).run();
}

Term leading_term(const Polynomial& f, OrderKind order) {
    if (f.is_zero()) throw std::domain_error("leading term of the zero polynomial");
    if (order == f.ring()->order()) return f.leading_term();
    const Term* best = &f.terms().front();
    for (const auto& t : f.terms())
        if (mono_compare(t.mono, best->mono, order) > 0) best = &t;
    return *best;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("s_polynomial of the zero polynomial");
    check_same_ring(f, g);
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    const Ring& ring = f.ring();
    Polynomial left = f.mono_multiple(l.divide_exact(lf.mono), ring->coeff_inverse(lf.coeff));
    Polynomial right = g.mono_multiple(l.divide_exact(lg.mono), ring->coeff_inverse(lg.coeff));
    return left - right;
}

// ---------------------------------------------------------------------------
// .ideal files

namespace {
std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}
}  // namespace

IdealFile read_ideal_file(std::istream& in, OrderKind order) {
    IdealFile out;
    std::string line;
    std::uint64_t chr = 0;
    bool have_char = false, have_vars = false, in_scenario_header = false;
    std::vector<std::string> vars;
    std::vector<std::pair<std::size_t, std::string>> gen_lines;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (s == "[scenario]") {
            out.has_scenario = true;
            in_scenario_header = true;
            continue;
        }
        std::istringstream ls(s);
        std::string key;
        ls >> key;
        if (in_scenario_header && key == "type") {
            ls >> out.scenario_type;
            continue;
        }
        if (key == "char") {
            if (have_char)
                throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate char line");
            long long p;
            if (!(ls >> p) || p < 0)
                throw std::runtime_error("line " + std::to_string(lineno) + ": malformed char line");
            chr = static_cast<std::uint64_t>(p);
            have_char = true;
            in_scenario_header = false;
            continue;
        }
        if (key == "vars") {
            if (have_vars)
                throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate vars line");
            std::string v;
            while (ls >> v) vars.push_back(v);
            if (vars.empty())
                throw std::runtime_error("line " + std::to_string(lineno) + ": empty vars line");
            have_vars = true;
            in_scenario_header = false;
            continue;
        }
        if (!have_char || !have_vars)
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected 'char' and 'vars' before generators");
        gen_lines.emplace_back(lineno, s);
    }
    if (!have_char || !have_vars)
        throw std::runtime_error("ideal file is missing its 'char' or 'vars' line");

    out.ring = make_ring(vars, chr, order);
    for (const auto& [ln, g] : gen_lines) {
        try {
            out.generators.push_back(parse_polynomial(g, out.ring));
        } catch (const ParseError& e) {
            throw std::runtime_error("line " + std::to_string(ln) + ": " + e.what());
        }
    }
    return out;
}

IdealFile read_ideal_file(const std::string& path, OrderKind order) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ideal file: " + path);
    return read_ideal_file(in, order);
}

}  // namespace rrsing
