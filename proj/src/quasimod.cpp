#include "magnetic/quasimod.hpp"

#include "magnetic/forms.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace magnetic::quasimod {

namespace {

std::tuple<long, long, long> order_key(const QuasiMonomial& m) { return {-m.c, -m.b, m.a}; }

QuasiMonomial mono(long a, long b, long c) { return QuasiMonomial{a, b, c}; }

}  // namespace

bool reduction_before(const QuasiMonomial& x, const QuasiMonomial& y) { return order_key(x) > order_key(y); }

QuasiElement::QuasiElement(long weight, std::map<QuasiMonomial, Rational> terms) : weight_(weight) {
    for (const auto& [m, c] : terms) add_term(m, c);
}

QuasiElement QuasiElement::monomial(long a, long b, long c, const Rational& coeff) {
    QuasiElement v(2 * a + 4 * b + 6 * c);
    v.add_term(mono(a, b, c), coeff);
    return v;
}

void QuasiElement::add_term(const QuasiMonomial& m, const Rational& c) {
    if (m.a < 0) throw UsageError("quasi-monomial with negative E2 exponent");
    if (m.weight() != weight_)
        throw UsageError("monomial f(" + std::to_string(m.a) + "," + std::to_string(m.b) + "," +
                         std::to_string(m.c) + ") has weight " + std::to_string(m.weight()) +
                         ", element has weight " + std::to_string(weight_));
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Rational QuasiElement::coefficient(const QuasiMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational QuasiElement::coefficient_sum() const {
    Rational s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

QuasiElement QuasiElement::operator+(const QuasiElement& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    QuasiElement out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

QuasiElement QuasiElement::operator-(const QuasiElement& rhs) const { return *this + (-rhs); }

QuasiElement QuasiElement::operator-() const { return Rational(-1) * *this; }

QuasiElement operator*(const Rational& c, const QuasiElement& v) {
    QuasiElement out(v.weight_);
    for (const auto& [m, x] : v.terms_) out.add_term(m, c * x);
    return out;
}

std::string to_string(const QuasiElement& v) {
    if (v.is_zero()) return "0";
    std::vector<std::pair<QuasiMonomial, Rational>> ordered(v.terms().begin(), v.terms().end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return reduction_before(x.first, y.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (mag != 1) os << magnetic::to_string(mag) << "*";
        os << "f(" << m.a << "," << m.b << "," << m.c << ")";
        first = false;
    }
    return os.str();
}

namespace {

class ElementParser {
public:
    explicit ElementParser(std::string_view text) : s_(text) {}

    std::vector<std::pair<QuasiMonomial, Rational>> parse() {
        std::vector<std::pair<QuasiMonomial, Rational>> out;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '0') {
            std::size_t save = pos_;
            ++pos_;
            skip();
            if (pos_ == s_.size()) return out;
            pos_ = save;
        }
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Rational coeff = 1;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                coeff = number();
                skip();
                expect('*');
                skip();
            }
            expect('f');
            skip();
            expect('(');
            long a = integer();
            expect(',');
            long b = integer();
            expect(',');
            long c = integer();
            expect(')');
            out.push_back({mono(a, b, c), sign * coeff});
            first = false;
            skip();
            if (pos_ == s_.size()) break;
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("element syntax error at position " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char ch) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    long integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected integer");
        long v = std::stol(std::string(s_.substr(start, pos_ - start)));
        skip();
        return v;
    }
    Rational number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        return parse_rational(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

QuasiElement parse_element(std::string_view text, std::optional<long> weight_if_zero) {
    auto terms = ElementParser(text).parse();
    if (terms.empty()) return QuasiElement(weight_if_zero.value_or(0));
    QuasiElement v(terms.front().first.weight());
    for (const auto& [m, c] : terms) v = v + QuasiElement::monomial(m.a, m.b, m.c, c);
    return v;
}

QuasiElement delta_element(const QuasiElement& v) {
    QuasiElement out(v.weight() + 2);
    for (const auto& [m, x] : v.terms()) {
        long k = m.weight();
        out = out + QuasiElement::monomial(m.a + 1, m.b, m.c, x * frac(k - m.a, 12));
        if (m.a > 0) out = out + QuasiElement::monomial(m.a - 1, m.b + 1, m.c, x * frac(-m.a, 12));
        if (m.b != 0) out = out + QuasiElement::monomial(m.a, m.b - 1, m.c + 1, x * frac(-m.b, 3));
        if (m.c != 0) out = out + QuasiElement::monomial(m.a, m.b + 2, m.c - 1, x * frac(-m.c, 2));
    }
    return out;
}

QSeries expand(const QuasiElement& v, long prec) {
    if (v.is_zero()) return QSeries::zero(0, prec);
    long b_shift = 0, c_shift = 0;
    for (const auto& [m, x] : v.terms()) {
        b_shift = std::max(b_shift, -m.b);
        c_shift = std::max(c_shift, -m.c);
    }
    // Everything over E4^b_shift E6^c_shift, so only non-negative powers appear.
    std::map<std::pair<int, long>, QSeries> powers;
    std::function<const QSeries&(int, long)> power = [&](int k, long e) -> const QSeries& {
        auto key = std::make_pair(k, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        QSeries val = e == 0 ? QSeries::constant(1, prec)
                    : e == 1 ? forms::cached_eisenstein(k, prec)
                             : mul(power(k, e / 2), power(k, e - e / 2));
        return powers.emplace(key, std::move(val)).first->second;
    };
    std::vector<QSeries> parts;
    std::vector<Rational> scales;
    for (const auto& [m, x] : v.terms()) {
        QSeries t = mul(mul(power(2, m.a), power(4, m.b + b_shift)), power(6, m.c + c_shift));
        parts.push_back(std::move(t));
        scales.push_back(x);
    }
    std::vector<ScaledTerm> terms;
    for (std::size_t i = 0; i < parts.size(); ++i) terms.push_back({scales[i], parts[i]});
    QSeries num = linear_combine(terms);
    if (b_shift == 0 && c_shift == 0) return num;
    QSeries den = mul(power(4, b_shift), power(6, c_shift));
    if (num.is_zero()) return num;
    return mul(num, inv(den));
}

bool is_cuspidal(const QuasiElement& v) { return sgn(v.coefficient_sum()) == 0; }

QuasiElement anchor_element(Anchor anchor) {
    return anchor == Anchor::Weight4 ? QuasiElement::monomial(0, 1, 0) : QuasiElement::monomial(0, 0, 1);
}

QuasiElement generator_element(Anchor anchor, const std::string& name) {
    if (anchor == Anchor::Weight4) {
        if (name == "G_a") return QuasiElement::monomial(0, -2, 2) - QuasiElement::monomial(0, 1, 0);
        if (name == "G_b") return QuasiElement::monomial(1, 2, -1) - QuasiElement::monomial(0, 1, 0);
    } else if (name == "F6") {
        return frac(1, 1728) * (QuasiElement::monomial(0, 0, 1) - QuasiElement::monomial(0, -3, 3));
    }
    throw UsageError("unknown generator " + name);
}

QuasiElement ReductionCertificate::rhs() const {
    long w = anchor == Anchor::Weight4 ? 4 : 6;
    QuasiElement out = mu * anchor_element(anchor);
    for (const auto& [name, x] : gens) out = out + x * generator_element(anchor, name);
    QuasiElement d = delta_element(delta_part);
    if (!d.is_zero()) out = out + d;
    if (out.is_zero()) return QuasiElement(w);
    return out;
}

namespace {

struct Reducer {
    QuasiElement residual;
    QuasiElement delta_acc;
    Rational mu = 0;
    std::map<std::string, Rational> gens;

    void take(const QuasiMonomial& m, Rational& x) {
        x = residual.coefficient(m);
        residual = residual - QuasiElement::monomial(m.a, m.b, m.c, x);
    }
    void add(long a, long b, long c, const Rational& x) {
        if (sgn(x) != 0) residual = residual + QuasiElement::monomial(a, b, c, x);
    }
    void add_delta(long a, long b, long c, const Rational& x) {
        if (sgn(x) != 0) delta_acc = delta_acc + QuasiElement::monomial(a, b, c, x);
    }
    void add_gen(const std::string& name, const Rational& x) {
        Rational& slot = gens[name];
        slot += x;
        if (sgn(slot) == 0) gens.erase(name);
    }

    template <class Pred>
    std::optional<QuasiMonomial> pick(Pred pred) const {
        std::optional<QuasiMonomial> best;
        for (const auto& [m, x] : residual.terms())
            if (pred(m) && (!best || reduction_before(m, *best))) best = m;
        return best;
    }
};

}  // namespace

ReductionCertificate reduce_weight4(const QuasiElement& v) {
    if (!v.is_zero() && v.weight() != 4) throw UsageError("reduce_weight4 needs a weight-4 element");
    for (const auto& [m, x] : v.terms())
        if (m.a > 2) throw UsageError("reduce_weight4: monomials with a > 2 are outside V_4");
    Reducer r{v.is_zero() ? QuasiElement(4) : v, QuasiElement(2), 0, {}};

    while (true) {
        Rational x;
        if (auto m = r.pick([](const QuasiMonomial& q) { return q.c <= -2; })) {
            // delta f(a,b-2,c+1) solved for f(a,b,c).
            long a = m->a, b = m->b, c = m->c;
            r.take(*m, x);
            Rational s = x * frac(2, c + 1);
            r.add_delta(a, b - 2, c + 1, -s);
            r.add(a + 1, b - 2, c + 1, s * frac(2 - a, 12));
            r.add(a - 1, b - 1, c + 1, s * frac(-a, 12));
            r.add(a, b - 3, c + 2, s * frac(-(b - 2), 3));
            continue;
        }
        auto cmp_b = [](const QuasiMonomial& q) { return q.b <= -3; };
        if (auto m = r.pick(cmp_b)) {
            // delta f(a,b+1,c-1) solved for f(a,b,c).
            long a = m->a, b = m->b, c = m->c;
            r.take(*m, x);
            Rational s = x * frac(3, b + 1);
            r.add_delta(a, b + 1, c - 1, -s);
            r.add(a + 1, b + 1, c - 1, s * frac(2 - a, 12));
            r.add(a - 1, b + 2, c - 1, s * frac(-a, 12));
            r.add(a, b + 3, c - 2, s * frac(-(c - 1), 2));
            continue;
        }
        break;
    }

    for (const auto& [m, x] : r.residual.terms()) {
        r.mu += x;
        if (m == mono(0, 1, 0)) {
        } else if (m == mono(0, -2, 2)) {
            r.add_gen("G_a", x);
        } else if (m == mono(1, 2, -1)) {
            r.add_gen("G_b", x);
        } else if (m == mono(2, 0, 0)) {
            r.add_delta(1, 0, 0, 12 * x);
        } else if (m == mono(1, -1, 1)) {
            r.add_gen("G_a", -2 * x);
            r.add_delta(0, -1, 1, 6 * x);
        } else {
            throw std::logic_error("weight-4 reduction left monomial " + to_string(QuasiElement::monomial(m.a, m.b, m.c)));
        }
    }
    return ReductionCertificate{v.is_zero() ? QuasiElement(4) : v, Anchor::Weight4, r.mu, r.gens, r.delta_acc};
}

ReductionCertificate reduce_weight6(const QuasiElement& v) {
    if (!v.is_zero() && v.weight() != 6) throw UsageError("reduce_weight6 needs a weight-6 element");
    for (const auto& [m, x] : v.terms()) {
        if (m.a > 4) throw UsageError("reduce_weight6: monomials with a > 4 are outside U_6");
        if (m.c < 0) throw UsageError("reduce_weight6: monomials with c < 0 are outside U_6");
    }
    Reducer r{v.is_zero() ? QuasiElement(6) : v, QuasiElement(4), 0, {}};

    while (true) {
        std::optional<QuasiMonomial> m;
        for (const auto& [q, x] : r.residual.terms())
            if (q.c >= 2 && (!m || q.c > m->c || (q.c == m->c && reduction_before(q, *m)))) m = q;
        if (!m) break;
        // delta f(a,b+1,c-1) solved for f(a,b,c), lowering c.
        long a = m->a, b = m->b + 1, c = m->c - 1;
        if (b == 0) throw std::logic_error("weight-6 reduction hit b = -1");
        Rational x;
        r.take(*m, x);
        Rational s = x * frac(3, b);
        r.add_delta(a, b, c, -s);
        r.add(a + 1, b, c, s * frac(4 - a, 12));
        r.add(a - 1, b + 1, c, s * frac(-a, 12));
        r.add(a, b + 2, c - 1, s * frac(-c, 2));
    }

    for (const auto& [m, x] : r.residual.terms()) {
        r.mu += x;
        if (m == mono(0, 0, 1)) {
        } else if (m == mono(1, 1, 0)) {
            r.add_delta(0, 1, 0, 3 * x);
        } else if (m == mono(3, 0, 0)) {
            r.add_delta(0, 1, 0, 3 * x);
            r.add_delta(2, 0, 0, 6 * x);
        } else if (m == mono(4, -2, 1)) {
            r.add_delta(0, 1, 0, 3 * x);
            r.add_delta(2, 0, 0, 6 * x);
            r.add_delta(4, -1, 0, 3 * x);
        } else if (m == mono(2, -1, 1)) {
            r.add_gen("F6", -4608 * x);
            r.add_delta(1, -1, 1, 4 * x);
            r.add_delta(0, -2, 2, -4 * x);
            r.add_delta(0, 1, 0, 6 * x);
        } else {
            throw std::logic_error("weight-6 reduction left monomial " + to_string(QuasiElement::monomial(m.a, m.b, m.c)));
        }
    }
    return ReductionCertificate{v.is_zero() ? QuasiElement(6) : v, Anchor::Weight6, r.mu, r.gens, r.delta_acc};
}

CertificateCheck verify_certificate(const ReductionCertificate& cert, long prec) {
    QSeries lhs = expand(cert.input, prec);
    // The delta part is expanded and differentiated as a series, independently of delta_element.
    long w = cert.anchor == Anchor::Weight4 ? 4 : 6;
    QuasiElement formal = cert.mu * anchor_element(cert.anchor);
    for (const auto& [name, x] : cert.gens) formal = formal + x * generator_element(cert.anchor, name);
    if (formal.is_zero()) formal = QuasiElement(w);
    QSeries rhs = expand(formal, prec);
    if (!cert.delta_part.is_zero()) rhs = rhs + delta(expand(cert.delta_part, prec));
    if (lhs.prec() < prec || rhs.prec() < prec) throw PrecisionError("certificate expansion fell short of prec");
    CertificateCheck out;
    out.checked_through = prec;
    if (auto d = first_difference(lhs, rhs)) {
        out.status = CertificateStatus::Mismatch;
        out.first_mismatch = d;
    }
    return out;
}

MagneticReport magnetic_check(const QSeries& f, unsigned order, unsigned long p) {
    if (order == 0) throw UsageError("magnetic_check order must be positive");
    if (f.lead() <= 0 && f.prec() >= 0 && sgn(f.coefficient(0)) != 0)
        throw DomainError("magnetic_check needs a cuspidal input; constant term is " + magnetic::to_string(f.coefficient(0)));
    QSeries g = antiderivative(f, order);
    auto r = integrality_check(g, p);
    MagneticReport out;
    out.ok = r.ok;
    out.order = order;
    out.prime = p;
    out.checked_through = r.checked_through;
    out.exponent = r.exponent;
    out.denominator = r.denominator;
    return out;
}

MagneticReport magnetic_check(const QuasiElement& v, long prec, unsigned order, unsigned long p) {
    if (!is_cuspidal(v)) throw DomainError("magnetic_check needs a cuspidal element: " + to_string(v));
    return magnetic_check(expand(v, prec), order, p);
}

}  // namespace magnetic::quasimod
