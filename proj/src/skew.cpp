#include "drinfeld/skew.hpp"

#include <functional>

#include <cctype>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

SkewPoly::SkewPoly(FieldTower const & k, std::vector<KElem> coeffs) : k_(&k), c_(std::move(coeffs)) { trim(); }

SkewPoly SkewPoly::monomial(FieldTower const & k, KElem c, std::size_t i)
{
    std::vector<KElem> v(i + 1, KElem{0});
    v[i] = c;
    return SkewPoly(k, std::move(v));
}

FieldTower const & SkewPoly::tower() const
{
    if (!k_)
        throw ContextError("skew polynomial without a field");
    return *k_;
}

void SkewPoly::trim()
{
    while (!c_.empty() && c_.back().v == 0)
        c_.pop_back();
}

void SkewPoly::check(SkewPoly const & o) const
{
    if (k_ && o.k_ && k_ != o.k_)
        throw ContextError("skew polynomials over different fields");
}

int SkewPoly::valuation() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i].v)
            return static_cast<int>(i);
    return -1;
}

SkewPoly SkewPoly::monic() const
{
    if (isZero())
        return *this;
    return scaledLeft(k_->inv(lead()));
}

SkewPoly SkewPoly::scaledLeft(KElem c) const
{
    if (isZero())
        return *this;
    std::vector<KElem> v(c_);
    for (auto & x : v)
        x = k_->mul(c, x);
    return SkewPoly(*k_, std::move(v));
}

SkewPoly SkewPoly::conjugated(KElem c) const
{
    FieldTower const & k = tower();
    KElem const ci = k.inv(c);
    std::vector<KElem> v(c_);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = k.mul(k.mul(c, v[i]), k.frobQ(ci, static_cast<long long>(i)));
    return SkewPoly(k, std::move(v));
}

SkewPoly SkewPoly::twisted(long long j) const
{
    if (isZero())
        return *this;
    std::vector<KElem> v(c_);
    for (auto & x : v)
        x = k_->frobQ(x, j);
    return SkewPoly(*k_, std::move(v));
}

SkewPoly SkewPoly::operator-() const
{
    if (isZero())
        return *this;
    std::vector<KElem> v(c_);
    for (auto & x : v)
        x = k_->neg(x);
    return SkewPoly(*k_, std::move(v));
}

SkewPoly & SkewPoly::operator+=(SkewPoly const & o)
{
    check(o);
    if (o.isZero())
        return *this;
    k_ = o.k_;
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), KElem{0});
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] = k_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

SkewPoly & SkewPoly::operator-=(SkewPoly const & o)
{
    check(o);
    if (o.isZero())
        return *this;
    k_ = o.k_;
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), KElem{0});
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] = k_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

SkewPoly operator*(SkewPoly const & a, SkewPoly const & b)
{
    a.check(b);
    FieldTower const * k = a.k_ ? a.k_ : b.k_;
    if (a.isZero() || b.isZero())
        return k ? SkewPoly(*k) : SkewPoly();
    std::vector<KElem> r(a.c_.size() + b.c_.size() - 1, KElem{0});
    std::vector<KElem> tw(b.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].v == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            tw[j] = k->frobQ(b.c_[j], static_cast<long long>(i));
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] = k->add(r[i + j], k->mul(a.c_[i], tw[j]));
    }
    return SkewPoly(*k, std::move(r));
}

SkewPoly SkewPoly::pow(unsigned e) const
{
    SkewPoly r = one(tower());
    SkewPoly b = *this;
    while (e) {
        if (e & 1)
            r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool operator<(SkewPoly const & a, SkewPoly const & b)
{
    if (a.c_.size() != b.c_.size())
        return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i])
            return a.c_[i] < b.c_[i];
    return false;
}

std::string SkewPoly::toString(char const * var) const
{
    return toString([&](KElem c) { return k_->toString(c, var); });
}

std::string SkewPoly::toString(std::function<std::string(KElem)> const & coeff) const
{
    if (isZero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        KElem const c = c_[i];
        if (c.v == 0)
            continue;
        if (!first)
            os << "+";
        first = false;
        std::string cs = coeff(c);
        bool const simple = cs.find('+') == std::string::npos;
        if (i == 0) {
            os << (simple ? cs : "(" + cs + ")");
            continue;
        }
        if (c != k_->one())
            os << (simple ? cs : "(" + cs + ")") << "*";
        os << "tau";
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

SkewDivMod rdivmod(SkewPoly const & f, SkewPoly const & g)
{
    if (g.isZero())
        throw DivisionByZero("right division by the zero skew polynomial");
    FieldTower const & k = g.tower();
    if (f.degree() < g.degree())
        return {SkewPoly(k), f.towerPtr() ? f : SkewPoly(k)};
    int const dg = g.degree();
    std::vector<KElem> r(f.coeffs());
    std::vector<KElem> q(f.degree() - dg + 1, KElem{0});
    auto const & gc = g.coeffs();
    for (int top = f.degree(); top >= dg; --top) {
        if (r[top].v == 0)
            continue;
        int const shift = top - dg;
        KElem const c = k.div(r[top], k.frobQ(g.lead(), shift));
        q[shift] = c;
        for (int i = 0; i <= dg; ++i)
            r[shift + i] = k.sub(r[shift + i], k.mul(c, k.frobQ(gc[i], shift)));
    }
    r.resize(dg);
    return {SkewPoly(k, std::move(q)), SkewPoly(k, std::move(r))};
}

bool rdivides(SkewPoly const & g, SkewPoly const & f, SkewPoly * quo)
{
    if (g.isZero())
        return f.isZero();
    SkewDivMod qr = rdivmod(f, g);
    if (!qr.rem.isZero())
        return false;
    if (quo)
        *quo = std::move(qr.quo);
    return true;
}

SkewBezout rgcdBezout(std::vector<SkewPoly> const & fs)
{
    FieldTower const * k = nullptr;
    for (auto const & f : fs)
        if (f.towerPtr())
            k = f.towerPtr();
    std::size_t const m = fs.size();
    // Running gcd a with a = sum xa[i] fs[i].
    SkewPoly a = k ? SkewPoly(*k) : SkewPoly();
    std::vector<SkewPoly> xa(m, a);
    for (std::size_t idx = 0; idx < m; ++idx) {
        if (fs[idx].isZero())
            continue;
        SkewPoly b = fs[idx];
        std::vector<SkewPoly> xb(m, SkewPoly(*k));
        xb[idx] = SkewPoly::one(*k);
        while (!b.isZero()) {
            SkewDivMod qr = rdivmod(a, b);
            std::vector<SkewPoly> xr(m);
            for (std::size_t i = 0; i < m; ++i)
                xr[i] = xa[i] - qr.quo * xb[i];
            a = std::move(b);
            xa = std::move(xb);
            b = std::move(qr.rem);
            xb = std::move(xr);
        }
    }
    if (a.isZero())
        throw EmptyIdeal("right gcd of zero skew polynomials");
    KElem const li = k->inv(a.lead());
    for (auto & x : xa)
        x = x.scaledLeft(li);
    return {a.scaledLeft(li), std::move(xa)};
}

SkewPoly rgcd(std::vector<SkewPoly> const & fs) { return rgcdBezout(fs).gcd; }

std::pair<SkewPoly, SkewPoly> bezout(SkewPoly const & f, SkewPoly const & g)
{
    SkewBezout b = rgcdBezout({f, g});
    return {b.cofactors[0], b.cofactors[1]};
}

namespace {

class SkewParser {
  public:
    SkewParser(FieldTower const & k, std::string const & text, KElem t) : k_(k), text_(text), t_(t)
    {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                s_ += ch;
    }

    SkewPoly run()
    {
        if (s_.empty())
            fail("empty input");
        SkewPoly r = expr();
        if (i_ != s_.size())
            fail("trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(std::string const & why) const
    {
        throw InputError("cannot parse skew polynomial '" + text_ + "': " + why);
    }

    bool more() const { return i_ < s_.size(); }
    char peek() const { return s_[i_]; }

    SkewPoly expr()
    {
        SkewPoly acc(k_);
        bool firstTerm = true;
        while (more() && peek() != ')') {
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++i_;
            } else if (!firstTerm) {
                fail("expected '+' or '-'");
            }
            SkewPoly t = term();
            acc = neg ? acc - t : acc + t;
            firstTerm = false;
        }
        if (firstTerm)
            fail("empty expression");
        return acc;
    }

    SkewPoly term()
    {
        SkewPoly acc = factor();
        while (more()) {
            if (peek() == '*') {
                ++i_;
                acc = acc * factor();
            } else if (peek() == '(' || std::isalnum(static_cast<unsigned char>(peek()))) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    unsigned readInt()
    {
        std::size_t start = i_;
        unsigned long long v = 0;
        while (more() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000000ULL)
                fail("integer too large");
            ++i_;
        }
        if (start == i_)
            fail("expected integer");
        return static_cast<unsigned>(v);
    }

    SkewPoly factor()
    {
        SkewPoly base = atom();
        if (more() && peek() == '^') {
            ++i_;
            base = base.pow(readInt());
        }
        return base;
    }

    SkewPoly atom()
    {
        if (!more())
            fail("unexpected end of input");
        char const c = peek();
        if (c == '(') {
            ++i_;
            SkewPoly r = expr();
            if (!more() || peek() != ')')
                fail("missing ')'");
            ++i_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned v = readInt();
            return SkewPoly::constant(k_, k_.embed(k_.fq().fromInt(v)));
        }
        std::size_t start = i_;
        while (more() && std::isalpha(static_cast<unsigned char>(peek())))
            ++i_;
        std::string name = s_.substr(start, i_ - start);
        if (name == "tau")
            return SkewPoly::tau(k_);
        if (name == "t")
            return SkewPoly::constant(k_, t_);
        if (name == "x")
            return SkewPoly::constant(k_, k_.generator());
        fail(name.empty() ? "unexpected character" : "unknown symbol '" + name + "'");
    }

    FieldTower const & k_;
    std::string text_;
    std::string s_;
    std::size_t i_ = 0;
    KElem t_;
};

} // namespace

SkewPoly SkewPoly::parse(FieldTower const & k, std::string const & text, KElem tValue)
{
    return SkewParser(k, text, tValue).run();
}

} // namespace drinfeld
