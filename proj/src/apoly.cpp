#include "drinfeld/apoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

FqField const * pick(APoly const & a, APoly const & b) { return a.F_ ? a.F_ : b.F_; }

APoly::APoly(FqField const & F, std::vector<FqElem> coeffs) : F_(&F), c_(std::move(coeffs)) { trim(); }

APoly APoly::constant(FqField const & F, FqElem c) { return APoly(F, {c}); }

APoly APoly::monomial(FqField const & F, FqElem c, std::size_t k)
{
    std::vector<FqElem> v(k + 1, FqElem{0});
    v[k] = c;
    return APoly(F, std::move(v));
}

FqField const & APoly::field() const
{
    if (!F_)
        throw ContextError("polynomial without a coefficient field");
    return *F_;
}

void APoly::trim()
{
    while (!c_.empty() && c_.back().v == 0)
        c_.pop_back();
}

bool APoly::isOne() const { return c_.size() == 1 && c_[0].v == 1; }

bool APoly::isMonic() const { return !c_.empty() && c_.back().v == 1; }

FqElem APoly::lead() const { return c_.empty() ? FqElem{0} : c_.back(); }

int APoly::valuation() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i].v)
            return static_cast<int>(i);
    return -1;
}

APoly APoly::monic() const
{
    if (isZero())
        return *this;
    return scaled(field().inv(lead()));
}

APoly APoly::derivative() const
{
    if (c_.size() <= 1)
        return APoly(field());
    FqField const & F = field();
    std::vector<FqElem> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = F.mul(F.fromInt(static_cast<long long>(i)), c_[i]);
    return APoly(F, std::move(d));
}

APoly APoly::scaled(FqElem c) const
{
    if (isZero())
        return *this;
    FqField const & F = field();
    std::vector<FqElem> d(c_);
    for (auto & x : d)
        x = F.mul(x, c);
    return APoly(F, std::move(d));
}

APoly APoly::shifted(std::size_t k) const
{
    if (isZero())
        return *this;
    std::vector<FqElem> d(k, FqElem{0});
    d.insert(d.end(), c_.begin(), c_.end());
    return APoly(*F_, std::move(d));
}

FqElem APoly::eval(FqElem x) const
{
    FqElem r{0};
    for (std::size_t i = c_.size(); i-- > 0;)
        r = F_->add(F_->mul(r, x), c_[i]);
    return r;
}

APoly APoly::operator-() const
{
    if (isZero())
        return *this;
    std::vector<FqElem> d(c_);
    for (auto & x : d)
        x = F_->neg(x);
    return APoly(*F_, std::move(d));
}

APoly & APoly::operator+=(APoly const & o)
{
    if (o.isZero())
        return *this;
    F_ = pick(*this, o);
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), FqElem{0});
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] = F_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

APoly & APoly::operator-=(APoly const & o)
{
    if (o.isZero())
        return *this;
    F_ = pick(*this, o);
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), FqElem{0});
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] = F_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

APoly operator*(APoly const & a, APoly const & b)
{
    FqField const * F = pick(a, b);
    if (a.isZero() || b.isZero()) {
        APoly z;
        z.F_ = F;
        return z;
    }
    std::vector<FqElem> r(a.c_.size() + b.c_.size() - 1, FqElem{0});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].v == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] = F->add(r[i + j], F->mul(a.c_[i], b.c_[j]));
    }
    return APoly(*F, std::move(r));
}

std::pair<APoly, APoly> divmod(APoly const & a, APoly const & b)
{
    if (b.isZero())
        throw DivisionByZero("polynomial division by zero");
    FqField const & F = *pick(a, b);
    if (a.degree() < b.degree())
        return {APoly(F), a.F_ ? a : APoly(F)};
    std::vector<FqElem> r(a.c_);
    std::vector<FqElem> q(a.c_.size() - b.c_.size() + 1, FqElem{0});
    FqElem const li = F.inv(b.lead());
    int const db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        FqElem const c = F.mul(r[k], li);
        if (c.v == 0)
            continue;
        q[k - db] = c;
        for (int i = 0; i <= db; ++i)
            r[k - db + i] = F.sub(r[k - db + i], F.mul(c, b.c_[i]));
    }
    r.resize(db);
    return {APoly(F, std::move(q)), APoly(F, std::move(r))};
}

bool divides(APoly const & b, APoly const & a, APoly * quo)
{
    if (b.isZero())
        return a.isZero();
    auto [q, r] = divmod(a, b);
    if (!r.isZero())
        return false;
    if (quo)
        *quo = q;
    return true;
}

APoly APoly::pow(unsigned k) const
{
    APoly r = constant(field(), field().one());
    APoly b = *this;
    while (k) {
        if (k & 1)
            r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

bool operator<(APoly const & a, APoly const & b)
{
    if (a.c_.size() != b.c_.size())
        return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i])
            return a.c_[i] < b.c_[i];
    return false;
}

std::string APoly::toString(std::string const & var) const
{
    if (isZero())
        return "0";
    FqField const & F = *F_;
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        FqElem const c = c_[i];
        if (c.v == 0)
            continue;
        if (!first)
            os << "+";
        first = false;
        bool const unit = c == F.one();
        if (i == 0) {
            os << F.toString(c);
            continue;
        }
        if (!unit)
            os << F.toString(c) << "*";
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

APoly gcd(APoly const & a, APoly const & b)
{
    APoly x = a, y = b;
    while (!y.isZero()) {
        APoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

APoly lcm(APoly const & a, APoly const & b)
{
    if (a.isZero() || b.isZero())
        return APoly(*pick(a, b));
    return (a * b / gcd(a, b)).monic();
}

XGcd xgcd(APoly const & a, APoly const & b)
{
    FqField const & F = *pick(a, b);
    APoly r0 = a, r1 = b;
    APoly s0 = APoly::constant(F, F.one()), s1(F);
    APoly t0(F), t1 = APoly::constant(F, F.one());
    while (!r1.isZero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        APoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        APoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.isZero())
        return {r0, s0, t0};
    FqElem const li = F.inv(r0.lead());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

APoly powmod(APoly const & a, unsigned long long k, APoly const & m)
{
    FqField const & F = *pick(a, m);
    APoly r = APoly::constant(F, F.one()) % m;
    APoly b = a % m;
    while (k) {
        if (k & 1)
            r = (r * b) % m;
        b = (b * b) % m;
        k >>= 1;
    }
    return r;
}

KElem evalInK(FieldTower const & k, APoly const & f, KElem x)
{
    KElem r = k.zero();
    auto const & c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        r = k.add(k.mul(r, x), k.embed(c[i]));
    return r;
}

std::vector<KElem> rootsInK(FieldTower const & k, APoly const & f)
{
    if (f.isZero())
        throw InputError("every element is a root of the zero polynomial");
    std::vector<KElem> roots;
    for (KElem x : k.elements())
        if (evalInK(k, f, x) == k.zero())
            roots.push_back(x);
    return roots;
}

RatFunc::RatFunc(APoly num) : num_(std::move(num))
{
    den_ = APoly::constant(num_.field(), num_.field().one());
}

RatFunc::RatFunc(APoly num, APoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize()
{
    if (den_.isZero())
        throw DivisionByZero("rational function with zero denominator");
    FqField const & F = den_.field();
    if (num_.isZero()) {
        num_ = APoly(F);
        den_ = APoly::constant(F, F.one());
        return;
    }
    APoly const g = gcd(num_, den_);
    if (!g.isOne()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FqElem const li = F.inv(den_.lead());
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
}

int RatFunc::degree() const
{
    if (isZero())
        return -(1 << 28);
    return num_.degree() - den_.degree();
}

RatFunc operator+(RatFunc const & a, RatFunc const & b)
{
    if (a.isZero())
        return b;
    if (b.isZero())
        return a;
    if (a.den_ == b.den_)
        return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(RatFunc const & a, RatFunc const & b)
{
    if (a.isZero())
        return a;
    if (b.isZero())
        return b;
    if (a.isPolynomial() && b.isPolynomial())
        return RatFunc(a.num_ * b.num_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inv() const
{
    if (isZero())
        throw DivisionByZero("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc operator/(RatFunc const & a, RatFunc const & b) { return a * b.inv(); }

std::string RatFunc::toString(std::string const & var) const
{
    if (isPolynomial())
        return num_.toString(var);
    return "(" + num_.toString(var) + ")/(" + den_.toString(var) + ")";
}

std::vector<std::pair<std::vector<unsigned>, long long>> parseSparse(
    std::string const & text, std::vector<std::string> const & vars)
{
    std::vector<std::pair<std::vector<unsigned>, long long>> terms;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw InputError("empty polynomial text");
    std::size_t i = 0;
    auto fail = [&](std::string const & why) {
        throw InputError("cannot parse polynomial '" + text + "': " + why);
    };
    auto readInt = [&]() {
        long long v = 0;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        if (i == start)
            fail("expected integer");
        return v;
    };
    while (i < s.size()) {
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            fail("expected '+' or '-'");
        }
        long long coeff = 1;
        std::vector<unsigned> exps(vars.size(), 0);
        bool any = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (s[i] == '*') {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff *= readInt();
                any = true;
                continue;
            }
            std::size_t start = i;
            while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            if (name.empty())
                fail("unexpected character '" + std::string(1, s[i]) + "'");
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end())
                fail("unknown variable '" + name + "'");
            unsigned e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = static_cast<unsigned>(readInt());
            }
            exps[it - vars.begin()] += e;
            any = true;
        }
        if (!any)
            fail("empty term");
        terms.emplace_back(std::move(exps), sign * coeff);
    }
    return terms;
}

namespace {

class APolyParser {
  public:
    APolyParser(FqField const & F, std::string const & text, std::string const & var)
        : F_(F), s_(text), var_(var)
    {
    }

    APoly run()
    {
        APoly r = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

  private:
    [[noreturn]] void fail(std::string const & why) const
    {
        throw InputError("cannot parse polynomial '" + s_ + "': " + why);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    unsigned long long number()
    {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a number");
        unsigned long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(s_[pos_++] - '0');
            if (v > (1ULL << 40))
                fail("number too large");
        }
        return v;
    }

    APoly expr()
    {
        APoly r(F_);
        bool neg = eat('-');
        if (!neg)
            eat('+');
        r = neg ? -term() : term();
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    bool startsFactor()
    {
        skip();
        if (pos_ >= s_.size())
            return false;
        char const c = s_[pos_];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || s_.compare(pos_, var_.size(), var_) == 0;
    }

    APoly term()
    {
        APoly r = factor();
        while (true) {
            if (eat('*'))
                r *= factor();
            else if (startsFactor())
                r *= factor();
            else
                return r;
        }
    }

    APoly factor()
    {
        APoly b = atom();
        if (eat('^'))
            b = b.pow(static_cast<unsigned>(number()));
        return b;
    }

    APoly atom()
    {
        skip();
        if (eat('(')) {
            APoly r = expr();
            if (!eat(')'))
                fail("missing ')'");
            return r;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return APoly::constant(F_, F_.fromInt(static_cast<long long>(number() % F_.p())));
        if (!var_.empty() && s_.compare(pos_, var_.size(), var_) == 0) {
            std::size_t const end = pos_ + var_.size();
            if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
                fail("unknown identifier");
            pos_ = end;
            return APoly::var(F_);
        }
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    }

    FqField const & F_;
    std::string const & s_;
    std::string const & var_;
    std::size_t pos_ = 0;
};

} // namespace

APoly APoly::parse(FqField const & F, std::string const & text, std::string const & var)
{
    return APolyParser(F, text, var).run();
}

} // namespace drinfeld
