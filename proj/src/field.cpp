#include "drinfeld/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

bool isPrime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/* Little-endian polynomial arithmetic over F_p with plain integers; only
 * used while building the F_q tables. */
using PVec = std::vector<std::uint32_t>;

PVec pmulmod(PVec const & a, PVec const & b, PVec const & h, std::uint32_t p)
{
    std::size_t const e = h.size() - 1;
    std::vector<std::uint64_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    for (std::size_t k = r.size(); k-- > e;) {
        std::uint64_t c = r[k] % p;
        if (!c)
            continue;
        for (std::size_t i = 0; i <= e; ++i)
            r[k - e + i] = (r[k - e + i] + (p - c) * h[i]) % p;
    }
    PVec out(e, 0);
    for (std::size_t i = 0; i < e && i < r.size(); ++i)
        out[i] = static_cast<std::uint32_t>(r[i] % p);
    return out;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t k)
{
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        r *= b;
        if (r > (1ull << 31))
            throw TooLarge("field size exceeds 2^31");
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace

FqField::FqField(std::uint32_t p, std::vector<std::uint32_t> h) : p_(p), h_(std::move(h))
{
    if (!isPrime(p_))
        throw InputError("p = " + std::to_string(p_) + " is not prime");
    if (h_.size() < 2 || h_.back() % p_ != 1)
        throw InputError("h must be monic of degree >= 1");
    for (auto & c : h_)
        c %= p_;
    e_ = static_cast<std::uint32_t>(h_.size() - 1);
    q_ = ipow(p_, e_);
    if (q_ > 256)
        throw TooLarge("q = " + std::to_string(q_) + " exceeds the table limit");

    std::vector<PVec> elems(q_);
    for (std::uint32_t a = 0; a < q_; ++a)
        elems[a] = coords(FqElem{a});

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        PVec n(e_);
        for (std::uint32_t i = 0; i < e_; ++i)
            n[i] = (p_ - elems[a][i]) % p_;
        neg_[a] = fromCoords(n).v;
        for (std::uint32_t b = 0; b < q_; ++b) {
            PVec s(e_);
            for (std::uint32_t i = 0; i < e_; ++i)
                s[i] = (elems[a][i] + elems[b][i]) % p_;
            add_[a * q_ + b] = fromCoords(s).v;
            mul_[a * q_ + b] = fromCoords(pmulmod(elems[a], elems[b], h_, p_)).v;
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a) {
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1)
                inv_[a] = b;
        if (!inv_[a])
            throw InputError("h is not irreducible over F_p");
    }
}

FqElem FqField::fromInt(long long c) const
{
    long long m = c % static_cast<long long>(p_);
    if (m < 0)
        m += p_;
    return {static_cast<std::uint32_t>(m)};
}

FqElem FqField::inv(FqElem a) const
{
    if (a.v == 0)
        throw DivisionByZero("inverse of 0 in F_q");
    return {inv_[a.v]};
}

std::vector<std::uint32_t> FqField::coords(FqElem a) const
{
    std::vector<std::uint32_t> c(e_);
    std::uint32_t v = a.v;
    for (std::uint32_t i = 0; i < e_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

FqElem FqField::fromCoords(std::vector<std::uint32_t> const & c) const
{
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        v = v * p_ + c[i] % p_;
    return {v};
}

std::string FqField::toString(FqElem a) const
{
    if (e_ == 1)
        return std::to_string(a.v);
    auto c = coords(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (!c[i])
            continue;
        if (!first)
            os << "+";
        first = false;
        if (i == 0 || c[i] != 1)
            os << c[i];
        if (i > 0) {
            if (c[i] != 1)
                os << "*";
            os << "y";
            if (i > 1)
                os << "^" << i;
        }
    }
    if (first)
        os << "0";
    return "(" + os.str() + ")";
}

std::string TowerSpec::key() const
{
    std::ostringstream os;
    os << p << ";";
    for (auto c : h)
        os << c << ",";
    os << ";";
    for (auto const & c : g) {
        for (auto d : c)
            os << d << ".";
        os << ",";
    }
    return os.str();
}

bool isIrreducibleOver(FqField const & F, std::vector<FqElem> const & f)
{
    int const deg = static_cast<int>(f.size()) - 1;
    if (deg < 1 || f.back().v == 0)
        return false;
    std::uint32_t const q = F.q();
    for (int d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= q;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<FqElem> g(d + 1);
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = {static_cast<std::uint32_t>(c % q)};
                c /= q;
            }
            g[d] = F.one();
            // remainder of f mod g
            std::vector<FqElem> r = f;
            for (int k = deg; k >= d; --k) {
                FqElem co = r[k];
                if (co.v == 0)
                    continue;
                for (int i = 0; i <= d; ++i)
                    r[k - d + i] = F.sub(r[k - d + i], F.mul(co, g[i]));
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                zero = zero && r[i].v == 0;
            if (zero)
                return false;
        }
    }
    return true;
}

std::vector<FqElem> firstIrreducible(FqField const & F, std::uint32_t degree)
{
    std::uint32_t const q = F.q();
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < degree; ++i)
        count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<FqElem> f(degree + 1);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < degree; ++i) {
            f[i] = {static_cast<std::uint32_t>(c % q)};
            c /= q;
        }
        f[degree] = F.one();
        if (isIrreducibleOver(F, f))
            return f;
    }
    throw InternalError("no irreducible polynomial found");
}

FieldTower::FieldTower(TowerSpec spec) : spec_(std::move(spec)), fq_(spec_.p, spec_.h)
{
    if (spec_.g.size() < 2)
        throw InputError("g must have degree >= 1");
    n_ = spec_.n();
    g_.resize(n_ + 1);
    for (std::uint32_t i = 0; i <= n_; ++i)
        g_[i] = fq_.fromCoords(spec_.g[i]);
    if (g_.back() != fq_.one())
        throw InputError("g must be monic");
    if (!isIrreducibleOver(fq_, g_))
        throw InputError("g is not irreducible over F_q");
    size_ = ipow(fq_.q(), n_);
    if (size_ > (1u << 22))
        throw TooLarge("|k| = " + std::to_string(size_) + " exceeds desk scale");

    // Locate a primitive element by brute force, then tabulate exp/log.
    std::uint32_t const ord = size_ - 1;
    std::vector<std::uint32_t> primeFactors;
    {
        std::uint32_t m = ord;
        for (std::uint32_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primeFactors.push_back(d);
                while (m % d == 0)
                    m /= d;
            }
        if (m > 1)
            primeFactors.push_back(m);
    }
    auto slowPow = [&](KElem a, std::uint64_t k) {
        KElem r = one();
        while (k) {
            if (k & 1)
                r = mulSlow(r, a);
            a = mulSlow(a, a);
            k >>= 1;
        }
        return r;
    };
    KElem gen{0};
    for (std::uint32_t c = 1; c < size_; ++c) {
        bool primitive = true;
        for (auto f : primeFactors)
            if (slowPow(KElem{c}, ord / f) == one()) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen = KElem{c};
            break;
        }
    }
    if (size_ == 2)
        gen = one();
    exp_.resize(ord);
    log_.assign(size_, 0);
    KElem cur = one();
    for (std::uint32_t i = 0; i < ord; ++i) {
        exp_[i] = cur.v;
        log_[cur.v] = i;
        cur = mulSlow(cur, gen);
    }
    qpow_.resize(n_ + 1);
    std::uint64_t acc = 1 % ord;
    for (std::uint32_t j = 0; j <= n_; ++j) {
        qpow_[j] = static_cast<std::uint32_t>(acc);
        acc = (acc * fq_.q()) % ord;
    }
}

std::shared_ptr<FieldTower const> FieldTower::make(TowerSpec const & spec)
{
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<FieldTower const>> cache;
    std::string const key = spec.key();
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    auto tower = std::make_shared<FieldTower const>(spec);
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(key, tower);
    return it->second;
}

std::shared_ptr<FieldTower const> FieldTower::primeTower(std::uint32_t p, std::uint32_t n)
{
    FqField F(p, {0, 1});
    auto g = firstIrreducible(F, n);
    TowerSpec spec;
    spec.p = p;
    spec.h = {0, 1};
    for (auto c : g)
        spec.g.push_back({c.v});
    return make(spec);
}

KElem FieldTower::generator() const
{
    if (n_ == 1) {
        // k = F_q; x is the root of the linear g, i.e. -g_0.
        return embed(fq_.neg(g_[0]));
    }
    return KElem{fq_.q()};
}

std::vector<FqElem> FieldTower::digits(KElem a) const
{
    std::vector<FqElem> d(n_);
    std::uint32_t v = a.v;
    std::uint32_t const q = fq_.q();
    for (std::uint32_t i = 0; i < n_; ++i) {
        d[i] = {v % q};
        v /= q;
    }
    return d;
}

KElem FieldTower::fromDigits(std::vector<FqElem> const & d) const
{
    std::uint32_t v = 0;
    std::uint32_t const q = fq_.q();
    for (std::size_t i = n_; i-- > 0;)
        v = v * q + (i < d.size() ? d[i].v : 0);
    return {v};
}

KElem FieldTower::add(KElem a, KElem b) const
{
    if (fq_.q() == 2)
        return {a.v ^ b.v};
    std::uint32_t const q = fq_.q();
    std::uint32_t r = 0, mult = 1;
    std::uint32_t x = a.v, y = b.v;
    for (std::uint32_t i = 0; i < n_; ++i) {
        r += fq_.add({x % q}, {y % q}).v * mult;
        x /= q;
        y /= q;
        mult *= q;
    }
    return {r};
}

KElem FieldTower::neg(KElem a) const
{
    if (fq_.p() == 2)
        return a;
    std::uint32_t const q = fq_.q();
    std::uint32_t r = 0, mult = 1, x = a.v;
    for (std::uint32_t i = 0; i < n_; ++i) {
        r += fq_.neg({x % q}).v * mult;
        x /= q;
        mult *= q;
    }
    return {r};
}

KElem FieldTower::sub(KElem a, KElem b) const { return add(a, neg(b)); }

KElem FieldTower::mulSlow(KElem a, KElem b) const
{
    auto da = digits(a), db = digits(b);
    std::vector<FqElem> r(2 * n_, fq_.zero());
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < n_; ++j)
            r[i + j] = fq_.add(r[i + j], fq_.mul(da[i], db[j]));
    for (std::size_t k = r.size(); k-- > n_;) {
        FqElem c = r[k];
        if (c.v == 0)
            continue;
        for (std::uint32_t i = 0; i <= n_; ++i)
            r[k - n_ + i] = fq_.sub(r[k - n_ + i], fq_.mul(c, g_[i]));
    }
    r.resize(n_);
    return fromDigits(r);
}

KElem FieldTower::mul(KElem a, KElem b) const
{
    if (a.v == 0 || b.v == 0)
        return zero();
    std::uint32_t const ord = size_ - 1;
    std::uint32_t s = log_[a.v] + log_[b.v];
    if (s >= ord)
        s -= ord;
    return {exp_[s]};
}

KElem FieldTower::inv(KElem a) const
{
    if (a.v == 0)
        throw DivisionByZero("inverse of 0 in k");
    std::uint32_t const ord = size_ - 1;
    return {exp_[(ord - log_[a.v]) % ord]};
}

KElem FieldTower::pow(KElem a, long long k) const
{
    std::uint32_t const ord = size_ - 1;
    if (a.v == 0) {
        if (k == 0)
            return one();
        if (k < 0)
            throw DivisionByZero("negative power of 0");
        return zero();
    }
    long long e = (static_cast<long long>(log_[a.v]) * (k % ord)) % ord;
    if (e < 0)
        e += ord;
    return {exp_[e]};
}

KElem FieldTower::frobQ(KElem a, long long j) const
{
    if (a.v == 0)
        return a;
    long long jj = j % n_;
    if (jj < 0)
        jj += n_;
    std::uint32_t const ord = size_ - 1;
    std::uint64_t e = (std::uint64_t(log_[a.v]) * qpow_[jj]) % ord;
    return {exp_[e]};
}

FqElem FieldTower::toFq(KElem a) const
{
    if (!inFq(a))
        throw ContextError("element does not lie in F_q");
    return {a.v};
}

std::uint32_t FieldTower::log(KElem a) const
{
    if (a.v == 0)
        throw DivisionByZero("log of 0");
    return log_[a.v];
}

std::vector<KElem> FieldTower::elements() const
{
    std::vector<KElem> out(size_);
    for (std::uint32_t i = 0; i < size_; ++i)
        out[i] = KElem{i};
    return out;
}

std::string FieldTower::toString(KElem a, char const * var) const
{
    auto d = digits(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i].v == 0)
            continue;
        if (!first)
            os << "+";
        first = false;
        bool const unit = d[i] == fq_.one();
        if (i == 0 || !unit)
            os << fq_.toString(d[i]);
        if (i > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    if (first)
        return "0";
    return os.str();
}

} // namespace drinfeld
