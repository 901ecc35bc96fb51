#include "drinfeld/profile.hpp"

#include <algorithm>
#include <sstream>

#include "drinfeld/errors.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

std::vector<InvariantTuple> solveRamificationInvariants(int n, int d, int H, int NK)
{
    std::vector<InvariantTuple> out;
    if (n <= 0 || d <= 0 || H <= 0 || NK <= 0 || NK % d != 0)
        return out;
    int const ef = NK / d;
    for (int fF = 1; fF <= ef; ++fF) {
        if (ef % fF != 0)
            continue;
        int const eK = ef / fF;
        long long const num = static_cast<long long>(H) * NK;
        long long const den = static_cast<long long>(n) * fF;
        if (num % den != 0)
            continue;
        int const eF = static_cast<int>(num / den);
        if (static_cast<long long>(eK) * H * d != static_cast<long long>(eF) * n)
            continue;
        out.push_back({eK, eF, fF, fF * d});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void appendDigits(FieldTower const & k, SkewPoly const & f, std::size_t maxDeg, FqMatrix & M,
                  std::size_t col)
{
    std::size_t const n = k.n();
    for (std::size_t i = 0; i <= maxDeg && i < f.coeffs().size(); ++i) {
        auto const dg = k.digits(f.coeffs()[i]);
        for (std::size_t j = 0; j < n; ++j)
            M(i * n + j, col) = dg[j];
    }
}

std::vector<APoly> computeMinpoly(DrinfeldModule const & phi)
{
    FieldTower const & k = phi.tower();
    FqField const & F = phi.fq();
    int const r = phi.rank();
    int const n = phi.n();
    std::vector<SkewPoly> phiPow{SkewPoly::one(k)};
    for (int sp = 1; sp <= r; ++sp) {
        if (r % sp != 0)
            continue;
        std::vector<int> bound(sp);
        for (int i = 0; i < sp; ++i)
            bound[i] = ((sp - i) * n + r - 1) / r;
        int const maxB = *std::max_element(bound.begin(), bound.end());
        while (static_cast<int>(phiPow.size()) <= maxB)
            phiPow.push_back(phiPow.back() * phi.phiT());
        std::size_t const maxDeg = static_cast<std::size_t>(n * sp + r);
        std::size_t unknowns = 0;
        for (int b : bound)
            unknowns += b + 1;
        FqMatrix M(F, (maxDeg + 1) * n, unknowns);
        std::size_t col = 0;
        for (int i = 0; i < sp; ++i) {
            SkewPoly const pii = SkewPoly::tau(k, static_cast<std::size_t>(n * i));
            for (int j = 0; j <= bound[i]; ++j)
                appendDigits(k, phiPow[j] * pii, maxDeg, M, col++);
        }
        SkewPoly const target = -SkewPoly::tau(k, static_cast<std::size_t>(n * sp));
        std::vector<FqElem> rhs(M.rows(), FqElem{0});
        {
            FqMatrix T(F, M.rows(), 1);
            appendDigits(k, target, maxDeg, T, 0);
            for (std::size_t i = 0; i < M.rows(); ++i)
                rhs[i] = T(i, 0);
        }
        auto sol = M.solve(rhs);
        if (!sol)
            continue;
        std::vector<APoly> m;
        col = 0;
        for (int i = 0; i < sp; ++i) {
            std::vector<FqElem> c(bound[i] + 1);
            for (int j = 0; j <= bound[i]; ++j)
                c[j] = (*sol)[col++];
            m.emplace_back(F, c);
        }
        m.push_back(APoly::constant(F, F.one()));
        return m;
    }
    throw InternalError("no minimal polynomial of pi found within the degree bounds");
}

} // namespace

std::vector<APoly> transposeBivariate(FqField const & F, std::vector<APoly> const & coeffs)
{
    int maxInner = -1;
    for (auto const & c : coeffs)
        maxInner = std::max(maxInner, c.degree());
    std::vector<APoly> out;
    for (int j = 0; j <= maxInner; ++j) {
        std::vector<FqElem> c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            c[i] = coeffs[i].coeff(j);
        out.emplace_back(F, c);
    }
    return out;
}

FrobeniusProfile::FrobeniusProfile(DrinfeldModule phi) : phi_(std::move(phi))
{
    FqField const & F = fq();
    m_ = computeMinpoly(phi_);
    mTilde_ = transposeBivariate(F, m_);
    NK_ = static_cast<int>(mTilde_.size()) - 1;
    APoly const & lead = mTilde_.back();
    if (lead.degree() != 0)
        throw InternalError("leading coefficient of m~ is not a constant");
    unit_ = lead.lead();
    FqElem const li = F.inv(unit_);
    for (auto & c : mTilde_)
        c = c.scaled(li);
    H_ = phi_.height();
    int const n = phi_.n(), d = phi_.d();
    lm_.lhs = (n + H_ * d - 1) / (H_ * d);
    lm_.rhs = NK_ % d == 0 ? NK_ / d : -1;
    lm_.verdict = lm_.lhs == lm_.rhs;
    solutions_ = solveRamificationInvariants(n, d, H_, NK_);
    field_ = std::make_shared<FrobeniusField const>(F, m_);
}

ClosedFormReport FrobeniusProfile::closedFormChecks() const
{
    ClosedFormReport c;
    c.ordinaryCondition = H_ * s() <= r();
    c.primeFieldCondition = d() == n();
    c.commutative = isCommutative();
    if ((c.ordinaryCondition || c.primeFieldCondition) && !lm_.verdict)
        c.consistent = false;
    if (c.commutative && lm_.verdict != (H_ == 1 || d() == n()))
        c.consistent = false;
    return c;
}

bool FrobeniusProfile::isSeparable() const
{
    std::uint32_t const p = fq().p();
    for (std::size_t i = 1; i < m_.size(); ++i)
        if (i % p != 0 && !m_[i].isZero())
            return true;
    return false;
}

bool FrobeniusProfile::verifyMinpoly() const
{
    SkewPoly acc(phi_.tower());
    SkewPoly const pi = phi_.frobenius();
    for (std::size_t i = m_.size(); i-- > 0;)
        acc = acc * pi + phi_.evalA(m_[i]);
    return acc.isZero();
}

bool FrobeniusProfile::verifyReduction() const
{
    if (NK_ % d() != 0)
        return false;
    APoly const target = phi_.charPrime().pow(static_cast<unsigned>(NK_ / d()));
    return m_[0].monic() == target;
}

std::string FrobeniusProfile::mText() const { return bivariateToString(m_, "x", "T"); }

std::string FrobeniusProfile::mTildeText() const { return bivariateToString(mTilde_, "x", "pi"); }

std::string bivariateToString(std::vector<APoly> const & coeffs, std::string const & outer,
                              std::string const & inner)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        APoly const & c = coeffs[i];
        if (c.isZero())
            continue;
        if (!first)
            os << "+";
        first = false;
        std::string cs = c.toString(inner);
        if (i == 0) {
            os << cs;
            continue;
        }
        if (!c.isOne())
            os << (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) << "*";
        os << outer;
        if (i > 1)
            os << "^" << i;
    }
    return first ? "0" : os.str();
}

std::vector<APoly> parseBivariate(FqField const & F, std::string const & text, std::string const & outer,
                                  std::string const & inner)
{
    // Expand parenthesised coefficients "(a)*x^i" by distributing; the
    // sparse parser handles flat sums of monomials only.
    std::string flat;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') {
            flat += text[i++];
            continue;
        }
        std::size_t close = text.find(')', i);
        if (close == std::string::npos)
            throw InputError("unbalanced parenthesis in '" + text + "'");
        std::string inside = text.substr(i + 1, close - i - 1);
        std::size_t j = close + 1;
        std::string suffix;
        if (j < text.size() && text[j] == '*') {
            ++j;
            while (j < text.size() && text[j] != '+' && text[j] != '-')
                suffix += text[j++];
        }
        std::string sign = "+";
        if (!flat.empty() && (flat.back() == '+' || flat.back() == '-')) {
            sign = std::string(1, flat.back());
            flat.pop_back();
        }
        for (auto const & [exps, c] : parseSparse(inside, {outer, inner})) {
            long long const cc = sign == "-" ? -c : c;
            flat += (cc < 0 ? "-" : "+") + std::to_string(cc < 0 ? -cc : cc);
            if (exps[0])
                flat += "*" + outer + "^" + std::to_string(exps[0]);
            if (exps[1])
                flat += "*" + inner + "^" + std::to_string(exps[1]);
            if (!suffix.empty())
                flat += "*" + suffix;
        }
        i = j;
    }
    std::vector<APoly> out;
    for (auto const & [exps, c] : parseSparse(flat, {outer, inner})) {
        if (out.size() <= exps[0])
            out.resize(exps[0] + 1, APoly(F));
        out[exps[0]] += APoly::monomial(F, F.fromInt(c), exps[1]);
    }
    return out;
}

} // namespace drinfeld
