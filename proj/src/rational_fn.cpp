#include "orbrr/rational_fn.hpp"

#include <sstream>

#include "orbrr/polyops.hpp"

namespace orbrr {

RationalFn::RationalFn(LaurentPoly num, Factors den) : num_(std::move(num)), den_(std::move(den))
{
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->first <= 0 || it->second < 0)
            throw std::invalid_argument("RationalFn: denominator factors need a>0, m>=0");
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
    strip_zero();
}

void RationalFn::strip_zero()
{
    if (num_.is_zero()) den_.clear();
}

void RationalFn::cancel_common()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        LaurentPoly fac = LaurentPoly::one() - LaurentPoly::monomial(it->first, 1);
        while (it->second > 0) {
            auto q = LaurentPoly::divexact(num_, fac);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

LaurentPoly RationalFn::den_expanded() const
{
    LaurentPoly d = LaurentPoly::one();
    for (const auto& [a, m] : den_) {
        LaurentPoly f = LaurentPoly::one() - LaurentPoly::monomial(a, 1);
        d = d * f.pow(static_cast<unsigned>(m));
    }
    return d;
}

long RationalFn::den_weight_sum() const
{
    long s = 0;
    for (const auto& [a, m] : den_) s += a * m;
    return s;
}

long RationalFn::den_factor_count() const
{
    long s = 0;
    for (const auto& [a, m] : den_) s += m;
    return s;
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn RationalFn::operator+(const RationalFn& g) const
{
    if (is_zero()) return g;
    if (g.is_zero()) return *this;
    // common denominator: per factor the max multiplicity of the two sides
    Factors den;
    for (const auto& [a, m] : den_) den[a] = m;
    for (const auto& [a, m] : g.den_) {
        auto it = den.find(a);
        if (it == den.end() || it->second < m) den[a] = m;
    }
    auto lift = [&den](const RationalFn& f) {
        LaurentPoly n = f.num_;
        for (const auto& [a, m] : den) {
            auto it = f.den_.find(a);
            int have = it == f.den_.end() ? 0 : it->second;
            if (m > have) {
                LaurentPoly fac = LaurentPoly::one() - LaurentPoly::monomial(a, 1);
                n = n * fac.pow(static_cast<unsigned>(m - have));
            }
        }
        return n;
    };
    LaurentPoly num = lift(*this) + lift(g);
    RationalFn out(std::move(num), std::move(den));
    out.cancel_common();
    return out;
}

RationalFn RationalFn::operator-(const RationalFn& g) const { return *this + (-g); }

RationalFn RationalFn::operator*(const RationalFn& g) const
{
    Factors den = den_;
    for (const auto& [a, m] : g.den_) den[a] += m;
    return RationalFn(num_ * g.num_, std::move(den));
}

RationalFn RationalFn::operator*(const Rational& c) const
{
    if (c == 0) return zero();
    return RationalFn(num_ * c, den_);
}

RationalFn RationalFn::operator*(const LaurentPoly& p) const
{
    return RationalFn(num_ * p, den_);
}

RationalFn RationalFn::times_factor(long a, int m) const
{
    Factors den = den_;
    LaurentPoly n = num_;
    auto it = den.find(a);
    int cancel = 0;
    if (it != den.end()) {
        cancel = std::min(m, it->second);
        it->second -= cancel;
        if (it->second == 0) den.erase(it);
    }
    if (m > cancel) {
        LaurentPoly fac = LaurentPoly::one() - LaurentPoly::monomial(a, 1);
        n = n * fac.pow(static_cast<unsigned>(m - cancel));
    }
    return RationalFn(std::move(n), std::move(den));
}

RationalFn RationalFn::over_factor(long a, int m) const
{
    if (is_zero()) return zero();
    Factors den = den_;
    den[a] += m;
    return RationalFn(num_, std::move(den));
}

bool RationalFn::equals(const RationalFn& g) const
{
    // cancel shared factors first to keep the cross product small
    Factors mine = den_, theirs = g.den_;
    for (auto& [a, m] : mine) {
        auto it = theirs.find(a);
        if (it == theirs.end()) continue;
        int common = std::min(m, it->second);
        m -= common;
        it->second -= common;
    }
    auto expand = [](const Factors& fs) {
        LaurentPoly d = LaurentPoly::one();
        for (const auto& [a, m] : fs)
            if (m > 0) {
                LaurentPoly f = LaurentPoly::one() - LaurentPoly::monomial(a, 1);
                d = d * f.pow(static_cast<unsigned>(m));
            }
        return d;
    };
    return num_ * expand(theirs) == g.num_ * expand(mine);
}

std::optional<LaurentPoly> RationalFn::to_polynomial() const
{
    if (den_.empty()) return num_;
    if (num_.is_zero()) return LaurentPoly::zero();
    return LaurentPoly::divexact(num_, den_expanded());
}

std::string RationalFn::to_string() const
{
    if (den_.empty()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(";
    for (const auto& [a, m] : den_) {
        os << "(1";
        os << " - ";
        if (a == 1)
            os << "t";
        else
            os << "t^" << a;
        os << ")";
        if (m > 1) os << "^" << m;
    }
    os << ")";
    return os.str();
}

namespace {

// "(1 - t^5)^2(1 - t)" after the leading '(' of the denominator group
RationalFn::Factors parse_factors(const std::string& s, std::size_t& i)
{
    RationalFn::Factors den;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    while (i < s.size() && s[i] == '(') {
        std::size_t close = s.find(')', i);
        if (close == std::string::npos)
            throw std::invalid_argument("RationalFn parse: unbalanced denominator");
        LaurentPoly fac = LaurentPoly::parse(s.substr(i + 1, close - i - 1));
        i = close + 1;
        int mult = 1;
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            mult = std::stoi(s.substr(start, i - start));
        }
        // factor must be exactly 1 - t^a
        if (fac.term_count() != 2 || fac.coeff(0) != 1 || fac.degree() < 1 ||
            fac.coeff(fac.degree()) != -1)
            throw std::invalid_argument("RationalFn parse: factor is not of the form 1-t^a: " +
                                        fac.to_string());
        den[fac.degree()] += mult;
        skip();
    }
    return den;
}

}  // namespace

RationalFn RationalFn::parse(const std::string& text)
{
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '(') return RationalFn(LaurentPoly::parse(text));
    // find the matching ')': the numerator group
    int depth = 0;
    std::size_t j = i;
    for (; j < text.size(); ++j) {
        if (text[j] == '(') ++depth;
        if (text[j] == ')' && --depth == 0) break;
    }
    if (depth != 0) throw std::invalid_argument("RationalFn parse: unbalanced '('");
    LaurentPoly num = LaurentPoly::parse(text.substr(i + 1, j - i - 1));
    i = j + 1;
    skip();
    if (i >= text.size()) return RationalFn(std::move(num));
    if (text[i] != '/') throw std::invalid_argument("RationalFn parse: expected '/'");
    ++i;
    skip();
    if (i >= text.size() || text[i] != '(')
        throw std::invalid_argument("RationalFn parse: expected '(' after '/'");
    ++i;
    Factors den = parse_factors(text, i);
    skip();
    if (i >= text.size() || text[i] != ')')
        throw std::invalid_argument("RationalFn parse: expected closing ')'");
    ++i;
    skip();
    if (i != text.size()) throw std::invalid_argument("RationalFn parse: trailing input");
    return RationalFn(std::move(num), std::move(den));
}

}  // namespace orbrr
