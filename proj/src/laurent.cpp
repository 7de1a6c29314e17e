#include "orbrr/laurent.hpp"

#include <cctype>
#include <sstream>

namespace orbrr {

LaurentPoly LaurentPoly::monomial(long deg, Rational coeff)
{
    LaurentPoly f;
    if (coeff != 0) f.coeffs_.emplace(deg, std::move(coeff));
    return f;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<Rational>& c)
{
    LaurentPoly f;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) f.coeffs_.emplace(static_cast<long>(i), c[i]);
    return f;
}

long LaurentPoly::degree() const
{
    if (is_zero()) throw math_error("degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

long LaurentPoly::lowest_degree() const
{
    if (is_zero()) throw math_error("lowest_degree of zero polynomial");
    return coeffs_.begin()->first;
}

Rational LaurentPoly::coeff(long deg) const
{
    auto it = coeffs_.find(deg);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::is_integral() const
{
    for (const auto& [d, c] : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

bool LaurentPoly::is_constant() const
{
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

void LaurentPoly::set_coeff(long deg, const Rational& c)
{
    if (c == 0)
        coeffs_.erase(deg);
    else
        coeffs_[deg] = c;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly f;
    for (const auto& [d, c] : coeffs_) f.coeffs_.emplace(d, -c);
    return f;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& g) const
{
    LaurentPoly f = *this;
    for (const auto& [d, c] : g.coeffs_) {
        auto it = f.coeffs_.find(d);
        if (it == f.coeffs_.end()) {
            f.coeffs_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second == 0) f.coeffs_.erase(it);
        }
    }
    return f;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& g) const { return *this + (-g); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& g) const
{
    LaurentPoly f;
    for (const auto& [da, ca] : coeffs_)
        for (const auto& [db, cb] : g.coeffs_) {
            long d = da + db;
            auto it = f.coeffs_.find(d);
            if (it == f.coeffs_.end()) {
                Rational p = ca * cb;
                if (p != 0) f.coeffs_.emplace(d, std::move(p));
            } else {
                it->second += ca * cb;
                if (it->second == 0) f.coeffs_.erase(it);
            }
        }
    return f;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const
{
    LaurentPoly f;
    if (c == 0) return f;
    for (const auto& [d, a] : coeffs_) f.coeffs_.emplace(d, a * c);
    return f;
}

LaurentPoly LaurentPoly::shifted(long by) const
{
    LaurentPoly f;
    for (const auto& [d, c] : coeffs_) f.coeffs_.emplace(d + by, c);
    return f;
}

LaurentPoly LaurentPoly::pow(unsigned e) const
{
    LaurentPoly acc = one();
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

LaurentPoly LaurentPoly::reciprocal_substitution() const
{
    LaurentPoly f;
    for (const auto& [d, c] : coeffs_) f.coeffs_.emplace(-d, c);
    return f;
}

Rational LaurentPoly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (const auto& [d, c] : coeffs_) {
        Rational p = 1;
        long e = d < 0 ? -d : d;
        for (long i = 0; i < e; ++i) p *= x;
        if (d < 0) {
            if (x == 0) throw math_error("eval at 0 with negative degrees");
            p = 1 / p;
        }
        acc += c * p;
    }
    return acc;
}

std::optional<LaurentPoly> LaurentPoly::divexact(const LaurentPoly& f, const LaurentPoly& g)
{
    if (g.is_zero()) throw math_error("division by zero polynomial");
    if (f.is_zero()) return zero();
    long shift = f.lowest_degree() - g.lowest_degree();
    LaurentPoly r = f.shifted(-f.lowest_degree());
    LaurentPoly d = g.shifted(-g.lowest_degree());
    LaurentPoly q;
    const Rational lead = d.coeff(d.degree());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        long e = r.degree() - d.degree();
        Rational c = r.coeff(r.degree()) / lead;
        q.coeffs_[e] = c;
        r = r - d.shifted(e) * c;
    }
    if (!r.is_zero()) return std::nullopt;
    return q.shifted(shift);
}

std::string LaurentPoly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (d == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            if (d == 1)
                os << "t";
            else
                os << "t^" << d;
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Scanner {
    const std::string& s;
    std::size_t i = 0;
    explicit Scanner(const std::string& text) : s(text) {}
    void skip_ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof()
    {
        skip_ws();
        return i >= s.size();
    }
    char peek()
    {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c)
    {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg)
    {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + msg +
                                    " in '" + s + "'");
    }
    long integer()
    {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return std::stol(s.substr(start, i - start));
    }
    Rational number()
    {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected number");
        Rational num(s.substr(start, i - start));
        // a '/' followed by a digit is a fraction; '/(' belongs to the caller
        std::size_t save = i;
        if (accept('/')) {
            skip_ws();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::size_t dstart = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                num /= Rational(s.substr(dstart, i - dstart));
                num.canonicalize();
            } else {
                i = save;
            }
        }
        return num;
    }
};

// term := [coeff ['*']] ['t' ['^' int]]
void parse_term(Scanner& sc, int sign, LaurentPoly& out)
{
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        coeff = sc.number();
        have_coeff = true;
        sc.accept('*');
    }
    long deg = 0;
    if (sc.accept('t')) {
        deg = 1;
        if (sc.accept('^')) deg = sc.integer();
    } else if (!have_coeff) {
        sc.fail("expected term");
    }
    out.set_coeff(deg, out.coeff(deg) + Rational(sign) * coeff);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text)
{
    Scanner sc(text);
    LaurentPoly out;
    if (sc.peek() == '0') {
        std::size_t save = sc.i;
        ++sc.i;
        if (sc.eof()) return out;
        sc.i = save;
    }
    int sign = 1;
    if (sc.accept('-'))
        sign = -1;
    else
        sc.accept('+');
    parse_term(sc, sign, out);
    while (!sc.eof()) {
        if (sc.accept('+'))
            sign = 1;
        else if (sc.accept('-'))
            sign = -1;
        else
            sc.fail("expected '+' or '-'");
        parse_term(sc, sign, out);
    }
    return out;
}

}  // namespace orbrr
