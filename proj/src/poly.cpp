#include "motzkin/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace motzkin {

std::string format_rational(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string default_name(int label, int id)
{
    if (id == 0)
        return label ? "1_" + std::to_string(label) : "1";
    const char* stem = label == 1 ? "x" : label == 2 ? "y" : "a";
    return stem + std::to_string(id);
}

const char* kind_name(Kind k)
{
    switch (k) {
    case Kind::m:
        return "m";
    case Kind::beta:
        return "beta";
    case Kind::r:
        return "r";
    }
    return "?";
}

Poly::Poly(long c)
    : Poly(Rational(c))
{
}

Poly::Poly(const Rational& c)
{
    if (c != 0)
        terms_[{}] = c;
}

Poly Poly::symbol(Kind kind, int label, std::vector<int> args)
{
    if (args.empty())
        throw std::invalid_argument("symbol without arguments");
    bool has_unit = std::find(args.begin(), args.end(), 0) != args.end();
    if (has_unit) {
        switch (kind) {
        case Kind::m:
            std::erase(args, 0);
            if (args.empty())
                return Poly(1);
            break;
        case Kind::r:
            return Poly(args.size() == 1 ? 1 : 0);
        case Kind::beta:
            if (args.size() == 1)
                return Poly(1);
            if (args.front() == 0 || args.back() == 0)
                return Poly();
            std::erase(args, 0);
            break;
        }
    }
    return monomial({Symbol{kind, label, std::move(args)}});
}

Poly Poly::monomial(Monomial m, Rational c)
{
    Poly p;
    p.add_term(std::move(m), c);
    return p;
}

Rational Poly::constant_term() const
{
    auto it = terms_.find({});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(Monomial m, const Rational& c)
{
    if (c == 0)
        return;
    std::sort(m.begin(), m.end());
    auto [it, fresh] = terms_.try_emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(std::move(m), ca * cb);
        }
    return r;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Poly Poly::substitute(const std::function<std::optional<Poly>(const Symbol&)>& f) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly t(c);
        for (const auto& s : m) {
            auto sub = f(s);
            t *= sub ? *sub : monomial({s});
            if (t.is_zero())
                break;
        }
        r += t;
    }
    return r;
}

Rational Poly::evaluate(const std::function<Rational(const Symbol&)>& f) const
{
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& s : m)
            t *= f(s);
        total += t;
    }
    return total;
}

std::string format_symbol(const Symbol& s, const VarNamer& names, bool univariate)
{
    std::string out = std::string(kind_name(s.kind)) + "_" + std::to_string(s.order());
    if (univariate)
        return out;
    out += '(';
    for (size_t k = 0; k < s.args.size(); ++k) {
        if (k)
            out += ',';
        out += names(s.label, s.args[k]);
    }
    return out + ')';
}

std::string Poly::str(const VarNamer& names, bool univariate) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (m.empty()) {
            out += format_rational(mag);
            continue;
        }
        if (mag != 1)
            out += format_rational(mag) + "*";
        std::vector<std::pair<std::string, int>> factors;
        for (const auto& sym : m) {
            auto f = format_symbol(sym, names, univariate);
            if (!factors.empty() && factors.back().first == f)
                ++factors.back().second;
            else
                factors.push_back({f, 1});
        }
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k)
                out += "*";
            out += factors[k].first;
            if (factors[k].second > 1)
                out += "^" + std::to_string(factors[k].second);
        }
    }
    return out;
}

}
