#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace motzkin {

using Rational = mpq_class;

std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& s);

enum class Kind { m, beta, r };

// Variable id 0 stands for the unit of the algebra carrying the symbol's label.
struct Symbol {
    Kind kind = Kind::m;
    int label = 0;
    std::vector<int> args;

    auto operator<=>(const Symbol&) const = default;
    int order() const { return static_cast<int>(args.size()); }
};

using Monomial = std::vector<Symbol>;

using VarNamer = std::function<std::string(int label, int id)>;
std::string default_name(int label, int id);

class Poly {
public:
    Poly() = default;
    Poly(long c);
    Poly(const Rational& c);

    static Poly symbol(Kind kind, int label, std::vector<int> args);
    static Poly monomial(Monomial m, Rational c = 1);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    Rational constant_term() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator-(Poly a)
    {
        a *= Rational(-1);
        return a;
    }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    // symbols for which f returns nullopt are kept
    Poly substitute(const std::function<std::optional<Poly>(const Symbol&)>& f) const;
    Rational evaluate(const std::function<Rational(const Symbol&)>& f) const;

    std::string str(const VarNamer& names = default_name, bool univariate = false) const;

private:
    void add_term(Monomial m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

std::string format_symbol(const Symbol& s, const VarNamer& names = default_name, bool univariate = false);
const char* kind_name(Kind k);

}
