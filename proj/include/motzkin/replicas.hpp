#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "motzkin/adapted.hpp"
#include "motzkin/poly.hpp"

namespace motzkin {

// Tokens of a site word: positive ids are algebra letters, proj is p (or q on
// the second string) and perp its complement. Letters next to each other multiply.
constexpr int proj = -1;
constexpr int perp = -2;
using SiteWord = std::vector<int>;

struct TensorString {
    std::vector<SiteWord> sites;
    bool tail_proj = false;

    auto operator<=>(const TensorString&) const = default;
};

struct SimpleTensor {
    std::array<TensorString, 2> strings;

    auto operator<=>(const SimpleTensor&) const = default;
};

class BElement {
public:
    BElement() = default;
    BElement(const Poly& c);

    static BElement p(int j, const Poly& c = Poly(1));
    static BElement e(int n, const Poly& c = Poly(1));

    const Poly& unit_part() const { return c0_; }
    const std::map<int, Poly>& parts() const { return c_; }
    Poly coeff(int j) const;
    Poly zeta() const;
    bool is_zero() const { return c0_.is_zero() && c_.empty(); }

    BElement& operator+=(const BElement& o);
    BElement& operator-=(const BElement& o);
    friend BElement operator+(BElement a, const BElement& b) { return a += b; }
    friend BElement operator-(BElement a, const BElement& b) { return a -= b; }
    friend BElement operator*(const BElement& a, const BElement& b);
    friend BElement operator*(const Poly& c, const BElement& b);
    bool operator==(const BElement& o) const { return c0_ == o.c0_ && c_ == o.c_; }

    std::string str(const VarNamer& names = default_name) const;

private:
    void add(int j, const Poly& c);
    Poly c0_;
    std::map<int, Poly> c_;
};

class ReplicaElement {
public:
    ReplicaElement() = default;
    ReplicaElement(const Poly& c);
    ReplicaElement(const BElement& b);

    static ReplicaElement tensor(const SimpleTensor& t, const Poly& c = Poly(1));

    const std::map<SimpleTensor, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ReplicaElement& operator+=(const ReplicaElement& o);
    ReplicaElement& operator-=(const ReplicaElement& o);
    friend ReplicaElement operator+(ReplicaElement a, const ReplicaElement& b) { return a += b; }
    friend ReplicaElement operator-(ReplicaElement a, const ReplicaElement& b) { return a -= b; }
    friend ReplicaElement operator*(const ReplicaElement& a, const ReplicaElement& b);
    bool operator==(const ReplicaElement& o) const { return terms_ == o.terms_; }
    bool operator<(const ReplicaElement& o) const { return terms_ < o.terms_; }

private:
    void add(const SimpleTensor& t, const Poly& c);
    std::map<SimpleTensor, Poly> terms_;
};

// var 0 is the unit of the algebra with that label
ReplicaElement replica(int var, int label, int color);
ReplicaElement e_proj(int n);
ReplicaElement p_proj(int n);
ReplicaElement e_label(int label, int n);

Poly phi(const ReplicaElement& x);
Poly psi(int j, const ReplicaElement& x);
BElement expectation(const ReplicaElement& x);

ReplicaElement product(const std::vector<ReplicaElement>& xs);
// rewrites every perp as 1 - proj; two elements are equal iff their canonical forms coincide
ReplicaElement canonical(const ReplicaElement& x);
bool equivalent(const ReplicaElement& a, const ReplicaElement& b);

// B_w and K_w on replica arguments; the colors of the arguments are not checked against w
BElement B_rep(const Word& w, const std::vector<ReplicaElement>& args);
BElement K_rep(const Word& w, const std::vector<ReplicaElement>& args);
// nested product over the blocks of p, each block evaluated by B_rep or K_rep
BElement nested_rep(const AdaptedPartition& p, const std::vector<ReplicaElement>& args, bool use_K);
BElement K_closed_form_rep(const Word& w, const std::vector<ReplicaElement>& args);

}
