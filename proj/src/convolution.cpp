#include "motzkin/convolution.hpp"

#include <stdexcept>

#include "motzkin/adapted.hpp"
#include "motzkin/cumulants.hpp"
#include "motzkin/replicas.hpp"

namespace motzkin {

namespace {

void check_vars(const std::vector<int>& vars)
{
    for (int v : vars)
        if (v < 1)
            throw std::invalid_argument("variable ids start at 1");
}

std::vector<int> restrict_to(const std::vector<int>& xs, const Block& b)
{
    std::vector<int> r;
    for (int k : b)
        r.push_back(xs[k - 1]);
    return r;
}

// sum over partitions of the class with label-constant blocks of the product of cumulants
Poly product_moment(Kind kind, PartitionClass cls, const std::vector<int>& vars, const std::vector<int>& labels)
{
    check_vars(vars);
    if (vars.size() != labels.size())
        throw std::invalid_argument("labels and variables differ in length");
    if (vars.empty())
        return Poly(1);
    Poly r;
    for (const auto& p : enumerate_partitions(static_cast<int>(vars.size()), cls)) {
        if (!label_constant(p, labels))
            continue;
        Poly t(1);
        for (const auto& b : p.blocks)
            t *= Poly::symbol(kind, labels[b[0] - 1], restrict_to(vars, b));
        r += t;
    }
    return convert(r, Kind::m);
}

void check_lengths(const Word& w, const std::vector<int>& vars)
{
    check_vars(vars);
    if (w.size() != vars.size())
        throw std::invalid_argument("word and monomial differ in length");
    if (!w.empty() && !is_reduced(w))
        throw std::invalid_argument("word must be a reduced Motzkin word");
}

std::vector<Labeling> all_labelings(int n)
{
    std::vector<Labeling> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Labeling l(n);
        for (int i = 0; i < n; ++i)
            l[i] = (mask >> i & 1) ? 2 : 1;
        out.push_back(std::move(l));
    }
    return out;
}

}

Rational Distribution::moment(const Word& w) const
{
    if (w.empty())
        return 1;
    if (static_cast<int>(w.size()) > order)
        throw std::invalid_argument("moment of length " + std::to_string(w.size()) + " exceeds the order "
                                    + std::to_string(order));
    auto it = moments.find(w);
    if (it == moments.end()) {
        std::string name;
        for (int v : w) {
            if (v < 1 || v > static_cast<int>(alphabet.size()))
                throw std::invalid_argument("unknown variable id " + std::to_string(v));
            name += alphabet[v - 1];
        }
        throw std::invalid_argument("missing moment " + name);
    }
    return it->second;
}

int Distribution::variable(const std::string& name) const
{
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name)
            return static_cast<int>(i) + 1;
    throw std::invalid_argument("unknown variable " + name);
}

void Distribution::check_total() const
{
    if (alphabet.empty())
        throw std::invalid_argument("empty alphabet");
    if (order < 1)
        throw std::invalid_argument("order must be positive");
    for (const auto& [w, v] : moments) {
        if (w.empty() || static_cast<int>(w.size()) > order)
            throw std::invalid_argument("moment word length out of range");
        for (int x : w)
            if (x < 1 || x > static_cast<int>(alphabet.size()))
                throw std::invalid_argument("unknown variable id " + std::to_string(x));
    }
    int a = static_cast<int>(alphabet.size());
    Word w;
    for (int len = 1; len <= order; ++len) {
        w.assign(len, 1);
        while (true) {
            moment(w);
            int i = len - 1;
            while (i >= 0 && w[i] == a)
                w[i--] = 1;
            if (i < 0)
                break;
            ++w[i];
        }
    }
}

Distribution univariate_distribution(const std::vector<Rational>& moments)
{
    Distribution d;
    d.alphabet = {"x"};
    d.order = static_cast<int>(moments.size());
    for (size_t n = 1; n <= moments.size(); ++n)
        d.moments[Word(n, 1)] = moments[n - 1];
    return d;
}

Poly free_product_moment(const std::vector<int>& vars, const std::vector<int>& labels)
{
    return product_moment(Kind::r, PartitionClass::nc, vars, labels);
}

Poly boolean_product_moment(const std::vector<int>& vars, const std::vector<int>& labels)
{
    return product_moment(Kind::beta, PartitionClass::interval, vars, labels);
}

Poly boxplus_w(const Word& w, const std::vector<int>& vars)
{
    check_lengths(w, vars);
    if (w.empty())
        return Poly(1);
    std::vector<ReplicaElement> factors;
    for (size_t i = 0; i < w.size(); ++i)
        factors.push_back(replica(vars[i], 1, w[i]) + replica(vars[i], 2, w[i]));
    return phi(product(factors));
}

Poly boxplus_w_monotone(const Word& w, const std::vector<int>& vars)
{
    check_lengths(w, vars);
    if (w.empty())
        return Poly(1);
    Poly r;
    for (const auto& p : enumerate_adapted(w, AdaptedClass::monotone))
        for (const auto& l : labelings_of(p.base).alternating) {
            Poly t(1);
            for (const auto& b : p.base.blocks)
                t *= Poly::symbol(Kind::beta, l[b[0] - 1], restrict_to(vars, b));
            r += t;
        }
    return convert(r, Kind::m);
}

Poly boxplus_w_nested(const Word& w, const std::vector<int>& vars)
{
    check_lengths(w, vars);
    if (w.empty())
        return Poly(1);
    Poly r;
    for (const auto& p : enumerate_adapted(w, AdaptedClass::all))
        for (const auto& l : labelings_of(p.base).all) {
            std::vector<ReplicaElement> args;
            for (size_t i = 0; i < w.size(); ++i)
                args.push_back(replica(vars[i], l[i], w[i]));
            r += nested_rep(p, args, true).zeta();
        }
    return convert(r, Kind::m);
}

std::vector<std::pair<Word, Poly>> boxplus_by_path(const std::vector<int>& vars)
{
    check_vars(vars);
    std::vector<std::pair<Word, Poly>> out;
    if (vars.empty()) {
        out.emplace_back(Word{}, Poly(1));
        return out;
    }
    for (auto& w : motzkin_words(static_cast<int>(vars.size()))) {
        Poly v = boxplus_w(w, vars);
        out.emplace_back(std::move(w), std::move(v));
    }
    return out;
}

Poly boxplus_total(const std::vector<int>& vars)
{
    Poly r;
    for (const auto& l : all_labelings(static_cast<int>(vars.size())))
        r += free_product_moment(vars, l);
    return r;
}

Poly boolean_total(const std::vector<int>& vars)
{
    Poly r;
    for (const auto& l : all_labelings(static_cast<int>(vars.size())))
        r += boolean_product_moment(vars, l);
    return r;
}

Poly delta(const std::vector<int>& vars)
{
    return boxplus_total(vars) - boolean_total(vars);
}

Rational evaluate(const Poly& p, const Distribution& mu1, const Distribution& mu2)
{
    return convert(p, Kind::m).evaluate([&](const Symbol& s) -> Rational {
        if (s.kind != Kind::m)
            throw std::logic_error("unexpected cumulant symbol");
        if (s.label == 1)
            return mu1.moment(s.args);
        if (s.label == 2)
            return mu2.moment(s.args);
        throw std::invalid_argument("moment symbol with label " + std::to_string(s.label));
    });
}

}
