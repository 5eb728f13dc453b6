#include "motzkin/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "motzkin/adapted.hpp"
#include "motzkin/convolution.hpp"
#include "motzkin/cumulants.hpp"
#include "motzkin/replicas.hpp"

namespace motzkin {

namespace {

class Check {
public:
    void expect(bool ok, const std::string& what)
    {
        ++total_;
        if (ok)
            return;
        if (failed_++ == 0)
            first_ = what;
    }
    bool pass() const { return failed_ == 0; }
    std::string detail() const
    {
        if (pass())
            return std::to_string(total_) + " checks";
        return std::to_string(failed_) + "/" + std::to_string(total_) + " failed, first: " + first_;
    }

private:
    long total_ = 0;
    long failed_ = 0;
    std::string first_;
};

long catalan(int n)
{
    long c = 1;
    for (int k = 0; k < n; ++k)
        c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

std::vector<int> vars_upto(int n)
{
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = i + 1;
    return v;
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

std::vector<Labeling> alternating_labelings(int n)
{
    Labeling a(n), b(n);
    for (int i = 0; i < n; ++i) {
        a[i] = 1 + i % 2;
        b[i] = 2 - i % 2;
    }
    return {a, b};
}

bool identical(const Labeling& l)
{
    return std::all_of(l.begin(), l.end(), [&](int x) { return x == l[0]; });
}

// Motzkin words of length n and any height up to max_height
std::vector<Word> am_words(int n, int max_height)
{
    std::vector<Word> out;
    for (int h = 1; h <= max_height; ++h)
        for (auto& w : motzkin_words(n, h))
            out.push_back(std::move(w));
    return out;
}

Poly beta(int label, std::vector<int> args)
{
    return Poly::symbol(Kind::beta, label, std::move(args));
}

Poly in_m(const Poly& p)
{
    return convert(p, Kind::m);
}

Poly uni(Kind k, int label, int n)
{
    return Poly::symbol(k, label, univariate(n));
}

std::vector<ReplicaElement> reps(const Word& w, const Labeling& l)
{
    std::vector<ReplicaElement> a;
    for (size_t i = 0; i < w.size(); ++i)
        a.push_back(replica(static_cast<int>(i) + 1, l[i], w[i]));
    return a;
}

ReplicaElement unit()
{
    return ReplicaElement(Poly(1));
}

std::string tag(const Word& w, const Labeling& l)
{
    std::string s = format_word(w) + "/";
    for (int x : l)
        s += std::to_string(x);
    return s;
}

std::set<std::pair<int, std::string>> term_set(const std::vector<SignedTerm>& ts)
{
    std::set<std::pair<int, std::string>> s;
    for (const auto& t : ts)
        s.emplace(t.sign, t.text);
    return s;
}

// inserting letter j after position k keeps every irreducible partition of w adapted
// once the new position is added as a singleton
bool lifts(const Word& w, int k, int j)
{
    int n = static_cast<int>(w.size());
    if (k == 0 || k == n)
        return true;
    Word wh = w;
    wh.insert(wh.begin() + k, j);
    for (const auto& p : enumerate_adapted(w, AdaptedClass::irr)) {
        std::vector<Block> blocks{{k + 1}};
        for (auto b : p.base.blocks) {
            for (auto& x : b)
                if (x > k)
                    ++x;
            blocks.push_back(b);
        }
        if (!is_adapted(make_partition(n + 1, std::move(blocks)), wh))
            return false;
    }
    return true;
}

// scalar cumulant of a block word of any height, read through its shift
Poly k_shift(const std::string& w, const std::vector<int>& vars, int label)
{
    return motzkin_k(reduce(parse_word(w)), vars, std::vector<int>(vars.size(), label));
}

Poly k_lin(const std::string& w, const std::vector<int>& vars)
{
    return k_shift(w, vars, 1) + k_shift(w, vars, 2);
}

int mobius(const Poset& poset, int lo, int hi)
{
    const auto& el = poset.elements;
    std::vector<int> between;
    for (int z = 0; z < static_cast<int>(el.size()); ++z)
        if (precedes(el[lo], el[z]) && precedes(el[z], el[hi]))
            between.push_back(z);
    std::sort(between.begin(), between.end(),
              [&](int a, int b) { return el[a].size() > el[b].size(); });
    std::map<int, int> mu;
    for (int z : between) {
        if (z == lo) {
            mu[z] = 1;
            continue;
        }
        int s = 0;
        for (int y : between)
            if (y != z && precedes(el[y], el[z]))
                s += mu[y];
        mu[z] = -s;
    }
    return mu[hi];
}

int find_element(const Poset& poset, const std::string& partition)
{
    for (size_t i = 0; i < poset.elements.size(); ++i)
        if (format_partition(poset.elements[i].base) == partition)
            return static_cast<int>(i);
    throw std::logic_error("no element " + partition);
}

void counting(Check& c, Scale)
{
    const std::vector<size_t> motzkin = {1, 1, 2, 4, 9, 21, 51, 127};
    for (int n = 1; n <= 8; ++n)
        c.expect(motzkin_words(n).size() == motzkin[n - 1], "|M_" + std::to_string(n) + "|");
    // words of length n are paths with n-1 steps
    std::vector<long> m = {1, 1};
    for (int k = 2; k < 8; ++k) {
        long s = m[k - 1];
        for (int i = 0; i <= k - 2; ++i)
            s += m[i] * m[k - 2 - i];
        m.push_back(s);
    }
    for (int n = 1; n <= 8; ++n)
        c.expect(static_cast<long>(motzkin[n - 1]) == m[n - 1], "Motzkin recurrence at " + std::to_string(n));
    for (int n = 1; n <= 9; ++n) {
        auto N = std::to_string(n);
        c.expect(static_cast<long>(enumerate_partitions(n, PartitionClass::nc).size()) == catalan(n), "|NC(" + N + ")|");
        c.expect(enumerate_partitions(n, PartitionClass::interval).size() == (1u << (n - 1)), "|Int(" + N + ")|");
        c.expect(static_cast<long>(enumerate_partitions(n, PartitionClass::nc_irr).size()) == catalan(n - 1),
                 "|NC_irr(" + N + ")|");
    }
}

void lattice_11221(Check& c, Scale)
{
    auto L = lattice_of(parse_word("11221"));
    c.expect(L.elements.size() == 10, "10 elements");
    const std::string zero = "{1},{2,5},{3},{4}", A = "{1},{2,4,5},{3}", B = "{1},{2,3,5},{4}",
                      C = "{1},{2,5},{3,4}", D = "{1,2,5},{3},{4}", E = "{1},{2,3,4,5}", F = "{1,2,3,5},{4}",
                      G = "{1,2,5},{3,4}", H = "{1,2,4,5},{3}", one = "{1,2,3,4,5}";
    std::set<std::pair<std::string, std::string>> want = {
        {zero, A}, {zero, B}, {zero, C}, {zero, D}, {A, E}, {B, E}, {C, E}, {B, F}, {D, F},
        {C, G},    {D, G},    {A, H},    {D, H},    {E, one}, {F, one}, {G, one}, {H, one},
    };
    std::set<std::pair<std::string, std::string>> got;
    for (auto [a, b] : L.covers)
        got.emplace(format_partition(L.elements[a].base), format_partition(L.elements[b].base));
    c.expect(got == want, "Hasse cover relations");
    int irr = 0, split = 0;
    for (const auto& p : L.elements) {
        if (is_irreducible(p.base))
            ++irr;
        else if (p.base.blocks[0] == Block{1})
            ++split;
    }
    c.expect(irr == 5 && split == 5, "5 + 5 split");
    c.expect(enumerate_adapted(parse_word("11221"), AdaptedClass::irr).size() == 5, "|NC_irr(11221)|");
    c.expect(enumerate_adapted(parse_word("1221"), AdaptedClass::irr).size() == 5, "|NC_irr(1221)|");
}

void irreducible_length5(Check& c, Scale)
{
    const std::vector<std::pair<std::string, size_t>> counts = {
        {"11111", 1}, {"11121", 2}, {"11211", 2}, {"12111", 2}, {"12121", 4},
        {"11221", 5}, {"12211", 5}, {"12221", 13}, {"12321", 4},
    };
    for (const auto& [w, k] : counts)
        c.expect(enumerate_adapted(parse_word(w), AdaptedClass::irr).size() == k, "NC_irr(" + w + ")");
    const std::set<std::string> diagrams = {
        "{1,2,3,4,5}",       "{1,2,3,5},{4}",     "{1,2,4,5},{3}",     "{1,2,5},{3},{4}", "{1,2,5},{3,4}",
        "{1,3,4,5},{2}",     "{1,3,5},{2},{4}",   "{1,4,5},{2},{3}",   "{1,4,5},{2,3}",   "{1,5},{2},{3},{4}",
        "{1,5},{2},{3,4}",   "{1,5},{2,3},{4}",   "{1,5},{2,3,4}",
    };
    std::set<std::string> got;
    for (const auto& p : enumerate_adapted(parse_word("12221"), AdaptedClass::irr))
        got.insert(format_partition(p.base));
    c.expect(got == diagrams, "the 13 diagrams of NC_irr(12221)");
    std::set<std::string> mono;
    for (const auto& p : enumerate_adapted(parse_word("12221"), AdaptedClass::monotone))
        mono.insert(format_partition(p.base));
    c.expect(mono == std::set<std::string>{"{1,5},{2},{3},{4}", "{1,5},{2},{3,4}", "{1,5},{2,3},{4}", "{1,5},{2,3,4}"},
             "M(12221)");
}

void lattice(Check& c, Scale s)
{
    int closure_max = s == Scale::full ? 7 : 5;
    int join_max = s == Scale::full ? 6 : 5;
    for (int n = 1; n <= closure_max; ++n)
        for (const auto& w : motzkin_words(n))
            c.expect(coarsening_closure(w) == enumerate_adapted(w, AdaptedClass::all), "closure " + format_word(w));
    for (int n = 1; n <= join_max; ++n)
        for (const auto& w : motzkin_words(n)) {
            auto el = enumerate_adapted(w, AdaptedClass::all);
            std::set<AdaptedPartition> members(el.begin(), el.end());
            for (const auto& a : el)
                for (const auto& b : el) {
                    auto j = join_adapted(a, b);
                    bool ok = members.count(j) && precedes(a, j) && precedes(b, j) && j.base == join_nc(a.base, b.base);
                    for (const auto& u : el)
                        if (ok && precedes(a, u) && precedes(b, u))
                            ok = precedes(j, u);
                    c.expect(ok, "join on " + format_word(w) + ": " + format_partition(a.base) + " v "
                                     + format_partition(b.base));
                }
        }
}

void transforms(Check& c, Scale s)
{
    auto m = [](int k) { return uni(Kind::m, 0, k); };
    auto b = [](int k) { return uni(Kind::beta, 0, k); };
    c.expect(express(Kind::r, Kind::m, 0, univariate(1)) == m(1), "r1 in m");
    c.expect(express(Kind::r, Kind::m, 0, univariate(2)) == m(2) - m(1) * m(1), "r2 in m");
    c.expect(express(Kind::r, Kind::m, 0, univariate(3)) == m(3) - m(2) * m(1) * Rational(3) + m(1) * m(1) * m(1) * Rational(2),
             "r3 in m");
    c.expect(express(Kind::r, Kind::m, 0, univariate(4))
                 == m(4) - m(3) * m(1) * Rational(4) - m(2) * m(2) * Rational(2) + m(2) * m(1) * m(1) * Rational(10)
                        - m(1) * m(1) * m(1) * m(1) * Rational(5),
             "r4 in m");
    c.expect(express(Kind::r, Kind::beta, 0, univariate(1)) == b(1), "r1 in beta");
    c.expect(express(Kind::r, Kind::beta, 0, univariate(2)) == b(2), "r2 in beta");
    c.expect(express(Kind::r, Kind::beta, 0, univariate(3)) == b(3) - b(2) * b(1), "r3 in beta");
    c.expect(express(Kind::r, Kind::beta, 0, univariate(4)) == b(4) - b(3) * b(1) * Rational(2) - b(2) * b(2) + b(2) * b(1) * b(1),
             "r4 in beta");
    c.expect(express(Kind::r, Kind::beta, 0, {1, 2, 3}) == beta(0, {1, 2, 3}) - beta(0, {1, 3}) * beta(0, {2}), "r3(a1,a2,a3)");
    c.expect(express(Kind::r, Kind::beta, 0, {1, 2, 3, 4})
                 == beta(0, {1, 2, 3, 4}) - beta(0, {1, 2, 4}) * beta(0, {3}) - beta(0, {1, 3, 4}) * beta(0, {2})
                        - beta(0, {1, 4}) * beta(0, {2, 3}) + beta(0, {1, 4}) * beta(0, {2}) * beta(0, {3}),
             "r4(a1,a2,a3,a4)");
    c.expect(express(Kind::r, Kind::beta, 0, {1, 2, 3, 4}).str() ==
                 "beta_4(a1,a2,a3,a4) - beta_3(a1,a2,a4)*beta_1(a3) - beta_3(a1,a3,a4)*beta_1(a2) + "
                 "beta_2(a1,a4)*beta_1(a2)*beta_1(a3) - beta_2(a1,a4)*beta_2(a2,a3)",
             "r4(a1,a2,a3,a4) rendering");

    const std::vector<std::pair<Kind, Kind>> trips = {{Kind::m, Kind::r}, {Kind::m, Kind::beta}, {Kind::beta, Kind::r}};
    auto round_trip = [&](const std::vector<int>& args, const std::string& what) {
        for (auto [from, to] : trips)
            c.expect(convert(express(from, to, 0, args), from) == Poly::symbol(from, 0, args),
                     std::string(kind_name(from)) + "->" + kind_name(to) + " round trip " + what);
    };
    int uni_max = s == Scale::full ? 8 : 6;
    int multi_max = s == Scale::full ? 6 : 4;
    for (int n = 1; n <= uni_max; ++n) {
        round_trip(univariate(n), "n=" + std::to_string(n));
        Monomial m1n(n, Symbol{Kind::m, 0, {1}});
        auto r = express(Kind::r, Kind::m, 0, univariate(n));
        auto it = r.terms().find(m1n);
        long want = (n % 2 ? 1 : -1) * catalan(n - 1);
        c.expect(it != r.terms().end() && it->second == want, "Catalan coefficient of m1^n in r_n");
    }
    for (int n = 1; n <= multi_max; ++n)
        for (const auto& args : all_labelings(n))
            round_trip(args, "args " + format_word(args));
}

void decomposition(Check& c, Scale s)
{
    auto b = [](int k) { return uni(Kind::beta, 1, k); };
    auto k = [](const std::string& w) {
        auto word = parse_word(w);
        return motzkin_k(word, univariate(static_cast<int>(word.size())), std::vector<int>(word.size(), 1));
    };
    c.expect(k("1111") == b(4), "k_1111");
    c.expect(k("1121") == -(b(3) * b(1)), "k_1121");
    c.expect(k("1211") == -(b(3) * b(1)), "k_1211");
    c.expect(k("1221") == b(2) * b(1) * b(1) - b(2) * b(2), "k_1221");
    c.expect(k("12321") == b(2) * b(2) * b(1), "k_12321");

    // rows of the tableau figure: tableau, word, signs of the beta(pi) terms by decreasing block count
    struct Row {
        std::string tableau, word;
        std::vector<int> signs;
        std::string k;
    };
    const std::vector<Row> rows = {
        {"[[1,2,3,4]]", "11111", {1}, "beta_5(x1,x2,x3,x4,x5)"},
        {"[[1,2,3],[4]]", "11121", {-1}, "-beta_4(x1,x2,x3,x5)*beta_1(x4)"},
        {"[[1,2,4],[3]]", "11211", {-1}, "-beta_4(x1,x2,x4,x5)*beta_1(x3)"},
        {"[[1,3,4],[2]]", "12111", {-1}, "-beta_4(x1,x3,x4,x5)*beta_1(x2)"},
        {"[[1,3],[2,4]]", "12121", {1}, "beta_3(x1,x3,x5)*beta_1(x2)*beta_1(x4)"},
        {"[[1,2],[3],[4]]", "11221", {1, -1}, "beta_3(x1,x2,x5)*beta_1(x3)*beta_1(x4) - beta_3(x1,x2,x5)*beta_2(x3,x4)"},
        {"[[1,4],[2],[3]]", "12211", {1, -1}, "beta_3(x1,x4,x5)*beta_1(x2)*beta_1(x3) - beta_3(x1,x4,x5)*beta_2(x2,x3)"},
        {"[[1,3],[2],[4]]", "12221", {-1, 1, 1, -1},
         "-beta_2(x1,x5)*beta_1(x2)*beta_1(x3)*beta_1(x4) + beta_2(x1,x5)*beta_1(x2)*beta_2(x3,x4) + "
         "beta_2(x1,x5)*beta_2(x2,x3)*beta_1(x4) - beta_2(x1,x5)*beta_3(x2,x3,x4)"},
        {"[[1,2],[3,4]]", "12321", {1}, "beta_2(x1,x5)*beta_2(x2,x4)*beta_1(x3)"},
    };
    for (const auto& row : rows) {
        auto w = parse_word(row.word);
        c.expect(from_tableau(parse_tableau(row.tableau)) == w, "tableau of " + row.word);
        auto p = motzkin_k(w, vars_upto(5), {1, 1, 1, 1, 1});
        c.expect(p.str() == row.k, "k_" + row.word);
        std::vector<std::pair<int, int>> terms;
        for (const auto& [mono, coeff] : p.terms())
            terms.emplace_back(static_cast<int>(mono.size()), coeff > 0 ? 1 : -1);
        std::sort(terms.rbegin(), terms.rend());
        std::vector<int> signs;
        for (auto [size, sign] : terms)
            signs.push_back(sign);
        c.expect(signs == row.signs, "signs of k_" + row.word);
    }
    int max_n = s == Scale::full ? 7 : 5;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& args : {univariate(n), vars_upto(n)}) {
            Poly sum;
            size_t terms = 0;
            for (const auto& [w, p] : free_decomposition(args, std::vector<int>(n, 1))) {
                sum += p;
                terms += p.size();
            }
            c.expect(sum == express(Kind::r, Kind::beta, 1, args), "sum of k_w = r_" + std::to_string(n));
            if (args == vars_upto(n))
                c.expect(static_cast<long>(terms) == catalan(n - 1), "term count for n=" + std::to_string(n));
        }
    }
    c.expect(free_decomposition(univariate(5), std::vector<int>(5, 1)).size() == 9, "nine pieces of r_5");
}

void closed_forms(Check& c, Scale)
{
    auto args = default_args(4);
    using Terms = std::set<std::pair<int, std::string>>;
    c.expect(term_set(B_inversion(parse_word("1211"), args)) == Terms{{1, "E(a1a2a3a4)"}, {-1, "E(a1a2a3)E(a4)"}}, "B_1211");
    c.expect(term_set(B_inversion(parse_word("1221"), args)) == Terms{{1, "E(a1a2a3a4)"}}, "B_1221");
    c.expect(term_set(B_inversion(parse_word("12111"), default_args(5)))
                 == Terms{{1, "E(a1a2a3a4a5)"}, {-1, "E(a1a2a3a4)E(a5)"}, {-1, "E(a1a2a3)E(a4a5)"}, {1, "E(a1a2a3)E(a4)E(a5)"}},
             "B_12111");
    c.expect(term_set(K_closed_form(parse_word("111"), default_args(3))) == Terms{{1, "B_111(a1,a2,a3)"}}, "K_111");
    c.expect(term_set(K_closed_form(parse_word("121"), default_args(3)))
                 == Terms{{1, "B_121(a1,a2,a3)"}, {-1, "B_11(a1B_2(a2),a3)"}},
             "K_121");
    c.expect(term_set(K_closed_form(parse_word("1111"), args)) == Terms{{1, "B_1111(a1,a2,a3,a4)"}}, "K_1111");
    c.expect(term_set(K_closed_form(parse_word("1211"), args))
                 == Terms{{1, "B_1211(a1,a2,a3,a4)"}, {-1, "B_111(a1B_2(a2),a3,a4)"}},
             "K_1211");
    c.expect(term_set(K_closed_form(parse_word("1121"), args))
                 == Terms{{1, "B_1121(a1,a2,a3,a4)"}, {-1, "B_111(a1,a2B_2(a3),a4)"}},
             "K_1121");
    c.expect(term_set(K_closed_form(parse_word("1221"), args))
                 == Terms{{1, "B_1221(a1,a2,a3,a4)"},
                          {-1, "B_121(a1B_2(a2),a3,a4)"},
                          {-1, "B_121(a1,a2B_2(a3),a4)"},
                          {-1, "B_11(a1B_22(a2,a3),a4)"},
                          {1, "B_11(a1B_2(a2)B_2(a3),a4)"}},
             "K_1221");

    // refinements: K_{pi'} produces B_pi with coefficient -1
    const std::vector<std::array<std::string, 3>> refinements = {
        {"12321", "{1,2,4,5},{3}", "{1,5},{2,4},{3}"},
        {"12221", "{1,2,5},{3},{4}", "{1,5},{2},{3},{4}"},
    };
    for (const auto& [ws, hi, lo] : refinements) {
        auto w = parse_word(ws);
        auto L = lattice_of(w);
        c.expect(mobius(L, find_element(L, lo), find_element(L, hi)) == -1, "mobius on " + ws);
        auto top = adapted(parse_partition(5, hi), w);
        auto bottom = adapted(parse_partition(5, lo), w);
        for (const auto& l : all_labelings(5)) {
            auto a = reps(w, l);
            c.expect(nested_rep(top, a, true) == nested_rep(top, a, false) - nested_rep(bottom, a, false),
                     "refinement " + tag(w, l));
        }
    }
}

void replica_suite(Check& c, Scale s)
{
    int max_n = 5;
    int max_h = 2;
    auto x = [](int v, int j) { return replica(v, 1, j); };
    auto y = [](int v, int j) { return replica(v, 2, j); };
    auto m = [](int label, std::vector<int> a) { return Poly::symbol(Kind::m, label, std::move(a)); };

    for (int j = 1; j <= 3; ++j) {
        for (int label = 1; label <= 2; ++label)
            c.expect(expectation(replica(1, label, j)) == BElement::p(j, m(label, {1})), "E(a(j))");
        for (int k = 1; k <= 3; ++k)
            if (k != j)
                c.expect(expectation(x(1, j) * x(2, k)).is_zero(), "E(a1(j)a2(k))");
        c.expect(expectation(p_proj(j)) == BElement::p(j), "E(p_n)");
        c.expect(expectation(e_label(1, j)) == BElement::e(j) && expectation(e_label(2, j)) == BElement::e(j), "E(e_{i,n})");
    }
    c.expect(B_rep(parse_word("121"), {x(1, 1), y(2, 2), x(3, 1)}) == BElement::p(1, in_m(beta(1, {1, 3}) * beta(2, {2}))), "B_121(x,y,x)");
    c.expect(B_rep(parse_word("1221"), {x(1, 1), y(2, 2), y(3, 2), x(4, 1)})
                 == BElement::p(1, in_m(beta(1, {1, 4}) * (beta(2, {2, 3}) + beta(2, {2}) * beta(2, {3})))),
             "B_1221(x,y,y,x)");
    c.expect(B_rep(parse_word("1121"), {x(1, 1), x(2, 1), y(3, 2), x(4, 1)}) == BElement::p(1, in_m(beta(1, {1, 2, 4}) * beta(2, {3}))),
             "B_1121(x,x,y,x)");
    c.expect(B_rep(parse_word("12321"), {x(1, 1), y(2, 2), x(3, 3), y(4, 2), x(5, 1)})
                 == BElement::p(1, in_m(beta(1, {1, 5}) * beta(2, {2, 4}) * beta(1, {3}))),
             "B_12321(x,y,x,y,x)");
    c.expect(K_rep(parse_word("1221"), {x(1, 1), x(2, 2), x(3, 2), x(4, 1)})
                 == BElement::p(1, in_m(beta(1, {1, 4}) * (beta(1, {2}) * beta(1, {3}) - beta(1, {2, 3})))),
             "K_1221(x,x,x,x)");
    auto w5 = parse_word("11221");
    c.expect(K_rep(w5, {x(1, 1), x(2, 1), y(3, 2), y(4, 2), x(5, 1)}).is_zero(), "K_11221(x,x,y,y,x)");
    c.expect(K_rep(w5, {x(1, 1), x(2, 1), y(3, 2), x(4, 2), x(5, 1)}).is_zero(), "K_11221(x,x,y,x,x)");
    c.expect(K_rep(parse_word("121"), {x(1, 1), x(2, 2), x(3, 1)}) == BElement::p(1, in_m(-(beta(1, {1, 3}) * beta(1, {2})))),
             "K_121(x,x,x)");
    c.expect(expectation(x(1, 1) * x(2, 2) * x(3, 1)).is_zero(), "E(x(1)x(2)x(1))");

    auto pr = [](int j) { return p_proj(j); };
    auto prod_with = [](std::vector<ReplicaElement> a, int k, const ReplicaElement& insert) {
        // inserts after position k (1-based)
        a.insert(a.begin() + k, insert);
        return product(a);
    };
    auto with_arg = [](std::vector<ReplicaElement> a, int k, const ReplicaElement& right) {
        a[k - 1] = a[k - 1] * right;
        return a;
    };

    // constant words
    for (int j = 1; j <= 3; ++j)
        for (int n = 1; n <= max_n; ++n) {
            Word w(n, j);
            for (const auto& l : all_labelings(n)) {
                auto a = reps(w, l);
                auto vars = vars_upto(n);
                if (identical(l)) {
                    c.expect(expectation(product(a)) == BElement::p(j, m(l[0], vars)), "constant moment " + tag(w, l));
                    std::vector<ReplicaElement> f;
                    for (int i = 0; i < n; ++i) {
                        if (i)
                            f.push_back(pr(j + 1));
                        f.push_back(a[i]);
                    }
                    c.expect(expectation(product(f)) == BElement::p(j, in_m(beta(l[0], vars))), "separated moment " + tag(w, l));
                }
                if (l == alternating_labelings(n)[0] || l == alternating_labelings(n)[1]) {
                    Poly v(1);
                    for (int i = 0; i < n; ++i)
                        v *= m(l[i], {i + 1});
                    c.expect(expectation(product(a)) == BElement::p(j, v), "alternating moment " + tag(w, l));
                }
            }
        }

    for (int n = 1; n <= max_n; ++n)
        for (const auto& w : am_words(n, max_h)) {
            int h = w[0];
            for (const auto& l : all_labelings(n)) {
                auto a = reps(w, l);
                auto all = expectation(product(a));
                auto t = tag(w, l);
                for (int k = 1; k < n; ++k) {
                    std::vector<ReplicaElement> left(a.begin(), a.begin() + k), right(a.begin() + k, a.end());
                    c.expect(expectation(prod_with(a, k, pr(h))) == expectation(product(left)) * expectation(product(right)),
                             "factorization " + t);
                    int jk = w[k - 1], jk1 = w[k];
                    if (l[k - 1] == l[k] && jk == jk1)
                        c.expect(expectation(prod_with(a, k, pr(jk + 1))) == expectation(prod_with(a, k, unit() - pr(jk))),
                                 "p_{j+1} as complement " + t);
                    if (l[k - 1] != l[k] && std::abs(jk - jk1) == 1)
                        c.expect(expectation(prod_with(a, k, pr(std::min(jk, jk1) + 1))) == all, "p_{j+1} deletion " + t);

                    c.expect(B_rep(w, with_arg(a, k, pr(h))).is_zero(), "B with interior p_h " + t);
                    c.expect(K_rep(w, with_arg(a, k, pr(h))).is_zero(), "K with interior p_h " + t);
                    if (jk == h && jk1 == h && l[k - 1] != l[k])
                        c.expect(B_rep(w, with_arg(a, k, pr(h + 1))).is_zero(), "B with p_{h+1} between labels " + t);
                    if (identical(l) && jk == jk1)
                        c.expect(B_rep(w, with_arg(a, k, pr(jk + 1))) == B_rep(w, a), "B deletes p_{j+1} " + t);
                    if (l[k - 1] != l[k] && std::abs(jk - jk1) == 1)
                        c.expect(B_rep(w, with_arg(a, k, pr(std::min(jk, jk1) + 1))) == B_rep(w, a),
                                 "B deletes p_{j+1} across labels " + t);
                    if (identical(l) && std::min(jk, jk1) == h && std::max(jk, jk1) <= h + 1)
                        c.expect(K_rep(w, with_arg(a, k, pr(h + 1))) == K_rep(w, a), "K deletes p_{h+1} " + t);
                }
                // an interior element of a constant alternating run also carries a perp below its
                // color, which a lower element of the same label outside the run annihilates
                auto exposed = [&](int k) {
                    if (k == 1 || k == n || w[k - 2] != w[k - 1] || w[k] != w[k - 1])
                        return false;
                    for (int i = 0; i < n; ++i)
                        if (l[i] == l[k - 1] && w[i] < w[k - 1])
                            return true;
                    return false;
                };
                // local maxima
                for (int k = 1; k <= n; ++k) {
                    bool ok = !exposed(k);
                    if (k > 1)
                        ok = ok && l[k - 2] != l[k - 1] && w[k - 2] <= w[k - 1];
                    if (k < n)
                        ok = ok && l[k] != l[k - 1] && w[k] <= w[k - 1];
                    if (!ok)
                        continue;
                    auto b = a;
                    b[k - 1] = pr(w[k - 1]);
                    c.expect(all == m(l[k - 1], {k}) * expectation(product(b)), "local maximum " + t);
                }
                // nesting of an inner constant run
                for (int k = 2; k < n; ++k)
                    for (int e = k; e < n; ++e) {
                        int j = w[k - 1];
                        bool ok = w[k - 2] < j && w[e] < j;
                        for (int i = k; i <= e && ok; ++i)
                            ok = w[i - 1] == j;
                        for (int i = k - 1; i <= e && ok; ++i)
                            ok = l[i - 1] != l[i];
                        for (int i = k + 1; i < e && ok; ++i)
                            ok = !exposed(i);
                        if (!ok)
                            continue;
                        std::vector<ReplicaElement> inner;
                        for (int i = k; i <= e; ++i) {
                            if (i > k)
                                inner.push_back(pr(j));
                            inner.push_back(a[i - 1]);
                        }
                        std::vector<ReplicaElement> lhs(a.begin(), a.begin() + k - 1), rhs = lhs;
                        lhs.insert(lhs.end(), inner.begin(), inner.end());
                        rhs.push_back(ReplicaElement(expectation(product(inner))));
                        lhs.insert(lhs.end(), a.begin() + e, a.end());
                        rhs.insert(rhs.end(), a.begin() + e, a.end());
                        c.expect(expectation(product(lhs)) == expectation(product(rhs)), "nesting " + t);
                    }
                // inserted projection arguments
                if (n >= 2)
                    for (int k = 0; k <= n; ++k)
                        for (int j = 1; j <= h + 1; ++j) {
                            Word wh = w;
                            wh.insert(wh.begin() + k, j);
                            if (!is_motzkin(wh))
                                continue;
                            auto ah = a;
                            ah.insert(ah.begin() + k, pr(j));
                            if (lifts(w, k, j))
                                c.expect(K_rep(wh, ah).is_zero(), "K with projection argument " + t);
                            if (j == h)
                                c.expect(B_rep(wh, ah).is_zero(), "B with projection argument " + t);
                        }
                // cumulants in closed form
                Poly bsum;
                for (const auto& p : labeled_classes(w, l).monotone_irr) {
                    Poly term(1);
                    for (const auto& blk : p.base.blocks)
                        term *= beta(l[blk[0] - 1], std::vector<int>(blk.begin(), blk.end()));
                    bsum += term;
                }
                c.expect(B_rep(w, a) == BElement::p(h, in_m(bsum)), "B_w closed form " + t);
                Poly ksum;
                if (identical(l))
                    for (const auto& p : enumerate_adapted(w, AdaptedClass::monotone_irr)) {
                        Poly term(p.size() % 2 ? 1 : -1);
                        for (const auto& blk : p.base.blocks)
                            term *= beta(l[0], std::vector<int>(blk.begin(), blk.end()));
                        ksum += term;
                    }
                auto K = K_rep(w, a);
                c.expect(K == BElement::p(h, in_m(ksum)), "K_w closed form " + t);
                c.expect(K_closed_form_rep(w, a) == K, "closed form equals recursion " + t);
                if (h == 1)
                    c.expect(in_m(motzkin_k(w, vars_upto(n), l)) == K.zeta(), "scalar cumulant " + t);
            }
            std::vector<ReplicaElement> xs, ys, sums;
            for (int i = 0; i < n; ++i) {
                xs.push_back(x(i + 1, w[i]));
                ys.push_back(y(i + 1, w[i]));
                sums.push_back(xs.back() + ys.back());
            }
            c.expect(K_rep(w, sums) == K_rep(w, xs) + K_rep(w, ys), "additivity " + format_word(w));
        }

    for (int j = 1; j <= 3; ++j)
        for (int j1 = 1; j1 <= 3; ++j1) {
            c.expect(B_rep({j1}, {pr(j)}) == BElement::p(j), "B_j1(p_j)");
            c.expect(K_rep({j1}, {pr(j)}) == BElement::p(j), "K_j1(p_j)");
        }

    // a(j) and a(j)+a(j+1) in alternating position
    for (int j = 1; j <= 2; ++j)
        for (int n = 2; n <= max_n; ++n)
            for (const auto& l : alternating_labelings(n))
                for (int k = 1; k <= n; ++k) {
                    auto a = reps(Word(n, j), l);
                    auto rest = a;
                    rest.erase(rest.begin() + k - 1);
                    auto ak = a[k - 1];
                    auto akp = replica(k, l[k - 1], j + 1);
                    auto b = a;
                    b[k - 1] = ak + akp;
                    auto lhs = expectation(product(b));
                    c.expect(lhs == expectation(ak) * expectation(product(rest)), "monotone position");
                    c.expect(lhs == expectation(ak + akp) * expectation(product(rest)), "monotone independence");
                }

    // vanishing outside the admissible color patterns
    int vmax = s == Scale::full ? 5 : 4;
    for (int n = 1; n <= vmax; ++n) {
        Word cols(n, 1);
        while (true) {
            for (const auto& l : all_labelings(n)) {
                bool respects = respects_labels(cols, l);
                auto a = product(reps(cols, l));
                if (!(respects && is_reduced(cols)))
                    c.expect(phi(a).is_zero(), "phi vanishes " + tag(cols, l));
                if (!(respects && is_motzkin(cols)))
                    c.expect(expectation(a).is_zero(), "E vanishes " + tag(cols, l));
            }
            int i = n - 1;
            while (i >= 0 && cols[i] == 3)
                cols[i--] = 1;
            if (i < 0)
                break;
            ++cols[i];
        }
    }
}

void free_moments(Check& c, Scale s)
{
    int max_n = s == Scale::full ? 6 : 5;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& l : alternating_labelings(n)) {
            Poly sum;
            for (const auto& w : motzkin_words(n))
                sum += expectation(product(reps(w, l))).zeta();
            c.expect(sum == free_product_moment(vars_upto(n), l), "free product moment n=" + std::to_string(n));
        }
    int unit_max = s == Scale::full ? 5 : 4;
    c.expect(K_rep({1}, {p_proj(1)}).zeta() == Poly(1), "k_1(1) = 1");
    for (int n = 2; n <= unit_max; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& l : all_labelings(n)) {
                Poly sum;
                bool each = true;
                for (const auto& w : motzkin_words(n)) {
                    auto a = reps(w, l);
                    a[k - 1] = p_proj(w[k - 1]);
                    auto v = K_rep(w, a).zeta();
                    each = each && v.is_zero();
                    sum += v;
                }
                c.expect(each && sum.is_zero(), "unit argument in r_" + std::to_string(n));
            }
}

void convolution_suite(Check& c, Scale s)
{
    auto b = [](int l, std::vector<int> a) { return beta(l, std::move(a)); };
    std::vector<int> v3 = {1, 2, 3}, v4 = {1, 2, 3, 4};
    c.expect(delta(v3) == in_m(b(1, {2}) * b(2, {1, 3}) + b(2, {2}) * b(1, {1, 3})), "Delta(X1X2X3)");
    c.expect(delta({1}).is_zero(), "Delta on first moments");
    c.expect(boxplus_w({}, {}) == Poly(1), "empty word");

    Poly w1 = boolean_total(v4);
    Poly w2 = b(1, {1, 2, 4}) * b(2, {3}) + b(1, {1}) * b(1, {2, 4}) * b(2, {3}) + b(2, {1}) * b(1, {2, 4}) * b(2, {3})
              + b(2, {1, 2, 4}) * b(1, {3}) + b(2, {1}) * b(2, {2, 4}) * b(1, {3}) + b(1, {1}) * b(2, {2, 4}) * b(1, {3});
    Poly w3 = b(1, {1, 3, 4}) * b(2, {2}) + b(1, {1, 3}) * b(2, {2}) * b(1, {4}) + b(1, {1, 3}) * b(2, {2}) * b(2, {4})
              + b(2, {1, 3, 4}) * b(1, {2}) + b(2, {1, 3}) * b(1, {2}) * b(2, {4}) + b(2, {1, 3}) * b(1, {2}) * b(1, {4});
    Poly w4 = b(1, {1, 4}) * (b(2, {2, 3}) + b(2, {2}) * b(2, {3})) + b(2, {1, 4}) * (b(1, {2, 3}) + b(1, {2}) * b(1, {3}));
    c.expect(boxplus_w(parse_word("1111"), v4) == w1, "boxplus_1111");
    c.expect(boxplus_w(parse_word("1121"), v4) == in_m(w2), "boxplus_1121");
    c.expect(boxplus_w(parse_word("1211"), v4) == in_m(w3), "boxplus_1211");
    c.expect(boxplus_w(parse_word("1221"), v4) == in_m(w4), "boxplus_1221");
    c.expect(w1 + in_m(w2 + w3 + w4) == boxplus_total(v4), "four lines add up to the free convolution");

    Poly lin = k_shift("1221", v4, 1) + k_shift("1221", v4, 2) + k_lin("121", {1, 2, 4}) * k_lin("2", {3})
               + k_lin("121", {1, 3, 4}) * k_lin("2", {2}) + k_lin("11", {1, 4}) * k_lin("22", {2, 3})
               + k_lin("11", {1, 4}) * k_lin("2", {2}) * k_lin("2", {3});
    c.expect(in_m(lin) == boxplus_w(parse_word("1221"), v4), "linearized form of boxplus_1221");

    auto w = parse_word("12221");
    auto p = adapted(parse_partition(5, "{1,2,4,5},{3}"), w);
    Poly nested;
    for (const auto& l : labelings_of(p.base).all)
        nested += nested_rep(p, reps(w, l), true).zeta();
    ReplicaElement inner(K_rep({2}, {replica(3, 1, 2)}) + K_rep({2}, {replica(3, 2, 2)}));
    Poly lin5;
    for (int label = 1; label <= 2; ++label)
        lin5 += K_rep(parse_word("1221"), {replica(1, label, 1), replica(2, label, 2) * inner, replica(4, label, 2), replica(5, label, 1)})
                    .zeta();
    c.expect(nested == lin5 && !nested.is_zero(), "contribution of {1,2,4,5},{3} to boxplus_12221");

    int three_max = 5;
    for (int n = 1; n <= three_max; ++n)
        for (const auto& word : motzkin_words(n)) {
            auto vars = vars_upto(n);
            auto a = boxplus_w(word, vars);
            c.expect(a == boxplus_w_monotone(word, vars) && a == boxplus_w_nested(word, vars), "three-way " + format_word(word));
        }
    int total_max = s == Scale::full ? 6 : 4;
    for (int n = 1; n <= total_max; ++n)
        for (const auto& vars : all_labelings(n)) {
            Poly sum;
            for (const auto& [word, v] : boxplus_by_path(vars))
                sum += v;
            c.expect(sum == boxplus_total(vars), "total over paths " + format_word(vars));
            c.expect(boxplus_w(Word(n, 1), vars) == boolean_total(vars), "boolean part " + format_word(vars));
        }
    for (const auto& vars : {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1, 2, 2}})
        for (int label = 1; label <= 2; ++label) {
            std::vector<int> l(vars.size(), label);
            c.expect(free_product_moment(vars, l) == boolean_product_moment(vars, l), "single label products");
            c.expect(free_product_moment(vars, l) == Poly::symbol(Kind::m, label, vars), "marginal moment");
        }
}

void tableaux(Check& c, Scale)
{
    const std::vector<std::pair<std::string, std::string>> fig = {
        {"11111", "[[1,2,3,4]]"},   {"11121", "[[1,2,3],[4]]"},   {"11211", "[[1,2,4],[3]]"},
        {"12111", "[[1,3,4],[2]]"}, {"12121", "[[1,3],[2,4]]"},   {"11221", "[[1,2],[3],[4]]"},
        {"12211", "[[1,4],[2],[3]]"}, {"12221", "[[1,3],[2],[4]]"}, {"12321", "[[1,2],[3,4]]"},
    };
    for (const auto& [w, t] : fig)
        c.expect(format_tableau(to_tableau(parse_word(w))) == t, "tableau of " + w);
    for (int n = 1; n <= 8; ++n) {
        auto words = motzkin_words(n);
        auto all = standard_tableaux(n - 1, 3);
        std::set<std::string> images;
        bool inverse = true;
        for (const auto& w : words) {
            auto t = to_tableau(w);
            inverse = inverse && is_standard(t) && t.cells() == n - 1 && from_tableau(t) == w;
            images.insert(format_tableau(t));
        }
        c.expect(inverse, "inverse on M_" + std::to_string(n));
        c.expect(images.size() == words.size() && all.size() == words.size(), "bijection at n=" + std::to_string(n));
    }
}

struct Criterion {
    const char* title;
    std::function<void(Check&, Scale)> run;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list = {
        {"counting suite", counting},
        {"lattice NC(11221) and its cover relations", lattice_11221},
        {"irreducible adapted partitions for words of length 5", irreducible_length5},
        {"coarsening closure and joins", lattice},
        {"moment and cumulant transforms", transforms},
        {"free cumulants as sums of Motzkin cumulants", decomposition},
        {"B-inversion and K closed forms", closed_forms},
        {"orthogonal replica identities", replica_suite},
        {"free product moments and unit arguments", free_moments},
        {"Motzkin homogeneous parts of the free convolution", convolution_suite},
        {"tableau bijection", tableaux},
    };
    return list;
}

}

CriterionResult run_criterion(int id, Scale scale)
{
    if (id < 1 || id > criterion_count)
        throw std::invalid_argument("criterion ids run from 1 to " + std::to_string(criterion_count));
    const auto& crit = criteria()[id - 1];
    CriterionResult r;
    r.id = id;
    r.title = crit.title;
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
        crit.run(c, scale);
        r.pass = c.pass();
        r.detail = c.detail();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string format_result(const CriterionResult& r)
{
    std::ostringstream out;
    out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << " (" << r.detail << ")";
    return out.str();
}

}
