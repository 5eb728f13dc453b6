#include "motzkin/replicas.hpp"

#include <optional>
#include <stdexcept>

namespace motzkin {

namespace {

bool is_sep(int t)
{
    return t < 0;
}

std::optional<SiteWord> concat(const SiteWord& a, const SiteWord& b)
{
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    SiteWord r = a;
    if (is_sep(a.back()) && is_sep(b.front())) {
        if (a.back() != b.front())
            return std::nullopt;
        r.insert(r.end(), b.begin() + 1, b.end());
    } else {
        r.insert(r.end(), b.begin(), b.end());
    }
    return r;
}

SiteWord tail_word(bool tail_proj)
{
    return tail_proj ? SiteWord{proj} : SiteWord{};
}

const SiteWord& site_of(const TensorString& s, size_t k, const SiteWord& tail)
{
    return k < s.sites.size() ? s.sites[k] : tail;
}

void trim(TensorString& s)
{
    auto tail = tail_word(s.tail_proj);
    while (!s.sites.empty() && s.sites.back() == tail)
        s.sites.pop_back();
}

std::optional<TensorString> multiply(const TensorString& a, const TensorString& b)
{
    TensorString r;
    r.tail_proj = a.tail_proj || b.tail_proj;
    auto ta = tail_word(a.tail_proj), tb = tail_word(b.tail_proj);
    size_t len = std::max(a.sites.size(), b.sites.size());
    for (size_t k = 0; k < len; ++k) {
        auto w = concat(site_of(a, k, ta), site_of(b, k, tb));
        if (!w)
            return std::nullopt;
        r.sites.push_back(std::move(*w));
    }
    trim(r);
    return r;
}

Poly moment(int label, const SiteWord& letters)
{
    if (letters.empty())
        return Poly(1);
    return Poly::symbol(Kind::m, label, letters);
}

// Boolean extension functional: proj splits the word, perp = 1 - proj.
Poly phi_site(const SiteWord& w, int label)
{
    if (w.empty())
        return Poly(1);
    if (w.front() == perp || w.back() == perp)
        return Poly();
    size_t lo = 0, hi = w.size();
    while (lo < hi && w[lo] == proj)
        ++lo;
    while (hi > lo && w[hi - 1] == proj)
        --hi;
    std::vector<SiteWord> mono{{}};
    std::vector<int> seps;
    for (size_t k = lo; k < hi; ++k) {
        if (is_sep(w[k])) {
            seps.push_back(w[k]);
            mono.emplace_back();
        } else {
            mono.back().push_back(w[k]);
        }
    }
    if (mono.size() == 1 && mono[0].empty())
        return Poly(1);
    int m = static_cast<int>(mono.size());
    std::vector<Poly> val(m + 1);
    val[m] = Poly(1);
    for (int i = m - 1; i >= 0; --i) {
        SiteWord group;
        for (int t = i; t < m; ++t) {
            if (t > i && seps[t - 1] == proj)
                break;
            group.insert(group.end(), mono[t].begin(), mono[t].end());
            Poly term = moment(label, group);
            if (t + 1 < m) {
                if (seps[t] == perp)
                    term = -term;
                term *= val[t + 1];
            }
            val[i] += term;
        }
    }
    return val[0];
}

// site evaluated through the compressed functional: any proj kills it, perp acts as 1
Poly phi_hat_site(const SiteWord& w, int label)
{
    SiteWord letters;
    for (int t : w) {
        if (t == proj)
            return Poly();
        if (t != perp)
            letters.push_back(t);
    }
    return moment(label, letters);
}

SiteWord core(const SiteWord& w)
{
    size_t lo = 0, hi = w.size();
    while (lo < hi && is_sep(w[lo]))
        ++lo;
    while (hi > lo && is_sep(w[hi - 1]))
        --hi;
    return SiteWord(w.begin() + lo, w.begin() + hi);
}

// weights of the site not starting or ending with a projection, and of the site doing so
std::pair<int, int> end_weights(const SiteWord& w)
{
    if (w.empty())
        return {1, 0};
    if (w.size() == 1 && w[0] == proj)
        return {0, 1};
    if (w.size() == 1 && w[0] == perp)
        return {1, -1};
    int ends[2] = {w.front(), w.back()};
    int u = 0, k = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            // a, b: whether a perp end is replaced by proj
            int sign = 1;
            bool marked = false;
            bool ok = true;
            int choice[2] = {a, b};
            for (int e = 0; e < 2; ++e) {
                if (ends[e] == proj) {
                    marked = true;
                    ok = ok && choice[e] == 0;
                } else if (ends[e] == perp) {
                    if (choice[e]) {
                        marked = true;
                        sign = -sign;
                    }
                } else {
                    ok = ok && choice[e] == 0;
                }
            }
            if (!ok)
                continue;
            (marked ? k : u) += sign;
        }
    return {u, k};
}

BElement expectation_of(const SimpleTensor& t)
{
    Poly value(1);
    for (int i = 0; i < 2; ++i)
        for (const auto& site : t.strings[i].sites) {
            value *= phi_site(core(site), i + 1);
            if (value.is_zero())
                return {};
        }
    size_t len = std::max(t.strings[0].sites.size(), t.strings[1].sites.size());
    bool tail = t.strings[0].tail_proj || t.strings[1].tail_proj;
    std::vector<long> unmarked(len), any(len);
    for (size_t c = 0; c < len; ++c) {
        auto [u1, k1] = end_weights(site_of(t.strings[0], c, tail_word(t.strings[0].tail_proj)));
        auto [u2, k2] = end_weights(site_of(t.strings[1], c, tail_word(t.strings[1].tail_proj)));
        unmarked[c] = static_cast<long>(u1) * u2;
        any[c] = static_cast<long>(u1 + k1) * (u2 + k2);
    }
    // sites above the first marked color take either choice
    std::vector<long> above(len + 1, 1);
    for (size_t c = len; c-- > 0;)
        above[c] = above[c + 1] * any[c];
    BElement r;
    long below = 1;
    for (size_t c = 0; c < len && below != 0; ++c) {
        long first = (any[c] - unmarked[c]) * above[c + 1];
        if (first != 0)
            r += BElement::e(static_cast<int>(c) + 1, value * Rational(below * first));
        below *= unmarked[c];
    }
    if (below != 0) {
        if (tail)
            r += BElement::e(static_cast<int>(len) + 1, value * Rational(below));
        else
            r += BElement(value * Rational(below));
    }
    return r;
}

}

BElement::BElement(const Poly& c)
    : c0_(c)
{
}

BElement BElement::p(int j, const Poly& c)
{
    if (j < 1)
        throw std::invalid_argument("projection color must be positive");
    BElement b;
    b.add(j, c);
    return b;
}

BElement BElement::e(int n, const Poly& c)
{
    BElement b;
    for (int j = 1; j <= n; ++j)
        b.add(j, c);
    return b;
}

void BElement::add(int j, const Poly& c)
{
    auto& slot = c_[j];
    slot += c;
    if (slot.is_zero())
        c_.erase(j);
}

Poly BElement::coeff(int j) const
{
    auto it = c_.find(j);
    return it == c_.end() ? Poly() : it->second;
}

Poly BElement::zeta() const
{
    return c0_ + coeff(1);
}

BElement& BElement::operator+=(const BElement& o)
{
    c0_ += o.c0_;
    for (const auto& [j, c] : o.c_)
        add(j, c);
    return *this;
}

BElement& BElement::operator-=(const BElement& o)
{
    c0_ -= o.c0_;
    for (const auto& [j, c] : o.c_)
        add(j, -c);
    return *this;
}

BElement operator*(const BElement& a, const BElement& b)
{
    BElement r(a.c0_ * b.c0_);
    for (const auto& [j, c] : a.c_) {
        r.add(j, c * b.c0_);
        r.add(j, c * b.coeff(j));
    }
    for (const auto& [j, c] : b.c_)
        r.add(j, a.c0_ * c);
    return r;
}

BElement operator*(const Poly& c, const BElement& b)
{
    return BElement(c) * b;
}

std::string BElement::str(const VarNamer& names) const
{
    if (is_zero())
        return "0";
    std::string s;
    if (!c0_.is_zero())
        s = c0_.str(names);
    for (const auto& [j, c] : c_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.str(names) + ")*p_" + std::to_string(j);
    }
    return s;
}

ReplicaElement::ReplicaElement(const Poly& c)
{
    add(SimpleTensor{}, c);
}

ReplicaElement::ReplicaElement(const BElement& b)
    : ReplicaElement(b.unit_part())
{
    for (const auto& [j, c] : b.parts()) {
        *this += product({e_proj(j), ReplicaElement(c)});
        if (j > 1)
            *this -= product({e_proj(j - 1), ReplicaElement(c)});
    }
}

ReplicaElement ReplicaElement::tensor(const SimpleTensor& t, const Poly& c)
{
    ReplicaElement r;
    SimpleTensor n = t;
    trim(n.strings[0]);
    trim(n.strings[1]);
    r.add(n, c);
    return r;
}

void ReplicaElement::add(const SimpleTensor& t, const Poly& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ReplicaElement& ReplicaElement::operator+=(const ReplicaElement& o)
{
    for (const auto& [t, c] : o.terms_)
        add(t, c);
    return *this;
}

ReplicaElement& ReplicaElement::operator-=(const ReplicaElement& o)
{
    for (const auto& [t, c] : o.terms_)
        add(t, -c);
    return *this;
}

ReplicaElement operator*(const ReplicaElement& a, const ReplicaElement& b)
{
    ReplicaElement r;
    for (const auto& [ta, ca] : a.terms_)
        for (const auto& [tb, cb] : b.terms_) {
            auto s0 = multiply(ta.strings[0], tb.strings[0]);
            if (!s0)
                continue;
            auto s1 = multiply(ta.strings[1], tb.strings[1]);
            if (!s1)
                continue;
            r.add(SimpleTensor{{std::move(*s0), std::move(*s1)}}, ca * cb);
        }
    return r;
}

ReplicaElement product(const std::vector<ReplicaElement>& xs)
{
    ReplicaElement r(Poly(1));
    for (const auto& x : xs) {
        r = r * x;
        if (r.is_zero())
            break;
    }
    return r;
}

namespace {

std::vector<std::pair<SiteWord, int>> expand_site(const SiteWord& w)
{
    std::vector<std::pair<SiteWord, int>> out{{{}, 1}};
    for (int t : w) {
        std::vector<std::pair<SiteWord, int>> next;
        for (auto& [word, sign] : out) {
            if (t != perp) {
                if (auto c = concat(word, {t}))
                    next.push_back({*c, sign});
                continue;
            }
            next.push_back({word, sign});
            if (auto c = concat(word, {proj}))
                next.push_back({*c, -sign});
        }
        out = std::move(next);
    }
    return out;
}

}

ReplicaElement canonical(const ReplicaElement& x)
{
    ReplicaElement r;
    for (const auto& [t, c] : x.terms()) {
        std::vector<std::pair<SimpleTensor, int>> acc{{SimpleTensor{}, 1}};
        for (int i = 0; i < 2; ++i) {
            for (auto& [a, sign] : acc)
                a.strings[i].tail_proj = t.strings[i].tail_proj;
            for (const auto& site : t.strings[i].sites) {
                std::vector<std::pair<SimpleTensor, int>> next;
                for (const auto& [a, sign] : acc)
                    for (const auto& [word, s2] : expand_site(site)) {
                        SimpleTensor b = a;
                        b.strings[i].sites.push_back(word);
                        next.push_back({b, sign * s2});
                    }
                acc = std::move(next);
            }
        }
        for (const auto& [a, sign] : acc)
            r += ReplicaElement::tensor(a, c * Rational(sign));
    }
    return r;
}

bool equivalent(const ReplicaElement& a, const ReplicaElement& b)
{
    return canonical(a - b).is_zero();
}

ReplicaElement replica(int var, int label, int color)
{
    if (label != 1 && label != 2)
        throw std::invalid_argument("replica label must be 1 or 2");
    if (color < 1)
        throw std::invalid_argument("replica color must be positive");
    if (var < 0)
        throw std::invalid_argument("variable ids are nonnegative");
    SimpleTensor t;
    auto& own = t.strings[label - 1];
    auto& other = t.strings[2 - label];
    own.sites.assign(color, {});
    if (var > 0)
        own.sites[color - 1] = {var};
    if (color > 1) {
        other.sites.assign(color - 1, {});
        other.sites[color - 2] = {perp};
    }
    other.tail_proj = true;
    return ReplicaElement::tensor(t);
}

ReplicaElement e_proj(int n)
{
    if (n < 0)
        throw std::invalid_argument("projection index must be nonnegative");
    if (n == 0)
        return {};
    SimpleTensor t;
    for (auto& s : t.strings) {
        s.sites.assign(n - 1, {});
        s.tail_proj = true;
    }
    return ReplicaElement::tensor(t);
}

ReplicaElement p_proj(int n)
{
    if (n < 1)
        throw std::invalid_argument("projection color must be positive");
    return e_proj(n) - e_proj(n - 1);
}

ReplicaElement e_label(int label, int n)
{
    if (label != 1 && label != 2)
        throw std::invalid_argument("label must be 1 or 2");
    if (n < 1)
        throw std::invalid_argument("index must be positive");
    SimpleTensor t;
    auto& other = t.strings[2 - label];
    other.sites.assign(n - 1, {});
    other.tail_proj = true;
    return ReplicaElement::tensor(t);
}

Poly phi(const ReplicaElement& x)
{
    Poly r;
    for (const auto& [t, c] : x.terms()) {
        Poly v = c;
        for (int i = 0; i < 2 && !v.is_zero(); ++i)
            for (const auto& site : t.strings[i].sites) {
                v *= phi_site(site, i + 1);
                if (v.is_zero())
                    break;
            }
        r += v;
    }
    return r;
}

Poly psi(int j, const ReplicaElement& x)
{
    if (j < 1)
        throw std::invalid_argument("psi index must be positive");
    Poly r;
    for (const auto& [t, c] : x.terms()) {
        Poly v = c;
        for (int i = 0; i < 2 && !v.is_zero(); ++i) {
            const auto& s = t.strings[i];
            // tail sites below j carry a projection
            if (s.tail_proj && static_cast<int>(s.sites.size()) + 1 < j) {
                v = Poly();
                break;
            }
            for (size_t k = 0; k < s.sites.size() && !v.is_zero(); ++k)
                v *= static_cast<int>(k) + 1 < j ? phi_hat_site(s.sites[k], i + 1) : phi_site(s.sites[k], i + 1);
        }
        r += v;
    }
    return r;
}

BElement expectation(const ReplicaElement& x)
{
    BElement r;
    for (const auto& [t, c] : x.terms())
        r += c * expectation_of(t);
    return r;
}

namespace {

struct Engine {
    std::map<std::pair<Word, std::vector<ReplicaElement>>, BElement> k_memo;

    BElement B(const Word& w, const std::vector<ReplicaElement>& a)
    {
        if (!is_motzkin(w))
            throw std::invalid_argument("not a Motzkin word: " + format_word(w));
        if (a.size() != w.size())
            throw std::invalid_argument("argument count differs from word length");
        int n = static_cast<int>(w.size());
        int h = w.front();
        auto moment = [&](int s, int e) {
            return expectation(product(std::vector<ReplicaElement>(a.begin() + s, a.begin() + e + 1)));
        };
        // prefix[k]: B of the factor a_0..a_k, defined at valid cut positions and at n-1
        std::vector<std::optional<BElement>> prefix(n);
        for (int e = 0; e < n; ++e) {
            bool end = e == n - 1 || (w[e] == h && w[e + 1] == h);
            if (!end)
                continue;
            BElement b = moment(0, e);
            for (int k = 0; k < e; ++k)
                if (prefix[k])
                    b -= *prefix[k] * moment(k + 1, e);
            prefix[e] = b;
        }
        return *prefix[n - 1];
    }

    BElement nested(const AdaptedPartition& p, const std::vector<ReplicaElement>& a, bool use_K)
    {
        BElement r(Poly(1));
        for (const auto& root : nest_forest(p.base))
            r = r * node(p, root, a, use_K);
        return r;
    }

    BElement node(const AdaptedPartition& p, const NestNode& nd, const std::vector<ReplicaElement>& a, bool use_K)
    {
        const auto& blk = p.base.blocks[nd.block];
        std::vector<ReplicaElement> args;
        for (size_t i = 0; i < blk.size(); ++i) {
            ReplicaElement x = a[blk[i] - 1];
            if (i < nd.gaps.size() && !nd.gaps[i].empty()) {
                BElement g(Poly(1));
                for (const auto& c : nd.gaps[i])
                    g = g * node(p, c, a, use_K);
                x = x * ReplicaElement(g);
            }
            args.push_back(std::move(x));
        }
        Word v = block_word(p.base, p.word, nd.block);
        return use_K ? K(v, args) : B(v, args);
    }

    BElement K(const Word& w, const std::vector<ReplicaElement>& a)
    {
        auto key = std::make_pair(w, a);
        if (auto it = k_memo.find(key); it != k_memo.end())
            return it->second;
        BElement r = B(w, a);
        auto top = coarsest(static_cast<int>(w.size()));
        for (const auto& p : enumerate_adapted(w, AdaptedClass::irr))
            if (p.base != top)
                r -= nested(p, a, true);
        k_memo.emplace(std::move(key), r);
        return r;
    }
};

}

BElement B_rep(const Word& w, const std::vector<ReplicaElement>& args)
{
    return Engine{}.B(w, args);
}

BElement K_rep(const Word& w, const std::vector<ReplicaElement>& args)
{
    return Engine{}.K(w, args);
}

BElement nested_rep(const AdaptedPartition& p, const std::vector<ReplicaElement>& args, bool use_K)
{
    return Engine{}.nested(p, args, use_K);
}

BElement K_closed_form_rep(const Word& w, const std::vector<ReplicaElement>& args)
{
    Engine eng;
    BElement r;
    for (const auto& p : enumerate_adapted(w, AdaptedClass::irr)) {
        BElement t = eng.nested(p, args, false);
        r += p.size() % 2 ? t : BElement() - t;
    }
    return r;
}

}
