#include "motzkin/cumulants.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace motzkin {

namespace {

using Memo = std::map<std::vector<int>, Poly>;

std::vector<int> restrict_to(const std::vector<int>& args, const Block& b)
{
    std::vector<int> r;
    for (int x : b)
        r.push_back(args[x - 1]);
    return r;
}

PartitionClass moment_lattice(Kind k)
{
    return k == Kind::r ? PartitionClass::nc : PartitionClass::interval;
}

// cumulant of kind k in moments: k(args) = m(args) - sum over proper partitions of prod k(V)
Poly cumulant_in_moments(Kind k, int label, const std::vector<int>& args, Memo& memo)
{
    if (auto it = memo.find(args); it != memo.end())
        return it->second;
    int n = static_cast<int>(args.size());
    Poly r = Poly::symbol(Kind::m, label, args);
    if (n > 1) {
        for (const auto& p : enumerate_partitions(n, moment_lattice(k))) {
            if (p.size() == 1)
                continue;
            Poly t(1);
            for (const auto& b : p.blocks) {
                t *= cumulant_in_moments(k, label, restrict_to(args, b), memo);
                if (t.is_zero())
                    break;
            }
            r -= t;
        }
    }
    memo.emplace(args, r);
    return r;
}

}

Poly partitioned(Kind kind, int label, const std::vector<int>& args, const SetPartition& p)
{
    Poly t(1);
    for (const auto& b : p.blocks)
        t *= Poly::symbol(kind, label, restrict_to(args, b));
    return t;
}

std::vector<int> univariate(int n)
{
    return std::vector<int>(n, 1);
}

Poly express(Kind from, Kind to, int label, const std::vector<int>& args)
{
    int n = static_cast<int>(args.size());
    if (n == 0)
        throw std::invalid_argument("cumulants need at least one argument");
    if (from == to)
        return Poly::symbol(from, label, args);
    if (from == Kind::m) {
        Poly r;
        for (const auto& p : enumerate_partitions(n, moment_lattice(to)))
            r += partitioned(to, label, args, p);
        return r;
    }
    if (to == Kind::m) {
        Memo memo;
        return cumulant_in_moments(from, label, args, memo);
    }
    // free and Boolean cumulants through irreducible partitions
    Poly r;
    for (const auto& p : enumerate_partitions(n, PartitionClass::nc_irr)) {
        Poly t = partitioned(to, label, args, p);
        if (from == Kind::r && p.size() % 2 == 0)
            t = -t;
        r += t;
    }
    return r;
}

Poly convert(const Poly& p, Kind to)
{
    std::map<Symbol, Poly> cache;
    return p.substitute([&](const Symbol& s) -> std::optional<Poly> {
        if (s.kind == to)
            return std::nullopt;
        auto it = cache.find(s);
        if (it == cache.end())
            it = cache.emplace(s, express(s.kind, to, s.label, s.args)).first;
        return it->second;
    });
}

Poly motzkin_k(const Word& w, const std::vector<int>& args, const std::vector<int>& labels)
{
    if (!is_reduced(w))
        throw std::invalid_argument("scalar Motzkin cumulants are indexed by reduced words: " + format_word(w));
    if (args.size() != w.size() || labels.size() != w.size())
        throw std::invalid_argument("argument count differs from word length");
    for (int l : labels)
        if (l != labels.front())
            return Poly();
    Poly r;
    for (const auto& p : enumerate_adapted(w, AdaptedClass::monotone_irr)) {
        Poly t = partitioned(Kind::beta, labels.front(), args, p.base);
        if (p.size() % 2 == 0)
            t = -t;
        r += t;
    }
    return r;
}

std::vector<std::pair<Word, Poly>> free_decomposition(const std::vector<int>& args, const std::vector<int>& labels)
{
    std::vector<std::pair<Word, Poly>> out;
    for (auto& w : motzkin_words(static_cast<int>(args.size())))
        out.emplace_back(w, motzkin_k(w, args, labels));
    return out;
}

std::vector<std::string> default_args(int n)
{
    std::vector<std::string> a;
    for (int k = 1; k <= n; ++k)
        a.push_back("a" + std::to_string(k));
    return a;
}

namespace {

std::string render_node(const SetPartition& p, const Word& w, const NestNode& node, const std::string& fn,
                        const std::vector<std::string>& args)
{
    const auto& b = p.blocks[node.block];
    std::string s = fn + "_" + format_word(block_word(p, w, node.block)) + "(";
    for (size_t i = 0; i < b.size(); ++i) {
        if (i)
            s += ",";
        s += args[b[i] - 1];
        if (i < node.gaps.size())
            for (const auto& c : node.gaps[i])
                s += render_node(p, w, c, fn, args);
    }
    return s + ")";
}

}

std::string render_nested(const AdaptedPartition& p, const std::string& fn, const std::vector<std::string>& args)
{
    if (static_cast<int>(args.size()) != p.base.n)
        throw std::invalid_argument("argument count differs from word length");
    std::string s;
    for (const auto& root : nest_forest(p.base))
        s += render_node(p.base, p.word, root, fn, args);
    return s;
}

std::vector<SignedTerm> K_closed_form(const Word& w, const std::vector<std::string>& args)
{
    auto parts = enumerate_adapted(w, AdaptedClass::irr);
    // coarsest first, as in the usual display
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<SignedTerm> out;
    for (const auto& p : parts)
        out.push_back({p.base, p.size() % 2 ? 1 : -1, render_nested(p, "B", args)});
    return out;
}

std::vector<SignedTerm> B_inversion(const Word& w, const std::vector<std::string>& args)
{
    if (args.size() != w.size())
        throw std::invalid_argument("argument count differs from word length");
    int n = static_cast<int>(w.size());
    std::vector<SignedTerm> out;
    for (const auto& cuts : interval_splits(w)) {
        auto p = split_partition(n, cuts);
        std::string s;
        for (const auto& b : p.blocks) {
            s += "E(";
            for (int x : b)
                s += args[x - 1];
            s += ")";
        }
        out.push_back({p, p.size() % 2 ? 1 : -1, s});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.partition.size() != b.partition.size() ? a.partition.size() < b.partition.size()
                                                        : a.partition < b.partition;
    });
    return out;
}

}
