#include "motzkin/adapted.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace motzkin {

namespace {

void check_lengths(const SetPartition& p, const Word& w)
{
    if (p.n != static_cast<int>(w.size()))
        throw std::invalid_argument("partition size " + std::to_string(p.n) + " differs from word length " +
                                    std::to_string(w.size()));
    if (!is_motzkin(w))
        throw std::invalid_argument("not a Motzkin word: " + format_word(w));
}

SetPartition merged(const SetPartition& p, int a, int b)
{
    std::vector<Block> blocks;
    for (int i = 0; i < p.size(); ++i)
        if (i != a && i != b)
            blocks.push_back(p.blocks[i]);
    Block m = p.blocks[a];
    m.insert(m.end(), p.blocks[b].begin(), p.blocks[b].end());
    blocks.push_back(m);
    return make_partition(p.n, std::move(blocks));
}

std::vector<int> siblings(const std::vector<BlockInfo>& info, int outer)
{
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(info.size()); ++i)
        if (info[i].outer == outer)
            s.push_back(i);
    return s;
}

}

std::vector<NestNode> nest_forest(const SetPartition& p)
{
    auto nest = nesting(p);
    std::vector<NestNode> nodes(p.size());
    for (int i = 0; i < p.size(); ++i) {
        nodes[i].block = i;
        nodes[i].gaps.resize(p.blocks[i].size() - 1);
    }
    // blocks are ordered by minimum, so children are visited left to right; attach deepest first
    std::vector<int> order(p.size());
    for (int i = 0; i < p.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return nest[a].depth > nest[b].depth; });
    std::vector<std::vector<int>> kids(p.size());
    for (int i = 0; i < p.size(); ++i)
        if (nest[i].outer >= 0)
            kids[nest[i].outer].push_back(i);
    for (int i : order) {
        const auto& b = p.blocks[i];
        for (int c : kids[i]) {
            int first = p.blocks[c].front();
            size_t g = 0;
            while (!(b[g] < first && first < b[g + 1]))
                ++g;
            nodes[i].gaps[g].push_back(nodes[c]);
        }
    }
    std::vector<NestNode> roots;
    for (int i = 0; i < p.size(); ++i)
        if (nest[i].outer < 0)
            roots.push_back(nodes[i]);
    return roots;
}

Word block_word(const SetPartition& p, const Word& w, int block)
{
    Word v;
    for (int x : p.blocks[block])
        v.push_back(w[x - 1]);
    return v;
}

std::vector<BlockInfo> block_info(const SetPartition& p, const Word& w)
{
    check_lengths(p, w);
    auto nest = nesting(p);
    std::vector<BlockInfo> info(p.size());
    for (int i = 0; i < p.size(); ++i) {
        info[i].subword = block_word(p, w, i);
        info[i].depth = nest[i].depth;
        info[i].outer = nest[i].outer;
        if (nest[i].outer >= 0) {
            const auto& o = p.blocks[nest[i].outer];
            int first = p.blocks[i].front();
            for (size_t q = 0; q + 1 < o.size(); ++q)
                if (o[q] < first && first < o[q + 1])
                    info[i].bridge = {o[q], o[q + 1]};
        }
    }
    return info;
}

bool meets_block_conditions(const SetPartition& p, const Word& w)
{
    if (!is_noncrossing(p))
        return false;
    auto info = block_info(p, w);
    for (const auto& b : info) {
        if (!is_motzkin(b.subword))
            return false;
        int h = b.subword.front();
        if (b.depth > h)
            return false;
        if (b.bridge) {
            int hb = std::max(w[b.bridge->first - 1], w[b.bridge->second - 1]);
            if (hb > h)
                return false;
        }
    }
    std::set<int> outers;
    for (const auto& b : info)
        outers.insert(b.outer);
    for (int o : outers) {
        auto s = siblings(info, o);
        for (size_t k = 0; k + 1 < s.size(); ++k)
            if (info[s[k]].subword.front() != info[s[k + 1]].subword.front())
                return false;
    }
    return true;
}

namespace {

bool literal_monotone(const SetPartition& p, const Word& w)
{
    if (!meets_block_conditions(p, w))
        return false;
    for (const auto& b : block_info(p, w))
        if (std::any_of(b.subword.begin(), b.subword.end(), [&](int x) { return x != b.depth; }))
            return false;
    return true;
}

// Two elements of a block with the same letter c fall in one piece when every
// position strictly between them carries a letter above c.
SetPartition monotone_pieces(const SetPartition& p, const Word& w)
{
    std::vector<Block> pieces;
    for (const auto& b : p.blocks) {
        std::vector<bool> used(b.size(), false);
        for (size_t i = 0; i < b.size(); ++i) {
            if (used[i])
                continue;
            Block piece{b[i]};
            used[i] = true;
            int c = w[b[i] - 1];
            int last = b[i];
            for (size_t k = i + 1; k < b.size(); ++k) {
                if (used[k] || w[b[k] - 1] != c)
                    continue;
                bool above = true;
                for (int x = last + 1; x < b[k] && above; ++x)
                    above = w[x - 1] > c;
                if (!above)
                    break;
                piece.push_back(b[k]);
                used[k] = true;
                last = b[k];
            }
            pieces.push_back(piece);
        }
    }
    return make_partition(p.n, std::move(pieces));
}

}

// Besides the depth, bridge and neighbor conditions, the pieces must form a
// monotonically adapted partition and each block must grow from a single piece
// by inserting pieces into their nearest outer blocks.
bool is_adapted(const SetPartition& p, const Word& w)
{
    check_lengths(p, w);
    if (w.front() != 1)
        return is_adapted(p, reduce(w));
    if (!meets_block_conditions(p, w))
        return false;
    auto pieces = monotone_pieces(p, w);
    if (!literal_monotone(pieces, w))
        return false;
    auto owner = owners(p);
    auto nest = nesting(pieces);
    std::vector<int> roots(p.size(), 0);
    for (int i = 0; i < pieces.size(); ++i) {
        int blk = owner[pieces.blocks[i].front()];
        int o = nest[i].outer;
        if (o < 0 || owner[pieces.blocks[o].front()] != blk)
            if (++roots[blk] > 1)
                return false;
    }
    return true;
}

bool is_monotone(const SetPartition& p, const Word& w)
{
    if (!is_adapted(p, w))
        return false;
    int shift = w.front() - 1;
    auto info = block_info(p, w);
    for (const auto& b : info) {
        if (std::any_of(b.subword.begin(), b.subword.end(), [&](int x) { return x != b.subword.front(); }))
            return false;
        if (b.subword.front() - shift != b.depth)
            return false;
    }
    return true;
}

AdaptedPartition adapted(const SetPartition& p, const Word& w)
{
    if (!is_adapted(p, w))
        throw std::invalid_argument(format_partition(p) + " is not adapted to " + format_word(w));
    return {p, w};
}

std::vector<AdaptedPartition> enumerate_adapted(const Word& w, AdaptedClass cls)
{
    if (!is_motzkin(w))
        throw std::invalid_argument("not a Motzkin word: " + format_word(w));
    int n = static_cast<int>(w.size());
    auto pc = (cls == AdaptedClass::irr || cls == AdaptedClass::monotone_irr) ? PartitionClass::nc_irr
                                                                                : PartitionClass::nc;
    std::vector<AdaptedPartition> out;
    for (auto& p : enumerate_partitions(n, pc)) {
        bool ok = (cls == AdaptedClass::monotone || cls == AdaptedClass::monotone_irr) ? is_monotone(p, w)
                                                                                         : is_adapted(p, w);
        if (ok)
            out.push_back({std::move(p), w});
    }
    return out;
}

AdaptedPartition zero_hat(const Word& w)
{
    if (!is_motzkin(w))
        throw std::invalid_argument("not a Motzkin word: " + format_word(w));
    int n = static_cast<int>(w.size());
    std::vector<int> owner(n);
    for (int k = 0; k < n; ++k)
        owner[k] = k;
    for (int k = 0; k < n; ++k) {
        int m = k + 1;
        while (m < n && w[m] > w[k])
            ++m;
        if (m < n && m > k + 1 && w[m] == w[k])
            owner[m] = owner[k];
    }
    std::vector<Block> blocks(n);
    for (int k = 0; k < n; ++k)
        blocks[owner[k]].push_back(k + 1);
    std::erase_if(blocks, [](const Block& b) { return b.empty(); });
    return adapted(make_partition(n, std::move(blocks)), w);
}

AdaptedPartition one_hat(const Word& w)
{
    return adapted(coarsest(static_cast<int>(w.size())), w);
}

namespace {

std::set<SetPartition> raw_coarsenings(const SetPartition& base, const Word& w, Coarsening kind)
{
    auto info = block_info(base, w);
    std::set<SetPartition> found;
    if (kind != Coarsening::insertion) {
        std::set<int> outers;
        for (const auto& b : info)
            outers.insert(b.outer);
        for (int o : outers) {
            auto s = siblings(info, o);
            for (size_t k = 0; k + 1 < s.size(); ++k) {
                int a = s[k], b = s[k + 1];
                if (o >= 0 && info[a].bridge != info[b].bridge)
                    continue;
                found.insert(merged(base, a, b));
            }
        }
    }
    if (kind != Coarsening::juxtaposition) {
        for (int i = 0; i < base.size(); ++i)
            if (info[i].outer >= 0)
                found.insert(merged(base, i, info[i].outer));
    }
    return found;
}

}

std::vector<AdaptedPartition> admissible_coarsenings(const AdaptedPartition& p, Coarsening kind)
{
    std::vector<AdaptedPartition> out;
    for (const auto& q : raw_coarsenings(p.base, p.word, kind))
        if (is_adapted(q, p.word))
            out.push_back({q, p.word});
    return out;
}

std::vector<AdaptedPartition> coarsening_closure(const Word& w)
{
    Word r = reduce(w);
    std::set<SetPartition> seen{zero_hat(w).base};
    std::vector<SetPartition> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        auto cur = todo.back();
        todo.pop_back();
        for (auto& q : raw_coarsenings(cur, r, Coarsening::both))
            if (seen.insert(q).second)
                todo.push_back(q);
    }
    std::vector<AdaptedPartition> out;
    for (const auto& q : seen)
        if (meets_block_conditions(q, r))
            out.push_back({q, w});
    return out;
}

bool precedes(const AdaptedPartition& a, const AdaptedPartition& b)
{
    return a.word == b.word && refines(a.base, b.base);
}

AdaptedPartition join_adapted(const AdaptedPartition& a, const AdaptedPartition& b)
{
    if (a.word != b.word)
        throw std::invalid_argument("join of partitions adapted to different words");
    auto j = join_nc(a.base, b.base);
    if (!is_adapted(j, a.word))
        throw std::logic_error("join left the lattice: " + format_partition(j));
    return {j, a.word};
}

std::vector<std::vector<int>> interval_splits(const Word& w)
{
    if (!is_motzkin(w))
        throw std::invalid_argument("not a Motzkin word: " + format_word(w));
    int h = w.front();
    std::vector<int> valid;
    for (size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] == h && w[k + 1] == h)
            valid.push_back(static_cast<int>(k) + 1);
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << valid.size()); ++mask) {
        std::vector<int> cuts;
        for (size_t i = 0; i < valid.size(); ++i)
            if (mask >> i & 1)
                cuts.push_back(valid[i]);
        out.push_back(cuts);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SetPartition split_partition(int n, const std::vector<int>& cuts)
{
    SetPartition p{n, {{}}};
    size_t c = 0;
    for (int k = 1; k <= n; ++k) {
        p.blocks.back().push_back(k);
        if (c < cuts.size() && cuts[c] == k && k < n) {
            p.blocks.emplace_back();
            ++c;
        }
    }
    return p;
}

bool label_constant(const SetPartition& p, const Labeling& l)
{
    if (static_cast<int>(l.size()) != p.n)
        throw std::invalid_argument("labeling length differs from partition size");
    for (const auto& b : p.blocks)
        for (int x : b)
            if (l[x - 1] != l[b.front() - 1])
                return false;
    return true;
}

bool labels_alternate(const SetPartition& p, const Labeling& l)
{
    if (!label_constant(p, l))
        return false;
    auto nest = nesting(p);
    for (int i = 0; i < p.size(); ++i)
        if (nest[i].outer >= 0 && l[p.blocks[i].front() - 1] == l[p.blocks[nest[i].outer].front() - 1])
            return false;
    return true;
}

LabeledClasses labeled_classes(const Word& w, const Labeling& l)
{
    if (l.size() != w.size())
        throw std::invalid_argument("labeling length differs from word length");
    LabeledClasses c;
    for (auto& p : enumerate_adapted(w, AdaptedClass::all)) {
        if (!label_constant(p.base, l))
            continue;
        if (is_monotone(p.base, w) && labels_alternate(p.base, l)) {
            c.monotone.push_back(p);
            if (is_irreducible(p.base))
                c.monotone_irr.push_back(p);
        }
        c.nc.push_back(std::move(p));
    }
    return c;
}

Labelings labelings_of(const SetPartition& p)
{
    Labelings r;
    int k = p.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Labeling l(p.n);
        for (int i = 0; i < k; ++i)
            for (int x : p.blocks[i])
                l[x - 1] = (mask >> i & 1) ? 2 : 1;
        if (labels_alternate(p, l))
            r.alternating.push_back(l);
        r.all.push_back(std::move(l));
    }
    std::sort(r.all.begin(), r.all.end());
    std::sort(r.alternating.begin(), r.alternating.end());
    return r;
}

std::vector<SetPartition> nc_irr_labeled(const Labeling& l)
{
    std::vector<SetPartition> out;
    for (auto& p : enumerate_partitions(static_cast<int>(l.size()), PartitionClass::nc_irr))
        if (labels_alternate(p, l))
            out.push_back(std::move(p));
    return out;
}

AdaptedPartition eta(const SetPartition& p)
{
    if (!is_irreducible(p))
        throw std::invalid_argument("eta needs an irreducible noncrossing partition");
    auto nest = nesting(p);
    Word w(p.n);
    for (int i = 0; i < p.size(); ++i)
        for (int x : p.blocks[i])
            w[x - 1] = nest[i].depth;
    return adapted(p, w);
}

bool word_leq(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k])
            return false;
    return true;
}

bool pair_leq(const AdaptedPartition& a, const AdaptedPartition& b)
{
    return refines(a.base, b.base) && word_leq(a.word, b.word);
}

namespace {

std::vector<std::pair<int, int>> covers_of(const std::vector<AdaptedPartition>& el)
{
    int n = static_cast<int>(el.size());
    std::vector<std::vector<char>> leq(n, std::vector<char>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            leq[a][b] = pair_leq(el[a], el[b]);
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !leq[a][b])
                continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && leq[a][c] && leq[c][b])
                    cover = false;
            if (cover)
                out.push_back({a, b});
        }
    return out;
}

}

Poset lattice_of(const Word& w, bool irr)
{
    Poset p;
    p.elements = enumerate_adapted(w, irr ? AdaptedClass::irr : AdaptedClass::all);
    p.covers = covers_of(p.elements);
    return p;
}

Poset poset_ncn(int n, bool irr)
{
    Poset p;
    for (const auto& w : motzkin_words(n))
        for (auto& q : enumerate_adapted(w, irr ? AdaptedClass::irr : AdaptedClass::all))
            p.elements.push_back(std::move(q));
    std::sort(p.elements.begin(), p.elements.end());
    p.covers = covers_of(p.elements);
    return p;
}

std::vector<Word> fiber(const SetPartition& p)
{
    std::vector<Word> out;
    for (const auto& w : motzkin_words(p.n))
        if (is_adapted(p, w))
            out.push_back(w);
    return out;
}

bool have_lower_bound(const Poset& poset, int a, int b)
{
    for (const auto& c : poset.elements)
        if (pair_leq(c, poset.elements[a]) && pair_leq(c, poset.elements[b]))
            return true;
    return false;
}

std::string node_name(const AdaptedPartition& p)
{
    std::string s;
    for (const auto& b : p.base.blocks) {
        s += '(';
        for (size_t k = 0; k < b.size(); ++k) {
            if (k)
                s += ',';
            s += std::to_string(b[k]);
        }
        s += ')';
    }
    return s + ":" + format_word(p.word);
}

std::string to_dot(const Poset& poset, const std::string& name)
{
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
    std::map<int, std::vector<int>> ranks;
    for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i)
        ranks[-poset.elements[i].size()].push_back(i);
    for (const auto& [r, ids] : ranks) {
        out << "  { rank=same;";
        for (int i : ids)
            out << " \"" << node_name(poset.elements[i]) << "\";";
        out << " }\n";
    }
    for (auto [a, b] : poset.covers)
        out << "  \"" << node_name(poset.elements[a]) << "\" -> \"" << node_name(poset.elements[b]) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string format_adapted(const AdaptedPartition& p)
{
    return format_partition(p.base) + " on " + format_word(p.word);
}

}
