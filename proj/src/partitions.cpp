#include "motzkin/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace motzkin {

namespace {

constexpr int max_all = 12;
constexpr int max_nc = 16;

void normalize(SetPartition& p)
{
    for (auto& b : p.blocks)
        std::sort(b.begin(), b.end());
    std::sort(p.blocks.begin(), p.blocks.end());
}

}

SetPartition make_partition(int n, std::vector<Block> blocks)
{
    SetPartition p{n, std::move(blocks)};
    std::vector<int> seen(n + 1, 0);
    int total = 0;
    for (const auto& b : p.blocks) {
        if (b.empty())
            throw std::invalid_argument("empty block");
        for (int x : b) {
            if (x < 1 || x > n || seen[x]++)
                throw std::invalid_argument("blocks do not partition [" + std::to_string(n) + "]");
            ++total;
        }
    }
    if (total != n)
        throw std::invalid_argument("blocks do not cover [" + std::to_string(n) + "]");
    normalize(p);
    return p;
}

SetPartition finest(int n)
{
    SetPartition p{n, {}};
    for (int k = 1; k <= n; ++k)
        p.blocks.push_back({k});
    return p;
}

SetPartition coarsest(int n)
{
    Block b(n);
    std::iota(b.begin(), b.end(), 1);
    return SetPartition{n, {b}};
}

std::vector<int> owners(const SetPartition& p)
{
    std::vector<int> o(p.n + 1, -1);
    for (int i = 0; i < p.size(); ++i)
        for (int x : p.blocks[i])
            o[x] = i;
    return o;
}

bool is_noncrossing(const SetPartition& p)
{
    auto o = owners(p);
    for (int a = 1; a <= p.n; ++a)
        for (int b = a + 1; b <= p.n; ++b)
            for (int c = b + 1; c <= p.n; ++c) {
                if (o[a] != o[c] || o[b] == o[a])
                    continue;
                for (int d = c + 1; d <= p.n; ++d)
                    if (o[d] == o[b])
                        return false;
            }
    return true;
}

bool is_irreducible(const SetPartition& p)
{
    if (!is_noncrossing(p))
        return false;
    auto o = owners(p);
    return p.n >= 1 && o[1] == o[p.n];
}

bool is_interval(const SetPartition& p)
{
    for (const auto& b : p.blocks)
        if (b.back() - b.front() + 1 != static_cast<int>(b.size()))
            return false;
    return true;
}

bool refines(const SetPartition& finer, const SetPartition& coarser)
{
    if (finer.n != coarser.n)
        return false;
    auto o = owners(coarser);
    for (const auto& b : finer.blocks)
        for (int x : b)
            if (o[x] != o[b.front()])
                return false;
    return true;
}

std::vector<SetPartition> enumerate_partitions(int n, PartitionClass cls)
{
    int bound = cls == PartitionClass::all ? max_all : max_nc;
    if (n < 1 || n > bound)
        throw std::invalid_argument("partition size out of range [1," + std::to_string(bound) + "]");
    std::vector<SetPartition> out;
    SetPartition cur{n, {}};

    if (cls == PartitionClass::interval) {
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            SetPartition p{n, {{1}}};
            for (int k = 2; k <= n; ++k) {
                if (mask >> (k - 2) & 1)
                    p.blocks.push_back({k});
                else
                    p.blocks.back().push_back(k);
            }
            out.push_back(std::move(p));
        }
    } else if (cls == PartitionClass::all) {
        std::function<void(int)> rec = [&](int x) {
            if (x > n) {
                out.push_back(cur);
                return;
            }
            for (auto& b : cur.blocks) {
                b.push_back(x);
                rec(x + 1);
                b.pop_back();
            }
            cur.blocks.push_back({x});
            rec(x + 1);
            cur.blocks.pop_back();
        };
        rec(1);
    } else {
        // open holds the blocks that x may still join without creating a crossing
        std::vector<int> open;
        std::function<void(int)> rec = [&](int x) {
            if (x > n) {
                out.push_back(cur);
                return;
            }
            for (size_t d = 0; d < open.size(); ++d) {
                auto saved = open;
                int b = open[d];
                open.resize(d + 1);
                cur.blocks[b].push_back(x);
                rec(x + 1);
                cur.blocks[b].pop_back();
                open = saved;
            }
            cur.blocks.push_back({x});
            open.push_back(cur.size() - 1);
            rec(x + 1);
            open.pop_back();
            cur.blocks.pop_back();
        };
        rec(1);
        if (cls == PartitionClass::nc_irr)
            std::erase_if(out, [](const SetPartition& p) { return !is_irreducible(p); });
    }
    for (auto& p : out)
        normalize(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Nesting> nesting(const SetPartition& p)
{
    if (!is_noncrossing(p))
        throw std::invalid_argument("nesting needs a noncrossing partition");
    std::vector<Nesting> r(p.size());
    // blocks are ordered by minimum, so outer blocks are resolved first
    for (int i = 0; i < p.size(); ++i) {
        int lo = p.blocks[i].front(), hi = p.blocks[i].back();
        int best = -1;
        for (int k = 0; k < i; ++k) {
            const auto& b = p.blocks[k];
            if (b.front() < lo && b.back() > hi && (best < 0 || b.front() > p.blocks[best].front()))
                best = k;
        }
        r[i].outer = best;
        r[i].depth = best < 0 ? 1 : r[best].depth + 1;
    }
    return r;
}

SetPartition join_nc(const SetPartition& a, const SetPartition& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("join of partitions of different sizes");
    int n = a.n;
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        parent[std::max(x, y)] = std::min(x, y);
        return true;
    };
    for (const auto* p : {&a, &b})
        for (const auto& blk : p->blocks)
            for (int x : blk)
                unite(blk.front(), x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= n && !changed; ++i)
            for (int j = i + 1; j <= n && !changed; ++j)
                for (int k = j + 1; k <= n && !changed; ++k) {
                    if (find(i) != find(k) || find(j) == find(i))
                        continue;
                    for (int l = k + 1; l <= n; ++l)
                        if (find(l) == find(j)) {
                            changed = unite(i, j);
                            break;
                        }
                }
    }
    std::vector<Block> blocks(n + 1);
    for (int x = 1; x <= n; ++x)
        blocks[find(x)].push_back(x);
    std::erase_if(blocks, [](const Block& blk) { return blk.empty(); });
    return make_partition(n, std::move(blocks));
}

std::string format_partition(const SetPartition& p)
{
    std::string s;
    for (size_t i = 0; i < p.blocks.size(); ++i) {
        if (i)
            s += ',';
        s += '{';
        for (size_t k = 0; k < p.blocks[i].size(); ++k) {
            if (k)
                s += ',';
            s += std::to_string(p.blocks[i][k]);
        }
        s += '}';
    }
    return s;
}

SetPartition parse_partition(int n, const std::string& s)
{
    std::vector<Block> blocks;
    std::string num;
    bool in = false;
    auto flush = [&] {
        if (!num.empty()) {
            blocks.back().push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char c : s) {
        if (c == '{' || c == '[') {
            if (in)
                throw std::invalid_argument("bad partition: " + s);
            in = true;
            blocks.emplace_back();
        } else if (c == '}' || c == ']') {
            flush();
            in = false;
        } else if (c >= '0' && c <= '9' && in) {
            num += c;
        } else if (c == ',' || c == ' ') {
            flush();
        } else {
            throw std::invalid_argument("bad partition: " + s);
        }
    }
    return make_partition(n, std::move(blocks));
}

}
