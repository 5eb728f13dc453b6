#pragma once

#include <compare>
#include <string>
#include <vector>

namespace motzkin {

using Block = std::vector<int>;

// Elements are 1-based; blocks are sorted and ordered by their least element.
struct SetPartition {
    int n = 0;
    std::vector<Block> blocks;

    auto operator<=>(const SetPartition&) const = default;
    int size() const { return static_cast<int>(blocks.size()); }
};

SetPartition make_partition(int n, std::vector<Block> blocks);
SetPartition finest(int n);
SetPartition coarsest(int n);

// owner[k] is the index of the block containing k (owner[0] unused)
std::vector<int> owners(const SetPartition& p);

bool is_noncrossing(const SetPartition& p);
bool is_irreducible(const SetPartition& p);
bool is_interval(const SetPartition& p);
bool refines(const SetPartition& finer, const SetPartition& coarser);

enum class PartitionClass { all, nc, nc_irr, interval };
std::vector<SetPartition> enumerate_partitions(int n, PartitionClass cls);

struct Nesting {
    int outer = -1;
    int depth = 1;
};
std::vector<Nesting> nesting(const SetPartition& p);

SetPartition join_nc(const SetPartition& a, const SetPartition& b);

std::string format_partition(const SetPartition& p);
SetPartition parse_partition(int n, const std::string& s);

}
