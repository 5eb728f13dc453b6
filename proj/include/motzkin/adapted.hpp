#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/partitions.hpp"
#include "motzkin/words.hpp"

namespace motzkin {

struct AdaptedPartition {
    SetPartition base;
    Word word;

    auto operator<=>(const AdaptedPartition&) const = default;
    int size() const { return base.size(); }
};

struct BlockInfo {
    Word subword;
    int depth = 1;
    int outer = -1;
    // positions of the two letters of the nearest outer block that bracket this block
    std::optional<std::pair<int, int>> bridge;
};

// gaps[i] holds the blocks nested directly between elements i and i+1 of the block
struct NestNode {
    int block = 0;
    std::vector<std::vector<NestNode>> gaps;
};
std::vector<NestNode> nest_forest(const SetPartition& p);

std::vector<BlockInfo> block_info(const SetPartition& p, const Word& w);
Word block_word(const SetPartition& p, const Word& w, int block);

// depth, bridge and neighbor conditions on the blocks alone (reduced words)
bool meets_block_conditions(const SetPartition& p, const Word& w);
bool is_adapted(const SetPartition& p, const Word& w);
bool is_monotone(const SetPartition& p, const Word& w);
AdaptedPartition adapted(const SetPartition& p, const Word& w);

enum class AdaptedClass { all, irr, monotone, monotone_irr };
std::vector<AdaptedPartition> enumerate_adapted(const Word& w, AdaptedClass cls);

AdaptedPartition zero_hat(const Word& w);
AdaptedPartition one_hat(const Word& w);

enum class Coarsening { juxtaposition, insertion, both };
std::vector<AdaptedPartition> admissible_coarsenings(const AdaptedPartition& p, Coarsening kind);
// everything reachable from zero_hat by juxtapositions and insertions that meets the block conditions
std::vector<AdaptedPartition> coarsening_closure(const Word& w);

bool precedes(const AdaptedPartition& a, const AdaptedPartition& b);
AdaptedPartition join_adapted(const AdaptedPartition& a, const AdaptedPartition& b);

// cut k splits the word between positions k and k+1
std::vector<std::vector<int>> interval_splits(const Word& w);
SetPartition split_partition(int n, const std::vector<int>& cuts);

using Labeling = std::vector<int>;

bool label_constant(const SetPartition& p, const Labeling& l);
bool labels_alternate(const SetPartition& p, const Labeling& l);

struct LabeledClasses {
    std::vector<AdaptedPartition> nc;
    std::vector<AdaptedPartition> monotone;
    std::vector<AdaptedPartition> monotone_irr;
};
LabeledClasses labeled_classes(const Word& w, const Labeling& l);

struct Labelings {
    std::vector<Labeling> all;
    std::vector<Labeling> alternating;
};
Labelings labelings_of(const SetPartition& p);

// irreducible noncrossing partitions whose labels alternate along nesting chains
std::vector<SetPartition> nc_irr_labeled(const Labeling& l);

AdaptedPartition eta(const SetPartition& p);

struct Poset {
    std::vector<AdaptedPartition> elements;
    std::vector<std::pair<int, int>> covers;
};
Poset lattice_of(const Word& w, bool irr = false);
Poset poset_ncn(int n, bool irr);
bool word_leq(const Word& a, const Word& b);
bool pair_leq(const AdaptedPartition& a, const AdaptedPartition& b);
// M(pi0): words w with (pi0, w) adapted
std::vector<Word> fiber(const SetPartition& p);
bool have_lower_bound(const Poset& poset, int a, int b);

std::string node_name(const AdaptedPartition& p);
std::string to_dot(const Poset& poset, const std::string& name);
std::string format_adapted(const AdaptedPartition& p);

}
