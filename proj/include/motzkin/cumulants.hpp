#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motzkin/adapted.hpp"
#include "motzkin/poly.hpp"

namespace motzkin {

// prod over blocks V of kind(args restricted to V)
Poly partitioned(Kind kind, int label, const std::vector<int>& args, const SetPartition& p);

// kind `from` evaluated at args, written in the symbols of kind `to`
Poly express(Kind from, Kind to, int label, const std::vector<int>& args);
// rewrites every symbol of p in the symbols of kind `to`
Poly convert(const Poly& p, Kind to);

std::vector<int> univariate(int n);

// labels[k] is the algebra of args[k]; a mixed labeling gives 0
Poly motzkin_k(const Word& w, const std::vector<int>& args, const std::vector<int>& labels);
std::vector<std::pair<Word, Poly>> free_decomposition(const std::vector<int>& args, const std::vector<int>& labels);

// signed nested expressions of the closed form for K_w in terms of B
struct SignedTerm {
    SetPartition partition;
    int sign = 1;
    std::string text;
};
std::string render_nested(const AdaptedPartition& p, const std::string& fn, const std::vector<std::string>& args);
std::vector<SignedTerm> K_closed_form(const Word& w, const std::vector<std::string>& args);
std::vector<SignedTerm> B_inversion(const Word& w, const std::vector<std::string>& args);
std::vector<std::string> default_args(int n);

}
