#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/poly.hpp"
#include "motzkin/words.hpp"

namespace motzkin {

// Moments of a truncated distribution. Words are over the variable ids
// 1..alphabet.size(); the empty word has moment 1.
struct Distribution {
    std::vector<std::string> alphabet;
    int order = 6;
    std::map<Word, Rational> moments;

    Rational moment(const Word& w) const;
    int variable(const std::string& name) const;
    // throws unless every word of length 1..order has a moment
    void check_total() const;
};

Distribution univariate_distribution(const std::vector<Rational>& moments);

// Symbolic results are polynomials in the moment symbols m of label 1 (mu1)
// and label 2 (mu2) of the variables in `vars`.
Poly free_product_moment(const std::vector<int>& vars, const std::vector<int>& labels);
Poly boolean_product_moment(const std::vector<int>& vars, const std::vector<int>& labels);

Poly boxplus_w(const Word& w, const std::vector<int>& vars);
Poly boxplus_w_monotone(const Word& w, const std::vector<int>& vars);
Poly boxplus_w_nested(const Word& w, const std::vector<int>& vars);
std::vector<std::pair<Word, Poly>> boxplus_by_path(const std::vector<int>& vars);

Poly boxplus_total(const std::vector<int>& vars);
Poly boolean_total(const std::vector<int>& vars);
Poly delta(const std::vector<int>& vars);

Rational evaluate(const Poly& p, const Distribution& mu1, const Distribution& mu2);

}
