#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace motzkin {

using Word = std::vector<int>;

struct Tableau {
    std::vector<std::vector<int>> rows;

    int cells() const;
    bool operator==(const Tableau&) const = default;
};

// A Motzkin word: steps in {-1,0,1}, equal first and last letters,
// and no letter below the first one.
bool is_motzkin(const Word& w);
bool is_reduced(const Word& w);
int height(const Word& w);
Word shifted(const Word& w, int by);
Word reduce(const Word& w);

std::vector<Word> motzkin_words(int n, int h = 1);
// Equal adjacent labels force equal adjacent letters.
bool respects_labels(const Word& w, const std::vector<int>& labels);
std::vector<Word> labeled_words(int n, const std::vector<int>& labels, int h = 1);

Word parse_word(std::string_view s);
std::string format_word(const Word& w);

bool is_standard(const Tableau& t);
Tableau to_tableau(const Word& w);
Word from_tableau(const Tableau& t);
std::vector<Tableau> standard_tableaux(int cells, int max_rows);
std::string format_tableau(const Tableau& t);
Tableau parse_tableau(std::string_view s);

}
