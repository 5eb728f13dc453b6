#include "motzkin/words.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace motzkin {

int Tableau::cells() const
{
    int c = 0;
    for (const auto& r : rows)
        c += static_cast<int>(r.size());
    return c;
}

bool is_motzkin(const Word& w)
{
    if (w.empty() || w.front() < 1 || w.front() != w.back())
        return false;
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] < w.front())
            return false;
        if (k + 1 < w.size() && std::abs(w[k + 1] - w[k]) > 1)
            return false;
    }
    return true;
}

bool is_reduced(const Word& w)
{
    return is_motzkin(w) && w.front() == 1;
}

int height(const Word& w)
{
    if (!is_motzkin(w))
        throw std::invalid_argument("not a Motzkin word: " + format_word(w));
    return w.front();
}

Word shifted(const Word& w, int by)
{
    Word r = w;
    for (int& x : r)
        x += by;
    return r;
}

Word reduce(const Word& w)
{
    return shifted(w, 1 - height(w));
}

std::vector<Word> motzkin_words(int n, int h)
{
    if (n < 1)
        throw std::invalid_argument("word length must be positive");
    if (h < 1)
        throw std::invalid_argument("height must be positive");
    std::vector<Word> out;
    Word cur{h};
    std::function<void()> rec = [&] {
        int left = n - static_cast<int>(cur.size());
        if (left == 0) {
            if (cur.back() == h)
                out.push_back(cur);
            return;
        }
        for (int d = -1; d <= 1; ++d) {
            int next = cur.back() + d;
            if (next < h || next - h > left - 1)
                continue;
            cur.push_back(next);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

bool respects_labels(const Word& w, const std::vector<int>& labels)
{
    if (labels.size() != w.size())
        throw std::invalid_argument("labeling length differs from word length");
    for (size_t k = 0; k + 1 < w.size(); ++k)
        if (labels[k] == labels[k + 1] && w[k] != w[k + 1])
            return false;
    return true;
}

std::vector<Word> labeled_words(int n, const std::vector<int>& labels, int h)
{
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("labeling length differs from word length");
    std::vector<Word> out;
    for (auto& w : motzkin_words(n, h))
        if (respects_labels(w, labels))
            out.push_back(std::move(w));
    return out;
}

Word parse_word(std::string_view s)
{
    Word w;
    if (s.find(',') != std::string_view::npos || s.find(' ') != std::string_view::npos) {
        std::string tmp(s);
        std::replace(tmp.begin(), tmp.end(), ',', ' ');
        std::istringstream in(tmp);
        int x;
        while (in >> x)
            w.push_back(x);
        if (!in.eof())
            throw std::invalid_argument("bad word: " + std::string(s));
    } else {
        for (char c : s) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad word: " + std::string(s));
            w.push_back(c - '0');
        }
    }
    if (w.empty())
        throw std::invalid_argument("empty word");
    return w;
}

std::string format_word(const Word& w)
{
    bool small = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x < 10; });
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (!small && k)
            s += ',';
        s += std::to_string(w[k]);
    }
    return s;
}

bool is_standard(const Tableau& t)
{
    int n = t.cells();
    std::vector<bool> seen(n + 1, false);
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.empty())
            return false;
        if (r > 0 && row.size() > t.rows[r - 1].size())
            return false;
        for (size_t c = 0; c < row.size(); ++c) {
            int x = row[c];
            if (x < 1 || x > n || seen[x])
                return false;
            seen[x] = true;
            if (c > 0 && row[c - 1] >= x)
                return false;
            if (r > 0 && t.rows[r - 1][c] >= x)
                return false;
        }
    }
    return true;
}

// Up steps open a row-1 cell, level steps under an open up step go to row 2,
// down steps close a row-2 level step when one is open.
Tableau to_tableau(const Word& w)
{
    if (!is_reduced(w))
        throw std::invalid_argument("tableau map needs a reduced Motzkin word: " + format_word(w));
    Tableau t;
    t.rows.resize(3);
    int open_up = 0, open_level = 0;
    for (size_t k = 0; k + 1 < w.size(); ++k) {
        int label = static_cast<int>(k) + 1;
        int step = w[k + 1] - w[k];
        int row = 0;
        if (step == 1) {
            ++open_up;
        } else if (step == 0) {
            if (open_up > 0) {
                row = 1;
                --open_up;
                ++open_level;
            }
        } else if (open_level > 0) {
            row = 2;
            --open_level;
        } else {
            row = 1;
            --open_up;
        }
        t.rows[row].push_back(label);
    }
    while (!t.rows.empty() && t.rows.back().empty())
        t.rows.pop_back();
    return t;
}

Word from_tableau(const Tableau& t)
{
    if (t.rows.size() > 3 || !is_standard(t))
        throw std::invalid_argument("not a standard tableau with at most three rows");
    int n = t.cells();
    std::vector<int> row_of(n + 1, 0);
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (int x : t.rows[r])
            row_of[x] = static_cast<int>(r);

    // matched[x]: x is matched by an entry of the row below
    std::vector<bool> matched(n + 1, false);
    for (int lower = 1; lower < 3; ++lower) {
        for (int x = 1; x <= n; ++x) {
            if (row_of[x] != lower)
                continue;
            for (int y = x - 1; y >= 1; --y)
                if (row_of[y] == lower - 1 && !matched[y]) {
                    matched[y] = true;
                    break;
                }
        }
    }
    Word w{1};
    for (int x = 1; x <= n; ++x) {
        int step = 0;
        if (row_of[x] == 0)
            step = matched[x] ? 1 : 0;
        else if (row_of[x] == 1)
            step = matched[x] ? 0 : -1;
        else
            step = -1;
        w.push_back(w.back() + step);
    }
    if (!is_reduced(w))
        throw std::invalid_argument("tableau does not encode a Motzkin path");
    return w;
}

std::vector<Tableau> standard_tableaux(int cells, int max_rows)
{
    std::vector<Tableau> out;
    Tableau t;
    t.rows.resize(max_rows);
    std::function<void(int)> rec = [&](int x) {
        if (x > cells) {
            Tableau c = t;
            while (!c.rows.empty() && c.rows.back().empty())
                c.rows.pop_back();
            out.push_back(c);
            return;
        }
        for (int r = 0; r < max_rows; ++r) {
            if (r > 0 && t.rows[r].size() >= t.rows[r - 1].size())
                continue;
            t.rows[r].push_back(x);
            rec(x + 1);
            t.rows[r].pop_back();
        }
    };
    rec(1);
    return out;
}

std::string format_tableau(const Tableau& t)
{
    std::string s = "[";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (r)
            s += ',';
        s += '[';
        for (size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c)
                s += ',';
            s += std::to_string(t.rows[r][c]);
        }
        s += ']';
    }
    return s + "]";
}

Tableau parse_tableau(std::string_view s)
{
    Tableau t;
    int depth = 0;
    std::string num;
    auto flush = [&] {
        if (!num.empty()) {
            t.rows.back().push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char c : s) {
        if (c == '[') {
            if (++depth == 2)
                t.rows.emplace_back();
            else if (depth > 2)
                throw std::invalid_argument("bad tableau");
        } else if (c == ']') {
            flush();
            --depth;
        } else if (c >= '0' && c <= '9') {
            if (depth != 2)
                throw std::invalid_argument("bad tableau");
            num += c;
        } else if (c == ',') {
            flush();
        } else if (c != ' ') {
            throw std::invalid_argument("bad tableau");
        }
    }
    if (depth != 0)
        throw std::invalid_argument("bad tableau");
    t.rows.erase(std::remove_if(t.rows.begin(), t.rows.end(), [](auto& r) { return r.empty(); }), t.rows.end());
    return t;
}

}
