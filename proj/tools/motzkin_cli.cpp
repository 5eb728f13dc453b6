#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "motzkin/adapted.hpp"
#include "motzkin/convolution.hpp"
#include "motzkin/cumulants.hpp"
#include "motzkin/replicas.hpp"
#include "motzkin/verify.hpp"
#include "motzkin/words.hpp"

using namespace motzkin;
using json = nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep = ',')
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        out.push_back(item);
    return out;
}

std::vector<int> parse_labels(const std::string& s)
{
    std::vector<int> l;
    for (char c : s) {
        if (c != '1' && c != '2')
            throw std::invalid_argument("labels must be 1 or 2: " + s);
        l.push_back(c - '0');
    }
    return l;
}

Word checked_word(const std::string& s)
{
    Word w = parse_word(s);
    if (!is_motzkin(w))
        throw std::invalid_argument("not a Motzkin word: " + s);
    return w;
}

json symbol_json(const Symbol& s)
{
    json j = json::array({kind_name(s.kind), s.order(), s.args});
    if (s.label)
        j.push_back(s.label);
    return j;
}

json poly_json(const Poly& p)
{
    json terms = json::array();
    for (const auto& [mono, c] : p.terms()) {
        json m = json::array();
        for (const auto& s : mono)
            m.push_back(symbol_json(s));
        terms.push_back({{"coeff", format_rational(c)}, {"monomial", m}});
    }
    return terms;
}

json belement_json(const BElement& b)
{
    json parts = json::array();
    for (const auto& [j, c] : b.parts())
        parts.push_back({{"projection", j}, {"terms", poly_json(c)}});
    return {{"unit", poly_json(b.unit_part())}, {"projections", parts}};
}

json partition_json(const AdaptedPartition& p)
{
    return {{"word", p.word}, {"blocks", p.base.blocks}};
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

// Words over an alphabet are split by longest match, so "ab" and "a,b" both name a then b.
Word parse_moment_word(const std::string& s, const std::vector<std::string>& alphabet)
{
    Word w;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ',') {
            ++i;
            continue;
        }
        int best = 0;
        size_t len = 0;
        for (size_t k = 0; k < alphabet.size(); ++k)
            if (alphabet[k].size() > len && s.compare(i, alphabet[k].size(), alphabet[k]) == 0) {
                best = static_cast<int>(k) + 1;
                len = alphabet[k].size();
            }
        if (!best)
            throw std::invalid_argument("moment key " + s + " is not a word over the alphabet");
        w.push_back(best);
        i += len;
    }
    return w;
}

Distribution load_distribution(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    Distribution d;
    try {
        const auto& mom = j.at("moments");
        if (mom.is_array()) {
            std::vector<Rational> seq;
            for (const auto& v : mom)
                seq.push_back(parse_rational(v.get<std::string>()));
            d = univariate_distribution(seq);
            if (j.contains("alphabet"))
                d.alphabet = j["alphabet"].get<std::vector<std::string>>();
        } else {
            d.alphabet = j.at("alphabet").get<std::vector<std::string>>();
            d.order = j.value("order", 6);
            for (const auto& [key, v] : mom.items())
                d.moments[parse_moment_word(key, d.alphabet)] = parse_rational(v.get<std::string>());
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    d.check_total();
    return d;
}

void print_partitions(const std::vector<AdaptedPartition>& ps, bool as_json)
{
    if (as_json) {
        json out = json::array();
        for (const auto& p : ps)
            out.push_back(partition_json(p));
        std::cout << out.dump() << '\n';
        return;
    }
    for (const auto& p : ps)
        std::cout << format_adapted(p) << '\n';
}

void print_poset(const Poset& poset, bool as_json)
{
    if (as_json) {
        json el = json::array();
        for (const auto& p : poset.elements)
            el.push_back(partition_json(p));
        std::cout << json{{"elements", el}, {"covers", poset.covers}}.dump() << '\n';
        return;
    }
    for (size_t i = 0; i < poset.elements.size(); ++i)
        std::cout << i << ' ' << format_adapted(poset.elements[i]) << '\n';
    for (const auto& [a, b] : poset.covers)
        std::cout << a << " < " << b << '\n';
}

// names of the replica arguments; "1" is the unit
struct Names {
    std::vector<int> ids;
    std::map<int, std::string> by_id;
};

Names name_vars(const std::vector<std::string>& vars)
{
    Names n;
    std::map<std::string, int> seen;
    for (const auto& v : vars) {
        if (v.empty())
            throw std::invalid_argument("empty variable name");
        if (v == "1") {
            n.ids.push_back(0);
            continue;
        }
        auto [it, fresh] = seen.emplace(v, static_cast<int>(seen.size()) + 1);
        n.ids.push_back(it->second);
        n.by_id[it->second] = v;
    }
    return n;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"Adapted noncrossing partitions, Motzkin cumulants and orthogonal replicas"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    int n = 0, height = 1;
    std::string word, labels, dot, vars, mu1_path, mu2_path, monomial, functional = "phi";
    std::string from = "m", to = "r", tableau;
    bool irr = false, monotone = false, count = false, by_path = false, symbolic = false;
    bool quick = false, full = false;
    int criterion = 0;

    auto* words_cmd = app.add_subcommand("words", "list Motzkin words");
    words_cmd->add_option("--n", n, "length")->required()->check(CLI::Range(1, 16));
    words_cmd->add_option("--height", height, "first and last letter")->check(CLI::PositiveNumber);
    words_cmd->add_option("--labels", labels, "label string; equal neighbors force equal letters");

    auto* adapted_cmd = app.add_subcommand("adapted", "partitions adapted to a word");
    adapted_cmd->add_option("--word", word)->required();
    auto* irr_flag = adapted_cmd->add_flag("--irr", irr, "irreducible only");
    adapted_cmd->add_flag("--monotone", monotone, "monotonically adapted only")->excludes(irr_flag);
    adapted_cmd->add_flag("--count", count, "print the number of partitions");
    adapted_cmd->add_option("--dot", dot, "write the Hasse diagram");

    auto* zero_cmd = app.add_subcommand("zero-hat", "least adapted partition");
    zero_cmd->add_option("--word", word)->required();

    auto* poset_cmd = app.add_subcommand("poset", "pairs (partition, word) over all words of length n");
    poset_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 8));
    poset_cmd->add_flag("--irr", irr);
    poset_cmd->add_option("--dot", dot, "write the Hasse diagram");

    auto* cum_cmd = app.add_subcommand("cumulants", "cumulant tables");
    cum_cmd->require_subcommand(1);
    auto* dec_cmd = cum_cmd->add_subcommand("decompose", "free cumulant as a sum of Motzkin cumulants");
    dec_cmd->add_option("--n", n)->check(CLI::Range(1, 9));
    dec_cmd->add_option("--multivariate", vars, "comma separated variable names");
    auto* tr_cmd = cum_cmd->add_subcommand("transform", "rewrite one cumulant family in another");
    tr_cmd->add_option("--from", from)->check(CLI::IsMember({"m", "beta", "r"}));
    tr_cmd->add_option("--to", to)->check(CLI::IsMember({"m", "beta", "r"}));
    tr_cmd->add_option("--n", n)->check(CLI::Range(1, 9));
    tr_cmd->add_option("--multivariate", vars, "comma separated variable names");

    auto* rep_cmd = app.add_subcommand("replicas", "orthogonal replica moments");
    rep_cmd->require_subcommand(1);
    auto* mom_cmd = rep_cmd->add_subcommand("moment", "moment of a replica word");
    mom_cmd->add_option("--word", word, "colors")->required();
    mom_cmd->add_option("--labels", labels)->required();
    mom_cmd->add_option("--vars", vars, "comma separated names, 1 for the unit")->required();
    mom_cmd->add_option("--functional", functional, "phi, E or psi:j");

    auto* conv_cmd = app.add_subcommand("convolve", "Motzkin parts of a free convolution moment");
    conv_cmd->add_option("--mu1", mu1_path)->required();
    conv_cmd->add_option("--mu2", mu2_path)->required();
    conv_cmd->add_option("--monomial", monomial, "comma separated variable names")->required();
    conv_cmd->add_flag("--by-path", by_path, "one line per Motzkin path");
    conv_cmd->add_flag("--symbolic", symbolic, "print moment polynomials instead of values");

    auto* syt_cmd = app.add_subcommand("syt", "Motzkin words and tableaux with at most three rows");
    auto* syt_word = syt_cmd->add_option("--word", word);
    syt_cmd->add_option("--tableau", tableau)->excludes(syt_word);

    auto* ver_cmd = app.add_subcommand("verify", "run the acceptance suite");
    auto* quick_flag = ver_cmd->add_flag("--quick", quick);
    ver_cmd->add_flag("--full", full)->excludes(quick_flag);
    ver_cmd->add_option("--criterion", criterion)->check(CLI::Range(1, criterion_count));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*words_cmd) {
            if (!labels.empty() && static_cast<int>(labels.size()) != n)
                throw std::invalid_argument("label string must have length n");
            std::vector<Word> ws = labels.empty() ? motzkin_words(n, height)
                                                  : labeled_words(n, parse_labels(labels), height);
            if (as_json) {
                json out = json::array();
                for (const auto& w : ws)
                    out.push_back({{"letters", w}});
                std::cout << out.dump() << '\n';
            } else {
                for (const auto& w : ws)
                    std::cout << format_word(w) << '\n';
            }
        } else if (*adapted_cmd) {
            Word w = checked_word(word);
            auto cls = irr ? AdaptedClass::irr : monotone ? AdaptedClass::monotone : AdaptedClass::all;
            auto ps = enumerate_adapted(w, cls);
            if (!dot.empty())
                write_file(dot, to_dot(lattice_of(w, irr), "NC(" + word + ")"));
            if (count)
                std::cout << ps.size() << '\n';
            else
                print_partitions(ps, as_json);
        } else if (*zero_cmd) {
            print_partitions({zero_hat(checked_word(word))}, as_json);
        } else if (*poset_cmd) {
            auto poset = poset_ncn(n, irr);
            if (!dot.empty())
                write_file(dot, to_dot(poset, "NC(" + std::to_string(n) + ")"));
            print_poset(poset, as_json);
        } else if (*cum_cmd) {
            std::vector<int> args;
            VarNamer namer = default_name;
            bool uni = vars.empty();
            if (uni) {
                if (n < 1)
                    throw std::invalid_argument("give --n or --multivariate");
                args = univariate(n);
            } else {
                auto names = name_vars(split(vars));
                for (int id : names.ids)
                    if (id == 0)
                        throw std::invalid_argument("the unit is not allowed here");
                if (n && n != static_cast<int>(names.ids.size()))
                    throw std::invalid_argument("--n differs from the number of variables");
                args = names.ids;
                namer = [by = names.by_id](int, int id) { return by.at(id); };
            }
            if (*dec_cmd) {
                auto table = free_decomposition(args, std::vector<int>(args.size(), 0));
                if (as_json) {
                    json out = json::array();
                    for (const auto& [w, p] : table)
                        out.push_back({{"w", w}, {"terms", poly_json(p)}});
                    std::cout << out.dump() << '\n';
                } else {
                    for (const auto& [w, p] : table)
                        std::cout << format_word(w) << ": " << p.str(namer, uni) << '\n';
                }
            } else {
                auto kind = [](const std::string& s) { return s == "m" ? Kind::m : s == "beta" ? Kind::beta : Kind::r; };
                Poly p = express(kind(from), kind(to), 0, args);
                if (as_json)
                    std::cout << json{{"from", from}, {"to", to}, {"terms", poly_json(p)}}.dump() << '\n';
                else
                    std::cout << p.str(namer, uni) << '\n';
            }
        } else if (*rep_cmd) {
            Word w = parse_word(word);
            auto l = parse_labels(labels);
            auto names = name_vars(split(vars));
            if (l.size() != w.size() || names.ids.size() != w.size())
                throw std::invalid_argument("word, labels and vars must have equal lengths");
            std::vector<ReplicaElement> xs;
            for (size_t k = 0; k < w.size(); ++k) {
                if (w[k] < 1)
                    throw std::invalid_argument("colors must be positive");
                xs.push_back(replica(names.ids[k], l[k], w[k]));
            }
            VarNamer namer = [&](int label, int id) { return id ? names.by_id.at(id) : default_name(label, 0); };
            auto x = product(xs);
            if (functional == "E") {
                auto b = expectation(x);
                std::cout << (as_json ? belement_json(b).dump() : b.str(namer)) << '\n';
            } else {
                Poly p;
                if (functional == "phi") {
                    p = phi(x);
                } else if (functional.rfind("psi:", 0) == 0) {
                    int j = 0;
                    try {
                        j = std::stoi(functional.substr(4));
                    } catch (const std::exception&) {
                        throw std::invalid_argument("bad functional " + functional);
                    }
                    if (j < 1)
                        throw std::invalid_argument("psi index must be positive");
                    p = psi(j, x);
                } else {
                    throw std::invalid_argument("unknown functional " + functional);
                }
                std::cout << (as_json ? poly_json(p).dump() : p.str(namer)) << '\n';
            }
        } else if (*conv_cmd) {
            auto mu1 = load_distribution(mu1_path);
            auto mu2 = load_distribution(mu2_path);
            if (mu1.alphabet != mu2.alphabet)
                throw std::invalid_argument("the two distributions must share an alphabet");
            std::vector<int> ids;
            for (const auto& v : split(monomial))
                ids.push_back(mu1.variable(v));
            if (ids.empty())
                throw std::invalid_argument("empty monomial");
            VarNamer namer = [&](int label, int id) {
                return id ? mu1.alphabet.at(id - 1) + (label == 2 ? "'" : "") : default_name(label, 0);
            };
            auto show = [&](const Poly& p) { return symbolic ? p.str(namer) : format_rational(evaluate(p, mu1, mu2)); };
            auto total = boxplus_total(ids);
            if (as_json) {
                json out{{"monomial", split(monomial)}, {"total", show(total)}};
                if (by_path) {
                    json parts = json::array();
                    for (const auto& [w, p] : boxplus_by_path(ids))
                        parts.push_back({{"w", w}, {"value", show(p)}});
                    out["paths"] = parts;
                }
                std::cout << out.dump() << '\n';
            } else {
                if (by_path)
                    for (const auto& [w, p] : boxplus_by_path(ids))
                        std::cout << format_word(w) << ": " << show(p) << '\n';
                std::cout << "total: " << show(total) << '\n';
            }
        } else if (*syt_cmd) {
            if (!word.empty()) {
                Word w = checked_word(word);
                if (!is_reduced(w))
                    throw std::invalid_argument("word must start and end with 1");
                std::cout << format_tableau(to_tableau(w)) << '\n';
            } else if (!tableau.empty()) {
                std::cout << format_word(from_tableau(parse_tableau(tableau))) << '\n';
            } else {
                throw CLI::RequiredError("--word or --tableau");
            }
        } else if (*ver_cmd) {
            Scale scale = full ? Scale::full : Scale::quick;
            bool ok = true;
            for (int id = 1; id <= criterion_count; ++id) {
                if (criterion && id != criterion)
                    continue;
                auto r = run_criterion(id, scale);
                ok = ok && r.pass;
                std::cout << format_result(r) << std::endl;
            }
            return ok ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
