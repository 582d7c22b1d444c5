#pragma once

#include <vector>
#include <string>
#include <sstream>
#include <cctype>
#include <optional>

#include "word.hpp"

namespace orbiweight {

// A finite presentation: named generators and freely reduced relator words.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::optional<int> index_of(const std::string& name) const {
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    void add_relator(const Word& w) {
        for (const auto& l : w.letters)
            if (l.gen < 0 || l.gen >= static_cast<int>(generators.size()))
                throw InternalInconsistency("relator uses a generator index out of range");
        relators.push_back(w);
    }
};

namespace detail {

inline bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace detail

// Parses one word over the presentation's generators.
// Grammar: word := atom*; atom := NAME | NAME '^' INT. Atoms are separated by
// whitespace; INT may be negative ("x^3 z^-1 x^5").
inline Word parse_word(const std::string& text, const Presentation& p) {
    Word w;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (!detail::is_name_start(text[i]))
            throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in word: " + text);
        size_t j = i;
        while (j < n && detail::is_name_char(text[j])) ++j;
        std::string name = text.substr(i, j - i);
        auto gi = p.index_of(name);
        if (!gi) throw ParseError("unknown generator '" + name + "' in word: " + text);
        i64 e = 1;
        if (j < n && text[j] == '^') {
            ++j;
            size_t k = j;
            if (k < n && (text[k] == '-' || text[k] == '+')) ++k;
            size_t d0 = k;
            while (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
            if (k == d0) throw ParseError("missing exponent after '^' in word: " + text);
            try {
                e = std::stoll(text.substr(j, k - j));
            } catch (const std::logic_error&) {
                throw ParseError("exponent out of range in word: " + text);
            }
            j = k;
        }
        w.append(*gi, e);
        i = j;
    }
    return w;
}

inline std::string print_word(const Word& w, const Presentation& p) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w.letters) {
        if (!out.empty()) out += ' ';
        out += p.generators[l.gen];
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

// Presentation text format:
//   - '#' starts a comment (to end of line); blank lines are skipped;
//   - the first content line lists generator names separated by whitespace;
//   - each further content line is a relator: either a word, or an equation
//     "lhs = rhs" which contributes the relator lhs * rhs^-1.
inline Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    bool have_gens = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        if (!have_gens) {
            std::istringstream ls(line);
            std::string name;
            while (ls >> name) {
                if (!detail::is_name_start(name[0]))
                    throw ParseError("invalid generator name '" + name + "'");
                for (char c : name)
                    if (!detail::is_name_char(c))
                        throw ParseError("invalid generator name '" + name + "'");
                if (p.index_of(name)) throw ParseError("duplicate generator name '" + name + "'");
                p.generators.push_back(name);
            }
            if (p.generators.empty()) throw ParseError("empty generator line");
            have_gens = true;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            p.add_relator(parse_word(line, p));
        } else {
            Word lhs = parse_word(line.substr(0, eq), p);
            Word rhs = parse_word(line.substr(eq + 1), p);
            p.add_relator(equation_relator(lhs, rhs));
        }
    }
    if (!have_gens) throw ParseError("presentation text has no generator line");
    return p;
}

inline std::string print_presentation(const Presentation& p) {
    std::string out;
    for (size_t i = 0; i < p.generators.size(); ++i) {
        if (i) out += ' ';
        out += p.generators[i];
    }
    out += '\n';
    for (const auto& r : p.relators) out += print_word(r, p) + "\n";
    return out;
}

} // namespace orbiweight
