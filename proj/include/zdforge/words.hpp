#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zdforge/ring.hpp"

namespace zdforge {

struct WordParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A symmetric generating sequence with named symbols. For each symbol the
/// value of its inverse also appears in the list; involution() pairs them
/// (a_i are self-paired).
class GeneratorAlphabet {
public:
    struct Symbol {
        std::string name;
        GroupElement value;
        size_t inverse;  // index of the symbol carrying the inverse value
    };

    GeneratorAlphabet(GroupDescriptor G, std::vector<std::pair<std::string, GroupElement>> symbols)
        : group_(std::move(G)) {
        for (auto& [name, value] : symbols) {
            if (index_.count(name)) throw WordParseError("duplicate generator name: " + name);
            index_[name] = symbols_.size();
            symbols_.push_back({name, value, size_t(-1)});
        }
        // pair up inverses; fail if the sequence is not symmetric
        for (size_t i = 0; i < symbols_.size(); ++i) {
            GroupElement inv = group_inv(group_, symbols_[i].value);
            size_t found = size_t(-1);
            for (size_t j = 0; j < symbols_.size(); ++j)
                if (symbols_[j].value == inv) { found = j; break; }
            if (found == size_t(-1))
                throw WordParseError("alphabet not symmetric: no inverse for " + symbols_[i].name);
            symbols_[i].inverse = found;
        }
    }

    /// The standard alphabet of L^d (or a finite quotient): per factor i
    /// (1-based) the symbols t<i>, T<i> = t<i>^-1 and the involution a<i>.
    static GeneratorAlphabet standard(const GroupDescriptor& G) {
        std::vector<std::pair<std::string, GroupElement>> syms;
        for (int i = 0; i < G.d; ++i) {
            const std::string n = std::to_string(i + 1);
            syms.emplace_back("t" + n, gen_t(G, i, 1));
            syms.emplace_back("T" + n, gen_t(G, i, -1));
            syms.emplace_back("a" + n, gen_lamp(G, i, 0));
        }
        return GeneratorAlphabet(G, std::move(syms));
    }

    const GroupDescriptor& group() const { return group_; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    const GroupElement* find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? nullptr : &symbols_[it->second].value;
    }

private:
    GroupDescriptor group_;
    std::vector<Symbol> symbols_;
    std::map<std::string, size_t> index_;
};

namespace detail {
inline bool is_sign_token(const std::string& t) {
    return t == "+" || t == "-" || t == "−";  // ASCII hyphen-minus or U+2212
}
}  // namespace detail

/// Parses a word of the language A(G) into a ring element. Tokens are
/// whitespace-separated; grammar:
///   word := [sign] term { sign term }
///   term := '1' | gen+
///   sign := '+' | '-'
/// Each term contributes +-(product of its generators); equal group elements
/// accumulate and zero coefficients are dropped.
inline RingElement parse_word(const std::string& text, const GeneratorAlphabet& alphabet) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) throw WordParseError("empty word");

    const GroupDescriptor& G = alphabet.group();
    RingElement out(G);

    size_t i = 0;
    bool first = true;
    while (i < tokens.size()) {
        Rat sign(1);
        if (detail::is_sign_token(tokens[i])) {
            if (tokens[i] != "+") sign = -1;
            ++i;
        } else if (!first) {
            throw WordParseError("expected '+' or '-' before term, got '" + tokens[i] + "'");
        }
        first = false;

        // term: '1' or a nonempty run of generator tokens
        if (i >= tokens.size()) throw WordParseError("empty term at end of word");
        if (tokens[i] == "1") {
            out.add_term(group_identity(G), sign);
            ++i;
            continue;
        }
        GroupElement g = group_identity(G);
        size_t len = 0;
        while (i < tokens.size() && !detail::is_sign_token(tokens[i])) {
            const GroupElement* v = alphabet.find(tokens[i]);
            if (!v) throw WordParseError("unknown symbol '" + tokens[i] + "'");
            g = group_mul(G, g, *v);
            ++i;
            ++len;
        }
        if (len == 0) throw WordParseError("empty term");
        out.add_term(g, sign);
    }
    return out;
}

}  // namespace zdforge
