#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "zdforge/ring.hpp"

namespace zdforge {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "L^<d>" or "L_<N>^<d>".
inline GroupDescriptor group_descriptor_parse(const std::string& s) {
    GroupDescriptor G;
    size_t caret = s.find('^');
    if (s.empty() || s[0] != 'L' || caret == std::string::npos)
        throw FormatError("bad group descriptor '" + s + "'");
    try {
        if (s[1] == '_') G.modulus = std::stoll(s.substr(2, caret - 2));
        else if (caret != 1) throw FormatError("bad group descriptor '" + s + "'");
        G.d = std::stoi(s.substr(caret + 1));
    } catch (const std::logic_error&) {
        throw FormatError("bad group descriptor '" + s + "'");
    }
    if (G.d < 1 || G.modulus < 0 || G.modulus == 1)
        throw FormatError("bad group descriptor '" + s + "'");
    return G;
}

/// One term per line: `<rational> * [ f1:{i,j,...} s1:<int> | ... ]`,
/// preceded by the header line `group L^<d>` or `group L_<N>^<d>`.
inline void write_element(std::ostream& os, const RingElement& x) {
    os << "group " << x.group().str() << "\n";
    for (const auto& [g, c] : x.terms()) {
        os << rat_str(c) << " * [ ";
        for (int i = 0; i < g.d(); ++i) {
            if (i) os << " | ";
            os << "f" << (i + 1) << ":{";
            const auto& lamps = g.factors[i].lamps;
            for (size_t j = 0; j < lamps.size(); ++j) {
                if (j) os << ",";
                os << lamps[j];
            }
            os << "} s" << (i + 1) << ":" << g.factors[i].shift;
        }
        os << " ]\n";
    }
}

inline std::string element_str(const RingElement& x) {
    std::ostringstream os;
    write_element(os, x);
    return os.str();
}

namespace detail {

inline GroupElement parse_bracket_body(const std::string& body, const GroupDescriptor& G) {
    GroupElement g;
    g.factors.resize(G.d);
    std::istringstream in(body);
    for (int i = 0; i < G.d; ++i) {
        if (i) {
            std::string bar;
            if (!(in >> bar) || bar != "|") throw FormatError("expected '|' between factors");
        }
        std::string ftok, stok;
        if (!(in >> ftok >> stok)) throw FormatError("truncated term");
        const std::string fprefix = "f" + std::to_string(i + 1) + ":{";
        if (ftok.rfind(fprefix, 0) != 0 || ftok.back() != '}')
            throw FormatError("bad lamp set '" + ftok + "'");
        std::string lamps = ftok.substr(fprefix.size(), ftok.size() - fprefix.size() - 1);
        if (!lamps.empty()) {
            std::istringstream ls(lamps);
            std::string item;
            while (std::getline(ls, item, ','))
                g.factors[i].lamps.push_back(std::stoll(item));
        }
        for (size_t j = 1; j < g.factors[i].lamps.size(); ++j)
            if (g.factors[i].lamps[j - 1] >= g.factors[i].lamps[j])
                throw FormatError("lamp set not strictly increasing");
        const std::string sprefix = "s" + std::to_string(i + 1) + ":";
        if (stok.rfind(sprefix, 0) != 0) throw FormatError("bad shift '" + stok + "'");
        g.factors[i].shift = std::stoll(stok.substr(sprefix.size()));
    }
    std::string rest;
    if (in >> rest) throw FormatError("trailing tokens in term");
    return g;
}

}  // namespace detail

inline RingElement read_element(std::istream& is) {
    std::string line;
    // skip blank lines before the header
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    std::istringstream hdr(line);
    std::string kw, desc;
    if (!(hdr >> kw >> desc) || kw != "group")
        throw FormatError("missing 'group' header");
    RingElement x(group_descriptor_parse(desc));

    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        size_t lb = line.find('['), rb = line.rfind(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            throw FormatError("bad term line: " + line);
        std::istringstream head(line.substr(0, lb));
        std::string coeff, starkw;
        if (!(head >> coeff >> starkw) || starkw != "*")
            throw FormatError("bad term line: " + line);
        Rat c = rat_parse(coeff);
        GroupElement g = detail::parse_bracket_body(line.substr(lb + 1, rb - lb - 1), x.group());
        if (x.coefficient(g) != 0) throw FormatError("duplicate term in element file");
        x.add_term(g, c);
    }
    return x;
}

inline RingElement element_from_str(const std::string& s) {
    std::istringstream in(s);
    return read_element(in);
}

}  // namespace zdforge
