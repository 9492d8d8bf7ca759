#pragma once

#include <random>

#include "zdforge/ring.hpp"

namespace zdtest {

using namespace zdforge;

inline GroupElement random_group_element(std::mt19937& rng, const GroupDescriptor& G,
                                         int max_lamps = 3, int span = 3) {
    std::uniform_int_distribution<int> nl(0, max_lamps);
    std::uniform_int_distribution<int64_t> pos(-span, span);
    GroupElement g;
    g.factors.resize(G.d);
    for (int i = 0; i < G.d; ++i) {
        int k = nl(rng);
        std::vector<int64_t> lamps;
        for (int j = 0; j < k; ++j) lamps.push_back(pos(rng));
        std::sort(lamps.begin(), lamps.end());
        lamps.erase(std::unique(lamps.begin(), lamps.end()), lamps.end());
        g.factors[i].lamps = std::move(lamps);
        g.factors[i].shift = pos(rng);
    }
    if (G.finite()) return quotient_map(G, g);
    return g;
}

inline RingElement random_ring_element(std::mt19937& rng, const GroupDescriptor& G,
                                       int max_terms = 4, int coeff_bound = 5) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> num(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<int> den(1, 4);
    RingElement x(G);
    int k = nt(rng);
    for (int i = 0; i < k; ++i)
        x.add_term(random_group_element(rng, G), rat(num(rng), den(rng)));
    return x;
}

}  // namespace zdtest
