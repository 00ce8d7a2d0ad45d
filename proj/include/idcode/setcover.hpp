#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "idcode/bitset.hpp"
#include "idcode/errors.hpp"

namespace idcode {

// Set cover instance with intersection 1: any two sets share at most one
// element (and the sets are distinct), and every element lies in at least one
// set. Elements are 0..ground_size-1.
struct SetCover1Instance {
    int ground_size = 0;
    std::vector<std::vector<int>> sets;  // each sorted ascending, no duplicates

    int num_sets() const { return (int)sets.size(); }

    void validate() const {
        if (ground_size < 1) throw std::invalid_argument("empty ground set");
        if (sets.empty()) throw std::invalid_argument("no sets");
        Bitset covered(ground_size);
        std::vector<Bitset> bits;
        for (const auto& s : sets) {
            if (s.empty()) throw std::invalid_argument("empty set");
            Bitset b(ground_size);
            for (size_t i = 0; i < s.size(); ++i) {
                if (s[i] < 0 || s[i] >= ground_size)
                    throw std::invalid_argument("element out of range: " + std::to_string(s[i]));
                if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("set not sorted strictly ascending");
                covered.set(s[i]);
                b.set(s[i]);
            }
            bits.push_back(std::move(b));
        }
        if (covered.count() != ground_size) {
            int missing = 0;
            while (covered.test(missing)) ++missing;
            throw std::invalid_argument("element " + std::to_string(missing) + " is in no set");
        }
        for (size_t a = 0; a < bits.size(); ++a)
            for (size_t b = a + 1; b < bits.size(); ++b) {
                if (bits[a] == bits[b])
                    throw std::invalid_argument("sets " + std::to_string(a) + " and " + std::to_string(b) +
                                                " are equal");
                if ((bits[a] & bits[b]).count() > 1)
                    throw std::invalid_argument("sets " + std::to_string(a) + " and " + std::to_string(b) +
                                                " share more than one element");
            }
    }

    Bitset set_bits(int j) const {
        Bitset b(ground_size);
        for (int e : sets[j]) b.set(e);
        return b;
    }

    // True when the given set indices cover the ground set.
    bool is_cover(const std::vector<int>& chosen) const {
        Bitset covered(ground_size);
        for (int j : chosen) {
            if (j < 0 || j >= num_sets()) throw std::invalid_argument("set index out of range");
            covered |= set_bits(j);
        }
        return covered.count() == ground_size;
    }
};

}  // namespace idcode
