#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace levipath {

/// A vertex identity: a strictly increasing sequence of integers from [m].
/// Complete-graph vertices use singleton labels, Levi-graph vertices use
/// (k-1)- or k-element subsets.
struct SubsetLabel {
    std::vector<int> elems;

    auto operator<=>(const SubsetLabel&) const = default;

    int size() const { return static_cast<int>(elems.size()); }

    bool contains(int e) const {
        return std::binary_search(elems.begin(), elems.end(), e);
    }

    bool subset_of(const SubsetLabel& other) const {
        return std::includes(other.elems.begin(), other.elems.end(),
                             elems.begin(), elems.end());
    }

    /// Copy with element e inserted (keeps the sorted invariant).
    SubsetLabel with(int e) const {
        SubsetLabel out = *this;
        out.elems.insert(std::lower_bound(out.elems.begin(), out.elems.end(), e), e);
        return out;
    }

    /// Copy with element e removed.
    SubsetLabel without(int e) const {
        SubsetLabel out = *this;
        auto it = std::lower_bound(out.elems.begin(), out.elems.end(), e);
        if (it != out.elems.end() && *it == e) out.elems.erase(it);
        return out;
    }

    /// Singletons render bare ("3"), larger sets braced ("{1,3}").
    std::string str() const {
        std::ostringstream os;
        if (elems.size() == 1) {
            os << elems[0];
            return os.str();
        }
        os << '{';
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (i) os << ',';
            os << elems[i];
        }
        os << '}';
        return os.str();
    }
};

inline SubsetLabel label_of(std::initializer_list<int> xs) {
    SubsetLabel l{std::vector<int>(xs)};
    std::sort(l.elems.begin(), l.elems.end());
    return l;
}

/// Strictly increasing and within 1..m.
inline bool valid_subset_label(const SubsetLabel& l, int m) {
    for (std::size_t i = 0; i < l.elems.size(); ++i) {
        if (l.elems[i] < 1 || l.elems[i] > m) return false;
        if (i > 0 && l.elems[i] <= l.elems[i - 1]) return false;
    }
    return true;
}

/// All k-element subsets of [m] in lexicographic order.
inline std::vector<SubsetLabel> subsets_of_size(int m, int k) {
    std::vector<SubsetLabel> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(SubsetLabel{cur});
        if (k == 0) break;
        // advance to the next combination in lex order
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace levipath
