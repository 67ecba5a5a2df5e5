#include "mirror/recursion/multidiff.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace mirror {

void Multidifferential::add(const FormIndex& idx, const Field& c) {
    if (is_zero(c)) return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(idx, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
}

std::string index_string(const FormIndex& idx) {
    std::string s = "[";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(idx[i].first) + "," + std::to_string(idx[i].second) + ")";
    }
    return s + "]";
}

std::string Multidifferential::first_difference(const Multidifferential& a, const Multidifferential& b) {
    if (a.g != b.g || a.n != b.n) return "(g,n) differ";
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    while (ia != a.terms.end() || ib != b.terms.end()) {
        if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first))
            return index_string(ia->first) + ": " + ia->second.to_string() + " vs 0";
        if (ia == a.terms.end() || ib->first < ia->first)
            return index_string(ib->first) + ": 0 vs " + ib->second.to_string();
        if (ia->second != ib->second)
            return index_string(ia->first) + ": " + ia->second.to_string() + " vs " + ib->second.to_string();
        ++ia;
        ++ib;
    }
    return "";
}

bool Multidifferential::is_symmetric() const {
    for (const auto& [idx, c] : terms) {
        FormIndex p = idx;
        std::sort(p.begin(), p.end());
        do {
            auto it = terms.find(p);
            if (it == terms.end() || it->second != c) return false;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return true;
}

std::string Multidifferential::to_json() const {
    nlohmann::ordered_json j;
    j["g"] = g;
    j["n"] = n;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [idx, c] : terms) {
        nlohmann::ordered_json t;
        t["idx"] = nlohmann::ordered_json::array();
        for (auto [s, d] : idx) t["idx"].push_back({s, d});
        t["coeff"] = c.to_string();
        j["terms"].push_back(t);
    }
    return j.dump(2);
}

}  // namespace mirror
