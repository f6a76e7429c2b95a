#include "rowmotion/catalog.hpp"

#include <algorithm>

#include "rowmotion/constructions.hpp"
#include "rowmotion/isomorphism.hpp"
#include "rowmotion/root_system.hpp"

namespace rowmotion {

namespace {

using E = PosetExpr;

E grid(int m, int n) { return E::prod(E::chain(m), E::chain(n)); }
E j2() { return E::j(E::j(grid(2, 3))); }
E j3() { return E::j(j2()); }

RootType e(int rank) { return {Family::E, rank}; }

std::string grid_name(int m, int n) { return "[" + std::to_string(m) + "]×[" + std::to_string(n) + "]"; }
std::string h_name(int n, int) { return "H_" + std::to_string(n); }
std::string k_name(int m, int n) { return "[" + std::to_string(m) + "]×K_" + std::to_string(n - 1); }

E grid_member(int m, int n) { return grid(m, n); }
E h_member(int n, int) { return E::h(n); }
E k_member(int m, int n) { return E::prod(E::chain(m), E::k(n - 1)); }

std::string normalize(std::string_view s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const std::string_view rest = s.substr(k);
        if (rest.starts_with("×")) {
            out += 'x';
            k += std::string_view("×").size() - 1;
        } else if (rest.starts_with("α")) {
            out += 'a';
            k += std::string_view("α").size() - 1;
        } else if (rest.starts_with("²")) {
            out += "^2";
            k += std::string_view("²").size() - 1;
        } else if (rest.starts_with("³")) {
            out += "^3";
            k += std::string_view("³").size() - 1;
        } else if (s[k] != ' ' && s[k] != '_') {
            const char c = s[k];
            out += c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c;
        }
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    // Realizing layers were found by isomorphism search over every
    // exceptional pivot; the catalog tests re-check each one.
    static const std::vector<CatalogEntry> entries = {
        {"[2]×[3]×[3]", E::prod(E::chain(2), grid(3, 3)), e(6), 4},
        {"[2]×[3]×[4]", E::prod(E::chain(2), grid(3, 4)), e(7), 4},
        {"[2]×[3]×[5]", E::prod(E::chain(2), grid(3, 5)), e(8), 4},
        {"[2]×H_4", E::prod(E::chain(2), E::h(4)), e(6), 3},
        {"[3]×H_4", E::prod(E::chain(3), E::h(4)), e(7), 5},
        {"[4]×H_4", E::prod(E::chain(4), E::h(4)), e(8), 5},
        {"[2]×H_5", E::prod(E::chain(2), E::h(5)), e(7), 3},
        {"[2]×H_6", E::prod(E::chain(2), E::h(6)), e(8), 3},
        {"J^2([2]×[3])", j2(), e(6), 1},
        {"[2]×J^2([2]×[3])", E::prod(E::chain(2), j2()), e(7), 6},
        {"[3]×J^2([2]×[3])", E::prod(E::chain(3), j2()), e(8), 6},
        {"J^3([2]×[3])", j3(), e(7), 7},
        {"[2]×J^3([2]×[3])", E::prod(E::chain(2), j3()), e(8), 7},
        {"[α_4] in F_4", std::nullopt, {Family::F, 4}, 4},
        {"[α_2] in E_6", std::nullopt, e(6), 2},
        {"[α_1] in E_7", std::nullopt, e(7), 1},
        {"[α_2] in E_7", std::nullopt, e(7), 2},
        {"[α_1] in E_8", std::nullopt, e(8), 1},
        {"[α_2] in E_8", std::nullopt, e(8), 2},
        {"[α_8] in E_8", std::nullopt, e(8), 8},
    };
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
    const std::string key = normalize(name);
    for (const CatalogEntry& entry : catalog())
        if (normalize(entry.name) == key) return &entry;
    return nullptr;
}

const std::vector<FamilyDescriptor>& families() {
    static const std::vector<FamilyDescriptor> list = {
        {"[m]×[n]", "m, n >= 1; realized by [α_m] in A_{m+n-1}", grid_member, grid_name},
        {"H_n", "n >= 1; the shifted staircase", h_member, h_name},
        {"[m]×K_{n-1}", "m >= 1, n >= 2", k_member, k_name},
    };
    return list;
}

std::vector<std::string> identify_family_members(const Poset& p) {
    const auto size = static_cast<int>(p.size());
    std::vector<std::string> out;
    auto test = [&](const FamilyDescriptor& family, int a, int b) {
        const Poset candidate = build(family.member(a, b));
        if (candidate.max_rank() == p.max_rank() && are_isomorphic(candidate, p))
            out.push_back(family.member_name(a, b));
    };
    const auto& fam = families();
    for (int m = 1; m * m <= size; ++m)
        if (size % m == 0) test(fam[0], m, size / m);
    for (int n = 1; n * (n + 1) / 2 <= size; ++n)
        if (n * (n + 1) / 2 == size) test(fam[1], n, 0);
    for (int n = 2; 2 * n <= size; ++n)
        if (size % (2 * n) == 0) test(fam[2], size / (2 * n), n);
    return out;
}

std::vector<ClassicalLayer> classical_layers(std::size_t max_elements) {
    std::vector<ClassicalLayer> out;
    // A layer of a connected rank-l diagram has at least l elements (one per
    // path from the pivot), so ranks above max_elements contribute nothing.
    const int top = static_cast<int>(max_elements);
    for (Family family : {Family::A, Family::B, Family::C, Family::D}) {
        const int low = family == Family::A ? 1 : family == Family::B ? 2 : family == Family::C ? 3 : 4;
        for (int l = low; l <= top; ++l) {
            const RootType type{family, l};
            const RootSystem rs = positive_roots(type);
            for (int i = 1; i <= l; ++i) {
                const int b = knapp_to_bourbaki(type, i) - 1;
                const auto count = static_cast<std::size_t>(std::count_if(
                    rs.positive_roots.begin(), rs.positive_roots.end(),
                    [b](const RootVector& v) { return v[static_cast<std::size_t>(b)] == 1; }));
                if (count > max_elements) continue;
                const RootLayer lay = layer(type, i);
                out.push_back({type, i, lay.poset.size(), lay.poset.max_rank(), identify_family_members(lay.poset)});
            }
        }
    }
    return out;
}

}  // namespace rowmotion
