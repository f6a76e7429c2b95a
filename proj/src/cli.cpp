#include "rowmotion/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rowmotion/catalog.hpp"
#include "rowmotion/constructions.hpp"
#include "rowmotion/expr.hpp"
#include "rowmotion/grid_codec.hpp"
#include "rowmotion/homomesy.hpp"
#include "rowmotion/k_codec.hpp"
#include "rowmotion/root_system.hpp"

namespace rowmotion::cli {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<std::size_t>& v, const char* sep) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
    return out;
}

std::string rational_list(const std::vector<Rational>& v) {
    std::set<std::string> distinct;
    for (const Rational& q : v) distinct.insert(to_string(q));
    std::string out;
    for (const std::string& s : distinct) out += (out.empty() ? "" : ", ") + s;
    return out;
}

void require_positive(int value, const char* what) {
    if (value < 1) throw std::invalid_argument(std::string(what) + " must be a positive integer");
}

/// Accumulates checks; each one names the property it tests.
struct Checks {
    std::vector<CheckResult>& out;

    void add(std::string name, bool passed, std::string detail = {}) {
        out.push_back({std::move(name), passed, std::move(detail)});
    }

    void average(const std::string& name, const HomomesyReport& r) {
        std::string detail = "expected " + to_string(*r.expected) + "; " + std::to_string(r.averages.size()) + " orbits";
        if (!r.passed()) detail += "; observed " + rational_list(r.averages);
        add(name, r.passed(), detail);
    }
};

/// A resolved target: a catalog entry or an expression.
struct Target {
    std::string description;
    Poset poset;
    std::optional<RootLayer> layer;
};

Target resolve(const std::string& text) {
    if (const CatalogEntry* entry = find_catalog_entry(text)) {
        RootLayer lay = layer(entry->type, entry->pivot);
        Poset p = lay.poset;
        return {entry->name + " = " + to_string(entry->layer_expr()), std::move(p), std::move(lay)};
    }
    const PosetExpr e = parse_poset_expr(text);
    if (e.kind == PosetExpr::Kind::Layer) {
        RootLayer lay = layer(e.type, e.param);
        Poset p = lay.poset;
        return {to_string(e), std::move(p), std::move(lay)};
    }
    return {to_string(e), build(e), std::nullopt};
}

EnumerationOptions enumeration(const Command& cmd) { return {cmd.cap, std::max(1U, cmd.threads)}; }

ElementSet parse_bits(const Poset& p, const std::string& bits) {
    if (bits.size() != p.size())
        throw std::invalid_argument("ideal bit string has " + std::to_string(bits.size()) + " symbols, poset has " +
                                    std::to_string(p.size()) + " elements");
    ElementSet s;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1')
            s.insert(k);
        else if (bits[k] != '0')
            throw std::invalid_argument("ideal bit string may only contain 0 and 1");
    }
    if (!p.is_ideal(s)) throw std::invalid_argument("bit string " + bits + " is not an ideal");
    return s;
}

void describe_poset(RunResult& r, const std::string& description, const Poset& p) {
    r.poset = description;
    r.n_elements = p.size();
    r.max_rank = p.max_rank();
}

// orbits ------------------------------------------------------------------

void run_orbits(const Command& cmd, RunResult& r) {
    const Target t = resolve(cmd.target);
    describe_poset(r, t.description, t.poset);
    Checks checks{r.checks};
    if (cmd.seed_ideal) {
        const OrbitReport orbit = orbit_of(IdealSet(t.poset, parse_bits(t.poset, *cmd.seed_ideal)));
        r.orbits = orbit_rows({orbit});
        std::set<std::string> distinct;
        for (const IdealSet& i : orbit.ideals) distinct.insert(i.members().to_bits(t.poset.size()));
        checks.add("orbit ideals are distinct", distinct.size() == orbit.length,
                   "length " + std::to_string(orbit.length));
        return;
    }
    const auto orbits = all_orbits(t.poset, enumeration(cmd));
    r.orbits = orbit_rows(orbits);
    std::size_t total = 0;
    for (const OrbitReport& o : orbits) total += o.length;
    const std::size_t ideals = count_ideals(t.poset, cmd.cap);
    checks.add("orbits partition the ideals", total == ideals,
               std::to_string(orbits.size()) + " orbits covering " + std::to_string(total) + " of " +
                   std::to_string(ideals) + " ideals");
}

// verify-grid -------------------------------------------------------------

void run_verify_grid(const Command& cmd, RunResult& r) {
    require_positive(cmd.m, "m");
    require_positive(cmd.n, "n");
    const int m = cmd.m, n = cmd.n;
    const GridPoset grid(m, n);
    describe_poset(r, "prod(chain(" + std::to_string(m) + "),chain(" + std::to_string(n) + "))", grid.poset());
    Checks checks{r.checks};

    const auto orbits = all_orbits(grid.poset(), enumeration(cmd));
    r.orbits = orbit_rows(orbits);
    Rational expected(m * n, m + n);
    expected.canonicalize();
    HomomesyReport avg = check_mesic(orbits, antichain_cardinality(), expected);
    checks.average("every orbit averages mn/(m+n) antichain elements", avg);

    std::size_t conjugate = 0, sizes = 0, roundtrip = 0, formula = 0, windows = 0, sums = 0, total = 0;
    std::set<std::string> words;
    for (const OrbitReport& o : orbits)
        for (std::size_t k = 0; k < o.length; ++k) {
            const IdealSet& ideal = o.ideals[k];
            const BinaryWord w = encode_grid(grid, ideal);
            words.insert(w.str());
            ++total;
            if (encode_grid(grid, o.ideals[(k + 1) % o.length]) == psi(w)) ++conjugate;
            if (count_10(w) == o.antichain_sizes[k]) ++sizes;
            if (decode_grid(grid, w) == ideal) ++roundtrip;

            const SizeProfile profile = size_profile(w);
            const LongSequences seq = long_sequences_by_rule(w);
            bool formula_ok = true, windows_ok = true;
            int sum = 0;
            for (int i = 1; i <= m + n; ++i) {
                const std::size_t actual = o.antichain_sizes[(k + static_cast<std::size_t>(i)) % o.length];
                const int predicted = profile.size_at(i);
                formula_ok = formula_ok && predicted == static_cast<int>(actual);
                windows_ok = windows_ok &&
                             word_from_windows(seq, m, n, i) ==
                                 encode_grid(grid, o.ideals[(k + static_cast<std::size_t>(i)) % o.length]);
                sum += predicted;
            }
            formula += formula_ok;
            windows += windows_ok;
            sums += sum == m * n;
        }
    auto of = [&](std::size_t good) { return std::to_string(good) + "/" + std::to_string(total) + " ideals"; };
    checks.add("codec conjugates rowmotion to ψ", conjugate == total, of(conjugate));
    checks.add("occurrences of 10 count antichain elements", sizes == total, of(sizes));
    checks.add("codec is a bijection onto words with m zeros and n ones",
               roundtrip == total && words.size() == total, of(roundtrip));
    checks.add("size formula predicts every antichain size along the orbit", formula == total, of(formula));
    checks.add("formula sizes over m+n steps sum to mn", sums == total, of(sums));
    checks.add("zig-zag of long-sequence windows rebuilds each word", windows == total, of(windows));

    std::size_t order = 1;
    bool lengths_ok = true;
    const auto g = static_cast<std::size_t>(std::gcd(m, n));
    for (const OrbitReport& o : orbits) {
        order = std::lcm(order, o.length);
        const auto mn = static_cast<std::size_t>(m + n);
        lengths_ok = lengths_ok && mn % o.length == 0 && g % (mn / o.length) == 0;
    }
    checks.add("rowmotion has order m+n", order == static_cast<std::size_t>(m + n), "order " + std::to_string(order));
    checks.add("orbit lengths are (m+n)/e with e dividing gcd(m,n)", lengths_ok);

    // Word table along ψ from the requested word (default: the empty ideal).
    BinaryWord w(cmd.word.empty() ? std::string(static_cast<std::size_t>(m), '0') + std::string(static_cast<std::size_t>(n), '1')
                                  : cmd.word);
    if (w.zeros() != static_cast<std::size_t>(m) || w.ones() != static_cast<std::size_t>(n))
        throw std::invalid_argument("word " + w.str() + " does not have m zeros and n ones");
    const SizeProfile profile = size_profile(w);
    bool table_ok = true;
    for (int i = 0; i <= m + n; ++i) {
        const int predicted = i == 0 ? static_cast<int>(count_10(w)) : profile.size_at(i);
        r.rows.push_back({{"step", std::to_string(i)},
                          {"word", w.str()},
                          {"size", std::to_string(count_10(w))},
                          {"formula", std::to_string(predicted)}});
        table_ok = table_ok && predicted == static_cast<int>(count_10(w));
        w = psi(w);
    }
    checks.add("word table sizes match the formula", table_ok);
}

// verify-k ----------------------------------------------------------------

void run_verify_k(const Command& cmd, RunResult& r) {
    require_positive(cmd.m, "m");
    if (cmd.n < 2) throw std::invalid_argument("n must be at least 2 for [m]×K_{n-1}");
    const int m = cmd.m, n = cmd.n;
    const KProduct k(m, n);
    describe_poset(r, "prod(chain(" + std::to_string(m) + "),K(" + std::to_string(n - 1) + "))", k.poset());
    Checks checks{r.checks};

    const KTypeSplit split = split_k_orbits(k, enumeration(cmd));
    std::vector<OrbitReport> orbits = split.type_one;
    orbits.insert(orbits.end(), split.type_two.begin(), split.type_two.end());
    r.orbits = orbit_rows(orbits);

    Rational expected(2 * m * n, m + 2 * n - 1);
    expected.canonicalize();
    checks.average("full-rank (type I) orbits average 2mn/(m+2n-1)",
                   check_mesic(split.type_one, antichain_cardinality(), expected));
    checks.average("non-full-rank (type II) orbits average 2mn/(m+2n-1)",
                   check_mesic(split.type_two, antichain_cardinality(), expected));
    checks.add("full rank is constant along every orbit", split.invariant);

    std::size_t full = 0, full_conj = 0, full_size = 0, full_trip = 0;
    std::size_t starred = 0, star_conj = 0, star_size = 0, star_trip = 0, agree = 0, dual_ok = 0;
    for (const OrbitReport& o : orbits)
        for (std::size_t j = 0; j < o.length; ++j) {
            const IdealSet& ideal = o.ideals[j];
            const IdealSet& next = o.ideals[(j + 1) % o.length];
            if (k.is_full_rank(ideal)) {
                ++full;
                const BinaryWord w = encode_k_full_rank(k, ideal);
                full_conj += encode_k_full_rank(k, next) == psi(w);
                full_size += count_10(w) + static_cast<std::size_t>(epsilon_n(w, n)) == o.antichain_sizes[j];
                full_trip += decode_k_full_rank(k, w) == ideal;
            } else {
                ++starred;
                const StarredWord w = encode_k_starred(k, ideal);
                star_conj += encode_k_starred(k, next) == psi_bar(w);
                star_size += count_10(w.str()) == o.antichain_sizes[j];
                star_trip += decode_k_starred(k, w) == k.canonical(ideal);
                agree += psi_bar_by_patterns(w) == psi_bar(w);
            }
            dual_ok += rowmotion_ideal(k.dual(ideal)) == k.dual(next);
        }
    auto of = [](std::size_t good, std::size_t all) { return std::to_string(good) + "/" + std::to_string(all) + " ideals"; };
    const std::size_t total = full + starred;
    checks.add("full-rank codec conjugates rowmotion to ψ", full_conj == full, of(full_conj, full));
    checks.add("full-rank antichain size is occurrences of 10 plus ε_n", full_size == full, of(full_size, full));
    checks.add("full-rank codec round-trips", full_trip == full, of(full_trip, full));
    checks.add("starred codec conjugates rowmotion to ψ̄ on duality classes", star_conj == starred,
               of(star_conj, starred));
    checks.add("starred antichain size is the descent count", star_size == starred, of(star_size, starred));
    checks.add("starred codec round-trips on the I_n representative", star_trip == starred, of(star_trip, starred));
    checks.add("ψ̄ agrees with its 1-* pattern form", agree == starred, of(agree, starred));
    checks.add("rowmotion commutes with the n <-> n' duality", dual_ok == total, of(dual_ok, total));

    std::size_t order = 1;
    for (const OrbitReport& o : orbits) order = std::lcm(order, o.length);
    checks.add("rowmotion has order m+2n-1", order == static_cast<std::size_t>(m + 2 * n - 1),
               "order " + std::to_string(order));
}

// verify-delta1 -----------------------------------------------------------

CoverageOptions coverage(const Command& cmd) { return {enumeration(cmd), cmd.budget, 1}; }

void run_verify_delta1(const Command& cmd, RunResult& r) {
    const Target t = resolve(cmd.target);
    describe_poset(r, t.description, t.poset);
    Checks checks{r.checks};
    const OrbitCoverage cover = cover_orbits(t.poset, coverage(cmd));
    r.orbits = orbit_rows(cover.orbits);
    HomomesyReport avg = check_mesic(cover.orbits, antichain_cardinality(), delta1_expected_average(t.poset));
    std::string name = "every orbit averages #P/(d+1) antichain elements";
    if (cover.partial) name += " (sampled orbits only)";
    checks.average(name, avg);
}

// conjectures -------------------------------------------------------------

void run_conjectures(const Command& cmd, RunResult& r) {
    const Target t = resolve(cmd.target);
    if (!t.layer) throw std::invalid_argument("conjectures need a root layer: a catalog name or layer(TYPE,i)");
    const RootLayer& lay = *t.layer;
    describe_poset(r, t.description, t.poset);
    Checks checks{r.checks};

    bool involution = true;
    for (std::size_t p = 0; p < lay.star.size(); ++p) involution = involution && lay.star[lay.star[p]] == p;
    checks.add("star map is an involution of the layer", involution);

    const OrbitCoverage cover = cover_orbits(t.poset, coverage(cmd));
    r.orbits = orbit_rows(cover.orbits);
    const std::string scope = cover.partial ? " (sampled orbits only)" : "";
    const ConjectureReport ideals = check_conjecture_ideals(cover.orbits, lay.star);
    const ConjectureReport antichains = check_conjecture_antichains(cover.orbits, lay.star);

    auto record = [&](const std::string& name, const ConjectureReport& rep) {
        checks.add(name + scope, rep.holds(),
                   std::to_string(rep.orbits_checked) + " orbits, " + std::to_string(rep.ideals_covered) +
                       " ideals, " + std::to_string(rep.witnesses.size()) + " counterexamples");
        for (const ConjectureWitness& w : rep.witnesses)
            r.witnesses.push_back({name, w.orbit, w.seed.to_bits(t.poset.size()), w.orbit_length,
                                   t.poset.label(w.p), t.poset.label(w.p_star), w.lhs, w.rhs});
    };
    record("M_O(p) + M_O(p*) = |O|", ideals);
    record("N_O(p) = N_O(p*)", antichains);

    // The same conditions as homomesy statements, evaluated independently.
    bool one_mesic = true, zero_mesic = true;
    for (std::size_t p = 0; p < t.poset.size(); ++p) {
        one_mesic = one_mesic && check_mesic(cover.orbits, ideal_indicator_sum(t.poset, p, lay.star[p]), Rational(1)).passed();
        zero_mesic = zero_mesic &&
                     check_mesic(cover.orbits, antichain_indicator_difference(t.poset, p, lay.star[p]), Rational(0)).passed();
    }
    checks.add("χ_p + χ_p* is 1-mesic for every p, consistent with the occurrence check",
               one_mesic == ideals.holds() && one_mesic);
    checks.add("χ'_p - χ'_p* is 0-mesic for every p, consistent with the occurrence check",
               zero_mesic == antichains.holds() && zero_mesic);
}

// encode ------------------------------------------------------------------

void run_encode(const Command& cmd, RunResult& r) {
    require_positive(cmd.m, "m");
    require_positive(cmd.n, "n");
    if (cmd.ideal_bits.empty() == cmd.word.empty())
        throw std::invalid_argument("encode needs exactly one of an ideal bit string or --word");
    Checks checks{r.checks};
    if (cmd.target == "grid") {
        const GridPoset grid(cmd.m, cmd.n);
        describe_poset(r, "prod(chain(" + std::to_string(cmd.m) + "),chain(" + std::to_string(cmd.n) + "))", grid.poset());
        const IdealSet ideal = cmd.word.empty() ? IdealSet(grid.poset(), parse_bits(grid.poset(), cmd.ideal_bits))
                                                : decode_grid(grid, BinaryWord(cmd.word));
        const BinaryWord w = encode_grid(grid, ideal);
        r.rows.push_back({{"ideal", ideal.members().to_bits(grid.poset().size())},
                          {"word", w.str()},
                          {"size", std::to_string(count_10(w))}});
        checks.add("decoding the word returns the ideal", decode_grid(grid, w) == ideal);
    } else if (cmd.target == "k") {
        const KProduct k(cmd.m, cmd.n);
        describe_poset(r, "prod(chain(" + std::to_string(cmd.m) + "),K(" + std::to_string(cmd.n - 1) + "))", k.poset());
        IdealSet ideal = IdealSet::empty(k.poset());
        if (!cmd.word.empty()) {
            ideal = cmd.word.find('*') == std::string::npos ? decode_k_full_rank(k, BinaryWord(cmd.word))
                                                              : decode_k_starred(k, StarredWord(cmd.word, cmd.n));
        } else {
            ideal = IdealSet(k.poset(), parse_bits(k.poset(), cmd.ideal_bits));
        }
        const std::string bits = ideal.members().to_bits(k.poset().size());
        if (k.is_full_rank(ideal)) {
            const BinaryWord w = encode_k_full_rank(k, ideal);
            r.rows.push_back({{"ideal", bits}, {"word", w.str()}, {"epsilon", std::to_string(epsilon_n(w, cmd.n))}});
            checks.add("decoding the word returns the ideal", decode_k_full_rank(k, w) == ideal);
        } else {
            const StarredWord w = encode_k_starred(k, ideal);
            r.rows.push_back({{"ideal", bits}, {"word", w.str()}, {"class", "I_n representative"}});
            checks.add("decoding the word returns the I_n representative", decode_k_starred(k, w) == k.canonical(ideal));
        }
    } else {
        throw std::invalid_argument("encode target must be 'grid' or 'k'");
    }
}

// step-word ---------------------------------------------------------------

void run_step_word(const Command& cmd, RunResult& r) {
    r.poset = "word " + cmd.word;
    const auto stars = std::count(cmd.word.begin(), cmd.word.end(), '*');
    if (stars == 0) {
        BinaryWord w(cmd.word);
        r.n_elements = w.zeros() * w.ones();
        r.max_rank = static_cast<int>(w.size()) - 1;
        for (std::size_t i = 0; i <= cmd.steps; ++i) {
            r.rows.push_back({{"step", std::to_string(i)}, {"word", w.str()}, {"size", std::to_string(count_10(w))}});
            w = psi(w);
        }
        return;
    }
    const auto ones = std::count(cmd.word.begin(), cmd.word.end(), '1');
    if (stars != 1 || ones % 2 == 0) throw std::invalid_argument("a starred word has one '*' and an odd number of ones");
    const int n = static_cast<int>(ones + 1) / 2;
    StarredWord w(cmd.word, n);
    r.n_elements = static_cast<std::size_t>(2 * w.m() * n);
    r.max_rank = w.m() + 2 * n - 2;
    Checks checks{r.checks};
    bool agree = true;
    for (std::size_t i = 0; i <= cmd.steps; ++i) {
        r.rows.push_back({{"step", std::to_string(i)}, {"word", w.str()}, {"size", std::to_string(count_10(w.str()))}});
        agree = agree && psi_bar_by_patterns(w) == psi_bar(w);
        w = psi_bar(w);
    }
    checks.add("ψ̄ agrees with its 1-* pattern form", agree);
}

// catalog -----------------------------------------------------------------

void run_catalog(const Command& cmd, RunResult& r) {
    r.poset = "catalog";
    for (const FamilyDescriptor& f : families())
        r.rows.push_back({{"kind", "family"}, {"name", f.name}, {"realization", f.parameters},
                          {"expression", ""}, {"elements", ""}, {"max_rank", ""}, {"ideals", ""}});
    for (const CatalogEntry& e : catalog()) {
        const RootLayer lay = layer(e.type, e.pivot);
        r.rows.push_back({{"kind", "exceptional"},
                          {"name", e.name},
                          {"realization", to_string(e.layer_expr())},
                          {"expression", e.expr ? to_string(*e.expr) : ""},
                          {"elements", std::to_string(lay.poset.size())},
                          {"max_rank", std::to_string(lay.poset.max_rank())},
                          {"ideals", std::to_string(count_ideals(lay.poset, cmd.cap))}});
    }
    for (const ClassicalLayer& c : classical_layers(cmd.max_elements)) {
        std::string members;
        for (const std::string& s : c.members) members += (members.empty() ? "" : " = ") + s;
        r.rows.push_back({{"kind", "classical"},
                          {"name", members.empty() ? "unidentified" : members},
                          {"realization", to_string(PosetExpr::layer(c.type, c.pivot))},
                          {"expression", ""},
                          {"elements", std::to_string(c.elements)},
                          {"max_rank", std::to_string(c.max_rank)},
                          {"ideals", ""}});
    }
    Checks checks{r.checks};
    std::size_t outside = 0, with_expr = 0;
    for (const CatalogEntry& e : catalog())
        if (e.expr) {
            ++with_expr;
            outside += identify_family_members(build(*e.expr)).empty();
        }
    checks.add("exceptional entries are not family members", outside == with_expr);
}

// JSON --------------------------------------------------------------------

json to_json(const RunResult& r) {
    json j;
    j["command"] = r.command;
    j["poset"] = r.poset;
    j["n_elements"] = r.n_elements;
    j["max_rank"] = r.max_rank;
    j["orbits"] = json::array();
    for (const OrbitRow& o : r.orbits)
        j["orbits"].push_back({{"orbit_id", o.id},
                               {"length", o.length},
                               {"avg_size", to_string(o.avg_size)},
                               {"sizes", o.sizes},
                               {"seed", o.seed}});
    j["checks"] = json::array();
    for (const CheckResult& c : r.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["witnesses"] = json::array();
    for (const WitnessRow& w : r.witnesses)
        j["witnesses"].push_back({{"check", w.check},
                                  {"orbit_id", w.orbit_id},
                                  {"seed", w.seed},
                                  {"orbit_length", w.orbit_length},
                                  {"p", w.p},
                                  {"p_star", w.p_star},
                                  {"lhs", w.lhs},
                                  {"rhs", w.rhs}});
    j["rows"] = json::array();
    for (const Row& row : r.rows) {
        json obj = json::object();
        for (const auto& [key, value] : row) obj[key] = value;
        j["rows"].push_back(obj);
    }
    j["elapsed_ms"] = r.elapsed_ms ? json(*r.elapsed_ms) : json(nullptr);
    return j;
}

// Display width: count code points, not bytes.
std::size_t width_of(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string emit_csv(const RunResult& r) {
    std::ostringstream os;
    if (r.orbits.empty() && !r.rows.empty()) {
        for (std::size_t k = 0; k < r.rows.front().size(); ++k) os << (k ? "," : "") << csv_field(r.rows.front()[k].first);
        os << '\n';
        for (const Row& row : r.rows) {
            for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_field(row[k].second);
            os << '\n';
        }
        return os.str();
    }
    os << "orbit_id,length,avg_size,sizes\n";
    for (const OrbitRow& o : r.orbits) os << o.id << ',' << o.length << ',' << to_string(o.avg_size) << ',' << join(o.sizes, " ") << '\n';
    return os.str();
}

void write_table(std::ostream& os, const std::vector<std::vector<std::string>>& table) {
    std::vector<std::size_t> width(table.front().size(), 0);
    for (const auto& line : table)
        for (std::size_t k = 0; k < line.size() && k < width.size(); ++k) width[k] = std::max(width[k], width_of(line[k]));
    for (const auto& line : table) {
        std::string out = " ";
        for (std::size_t k = 0; k < line.size() && k < width.size(); ++k)
            out += " " + line[k] + std::string(width[k] - width_of(line[k]) + 1, ' ');
        out.erase(out.find_last_not_of(' ') + 1);
        os << out << '\n';
    }
}

std::string emit_table(const RunResult& r) {
    std::ostringstream os;
    os << "command: " << r.command << '\n';
    os << "poset:   " << r.poset << " (" << r.n_elements << " elements, max rank " << r.max_rank << ")\n";
    if (!r.orbits.empty()) {
        os << '\n' << r.orbits.size() << " orbits\n";
        std::vector<std::vector<std::string>> table = {{"id", "length", "avg", "sizes"}};
        for (const OrbitRow& o : r.orbits) {
            std::string sizes = join(o.sizes, " ");
            if (sizes.size() > 60) sizes = sizes.substr(0, 57) + "...";
            table.push_back({std::to_string(o.id), std::to_string(o.length), to_string(o.avg_size), sizes});
        }
        write_table(os, table);
    }
    if (!r.rows.empty()) {
        os << '\n';
        std::vector<std::vector<std::string>> table(1);
        for (const auto& cell : r.rows.front()) table[0].push_back(cell.first);
        for (const Row& row : r.rows) {
            table.emplace_back();
            for (const auto& cell : row) table.back().push_back(cell.second);
        }
        write_table(os, table);
    }
    if (!r.checks.empty()) {
        os << '\n';
        for (const CheckResult& c : r.checks)
            os << (c.passed ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
    }
    if (!r.witnesses.empty()) {
        os << '\n' << r.witnesses.size() << " counterexamples\n";
        for (const WitnessRow& w : r.witnesses)
            os << "  " << w.check << ": orbit " << w.orbit_id << " (seed " << w.seed << ", length " << w.orbit_length
               << "), p=" << w.p << ", p*=" << w.p_star << ": " << w.lhs << " vs " << w.rhs << '\n';
    }
    if (r.elapsed_ms) os << "\nelapsed: " << *r.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace

Format parse_format(const std::string& text) {
    if (text == "table") return Format::Table;
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + text + "' (expected table, json or csv)");
}

bool RunResult::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }) && witnesses.empty();
}

std::vector<OrbitRow> orbit_rows(const std::vector<OrbitReport>& orbits) {
    std::vector<OrbitRow> out;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        const OrbitReport& o = orbits[k];
        out.push_back({k, o.length, o.average_size, o.antichain_sizes,
                       o.ideals.front().members().to_bits(o.ideals.front().poset().size())});
    }
    return out;
}

RunResult run(const Command& cmd) {
    const auto start = std::chrono::steady_clock::now();
    RunResult r;
    r.command = cmd.name;
    if (cmd.name == "orbits")
        run_orbits(cmd, r);
    else if (cmd.name == "verify-grid")
        run_verify_grid(cmd, r);
    else if (cmd.name == "verify-k")
        run_verify_k(cmd, r);
    else if (cmd.name == "verify-delta1")
        run_verify_delta1(cmd, r);
    else if (cmd.name == "conjectures")
        run_conjectures(cmd, r);
    else if (cmd.name == "encode")
        run_encode(cmd, r);
    else if (cmd.name == "step-word")
        run_step_word(cmd, r);
    else if (cmd.name == "catalog")
        run_catalog(cmd, r);
    else
        throw std::invalid_argument("unknown command '" + cmd.name + "'");
    if (cmd.timing)
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string emit(const RunResult& result, Format format) {
    switch (format) {
        case Format::Json: return to_json(result).dump(2) + "\n";
        case Format::Csv: return emit_csv(result);
        case Format::Table: return emit_table(result);
    }
    return {};
}

RunResult parse_json(const std::string& text) {
    const json j = json::parse(text);
    RunResult r;
    r.command = j.at("command").get<std::string>();
    r.poset = j.at("poset").get<std::string>();
    r.n_elements = j.at("n_elements").get<std::size_t>();
    r.max_rank = j.at("max_rank").get<int>();
    for (const json& o : j.at("orbits"))
        r.orbits.push_back({o.at("orbit_id").get<std::size_t>(), o.at("length").get<std::size_t>(),
                            parse_rational(o.at("avg_size").get<std::string>()),
                            o.at("sizes").get<std::vector<std::size_t>>(), o.at("seed").get<std::string>()});
    for (const json& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
    for (const json& w : j.at("witnesses"))
        r.witnesses.push_back({w.at("check").get<std::string>(), w.at("orbit_id").get<std::size_t>(),
                               w.at("seed").get<std::string>(), w.at("orbit_length").get<std::size_t>(),
                               w.at("p").get<std::string>(), w.at("p_star").get<std::string>(),
                               w.at("lhs").get<std::size_t>(), w.at("rhs").get<std::size_t>()});
    for (const json& row : j.at("rows")) {
        Row out;
        for (const auto& [key, value] : row.items()) out.emplace_back(key, value.get<std::string>());
        r.rows.push_back(std::move(out));
    }
    if (!j.at("elapsed_ms").is_null()) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

}  // namespace rowmotion::cli
