#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rowmotion/rational.hpp"
#include "rowmotion/rowmotion.hpp"

namespace rowmotion::cli {

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& text);

/// One invocation. Which fields matter depends on `name`:
///   orbits         target [seed_ideal]
///   verify-grid    m n [word]
///   verify-k       m n
///   verify-delta1  target [budget]
///   conjectures    target [budget]
///   encode         target ("grid" or "k"), m n, and ideal_bits or word
///   step-word      word steps
///   catalog        max_elements
/// A target is a catalog name ("[2]×H_4") or a poset expression.
struct Command {
    std::string name;
    std::string target;
    int m = 0;
    int n = 0;
    std::string word;
    std::string ideal_bits;
    std::optional<std::string> seed_ideal;
    std::size_t steps = 1;
    std::size_t cap = kDefaultCap;
    std::size_t budget = 0;  // sampled orbit seeds when over the cap
    unsigned threads = 1;
    bool timing = true;
    std::size_t max_elements = 30;
};

struct OrbitRow {
    std::size_t id = 0;
    std::size_t length = 0;
    Rational avg_size;
    std::vector<std::size_t> sizes;
    std::string seed;  // first ideal as a bit string over element indices

    friend bool operator==(const OrbitRow&, const OrbitRow&) = default;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct WitnessRow {
    std::string check;
    std::size_t orbit_id = 0;
    std::string seed;
    std::size_t orbit_length = 0;
    std::string p;
    std::string p_star;
    std::size_t lhs = 0;
    std::size_t rhs = 0;

    friend bool operator==(const WitnessRow&, const WitnessRow&) = default;
};

/// Ordered (column, value) pairs: word tables, catalog listings.
using Row = std::vector<std::pair<std::string, std::string>>;

struct RunResult {
    std::string command;
    std::string poset;
    std::size_t n_elements = 0;
    int max_rank = 0;
    std::vector<OrbitRow> orbits;
    std::vector<CheckResult> checks;
    std::vector<WitnessRow> witnesses;
    std::vector<Row> rows;
    std::optional<double> elapsed_ms;

    bool ok() const;
    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Throws std::invalid_argument on bad parameters, ParseError on bad
/// expressions and CapExceeded when a poset is too large for --cap.
RunResult run(const Command& cmd);

std::string emit(const RunResult& result, Format format);
RunResult parse_json(const std::string& text);

/// Seeds orbit rows from complete orbits.
std::vector<OrbitRow> orbit_rows(const std::vector<OrbitReport>& orbits);

}  // namespace rowmotion::cli
