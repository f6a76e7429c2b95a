#include "rowmotion/expr.hpp"

#include <cctype>
#include <limits>

namespace rowmotion {

void validate(const RootType& t) {
    const int l = t.rank;
    bool ok = false;
    switch (t.family) {
        case Family::A: ok = l >= 1; break;
        case Family::B: ok = l >= 2; break;
        case Family::C: ok = l >= 2; break;
        case Family::D: ok = l >= 4; break;
        case Family::E: ok = l >= 6 && l <= 8; break;
        case Family::F: ok = l == 4; break;
        case Family::G: ok = l == 2; break;
    }
    if (!ok) throw std::invalid_argument("no simple Lie algebra of type " + to_string(t));
}

std::string to_string(const RootType& t) {
    static constexpr char kNames[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    return std::string(1, kNames[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

std::string to_string(const PosetExpr& e) {
    switch (e.kind) {
        case PosetExpr::Kind::Chain: return "chain(" + std::to_string(e.param) + ")";
        case PosetExpr::Kind::K: return "K(" + std::to_string(e.param) + ")";
        case PosetExpr::Kind::H: return "H(" + std::to_string(e.param) + ")";
        case PosetExpr::Kind::J: return "J(" + to_string(e.children[0]) + ")";
        case PosetExpr::Kind::Prod:
            return "prod(" + to_string(e.children[0]) + "," + to_string(e.children[1]) + ")";
        case PosetExpr::Kind::OSum:
            return "osum(" + to_string(e.children[0]) + "," + to_string(e.children[1]) + ")";
        case PosetExpr::Kind::DUnion:
            return "dunion(" + to_string(e.children[0]) + "," + to_string(e.children[1]) + ")";
        case PosetExpr::Kind::Layer:
            return "layer(" + to_string(e.type) + "," + std::to_string(e.param) + ")";
    }
    return {};
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::invalid_argument("at byte " + std::to_string(offset) + ": " + message), offset_(offset) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    PosetExpr parse() {
        PosetExpr e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
        throw ParseError(message, at);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string w(text_.substr(start, pos_ - start));
        for (auto& ch : w) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        return w;
    }

    int positive_int() {
        skip_space();
        const std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) fail_at("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        if (value < 1) fail_at("parameters must be at least 1", start);
        return static_cast<int>(value);
    }

    RootType root_type() {
        skip_space();
        const std::size_t start = pos_;
        const std::string w = word();
        if (w.size() < 2) fail_at("expected a root system type such as A3 or E7", start);
        RootType t;
        switch (w[0]) {
            case 'a': t.family = Family::A; break;
            case 'b': t.family = Family::B; break;
            case 'c': t.family = Family::C; break;
            case 'd': t.family = Family::D; break;
            case 'e': t.family = Family::E; break;
            case 'f': t.family = Family::F; break;
            case 'g': t.family = Family::G; break;
            default: fail_at("unknown root system type '" + w + "'", start);
        }
        int rank = 0;
        for (std::size_t k = 1; k < w.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(w[k])) || rank > 1000)
                fail_at("unknown root system type '" + w + "'", start);
            rank = rank * 10 + (w[k] - '0');
        }
        t.rank = rank;
        try {
            validate(t);
        } catch (const std::invalid_argument&) {
            fail_at("unknown root system type '" + w + "'", start);
        }
        return t;
    }

    PosetExpr expr() {
        skip_space();
        const std::size_t start = pos_;
        const std::string name = word();
        if (name.empty()) fail("expected a constructor name");
        expect('(');
        PosetExpr e;
        if (name == "chain" || name == "k" || name == "h") {
            e.kind = name == "chain" ? PosetExpr::Kind::Chain
                     : name == "k"   ? PosetExpr::Kind::K
                                     : PosetExpr::Kind::H;
            e.param = positive_int();
        } else if (name == "j") {
            e.kind = PosetExpr::Kind::J;
            e.param = 0;
            e.children.push_back(expr());
        } else if (name == "prod" || name == "osum" || name == "dunion") {
            e.kind = name == "prod"   ? PosetExpr::Kind::Prod
                     : name == "osum" ? PosetExpr::Kind::OSum
                                      : PosetExpr::Kind::DUnion;
            e.param = 0;
            e.children.push_back(expr());
            expect(',');
            e.children.push_back(expr());
        } else if (name == "layer") {
            e.kind = PosetExpr::Kind::Layer;
            e.type = root_type();
            expect(',');
            skip_space();
            const std::size_t at = pos_;
            e.param = positive_int();
            if (e.param > e.type.rank)
                fail_at("layer index " + std::to_string(e.param) + " exceeds the rank of " +
                            to_string(e.type),
                        at);
        } else {
            fail_at("unknown constructor '" + name + "'", start);
        }
        expect(')');
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PosetExpr parse_poset_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace rowmotion
