// rowmotion: orbit dumps, theorem checks and codecs from the command line.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "rowmotion/cli.hpp"

namespace {

using rowmotion::cli::Command;

struct Shared {
    std::string format = "table";
    std::size_t cap = rowmotion::kDefaultCap;
    std::size_t budget = 0;
    bool no_timing = false;
    unsigned threads = 0;
};

void add_shared(CLI::App* sub, Shared& s) {
    sub->add_option("--format", s.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--cap", s.cap, "largest ideal count enumerated exhaustively")->check(CLI::PositiveNumber);
    sub->add_option("--budget", s.budget, "over the cap, check this many sampled orbits instead of failing");
    sub->add_flag("--no-timing", s.no_timing, "omit elapsed time (byte-identical output)");
    sub->add_option("--threads", s.threads, "worker threads (default: THREADS or 1)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rowmotion on finite graded posets: orbits, homomesy checks and word codecs"};
    app.require_subcommand(1);
    Shared shared;
    Command cmd;

    auto* orbits = app.add_subcommand("orbits", "list the rowmotion orbits of a poset");
    orbits->add_option("poset", cmd.target, "poset expression or catalog name")->required();
    orbits->add_option("--seed-ideal", cmd.seed_ideal, "only the orbit through this ideal (bit per element)");

    auto* grid = app.add_subcommand("verify-grid", "check the [m]x[n] results");
    grid->add_option("m", cmd.m)->required()->check(CLI::PositiveNumber);
    grid->add_option("n", cmd.n)->required()->check(CLI::PositiveNumber);
    grid->add_option("--word", cmd.word, "word for the ψ table (default 0^m 1^n)");

    auto* k = app.add_subcommand("verify-k", "check the [m]x K_{n-1} results");
    k->add_option("m", cmd.m)->required()->check(CLI::PositiveNumber);
    k->add_option("n", cmd.n)->required()->check(CLI::Range(2, 1 << 20));

    auto* delta1 = app.add_subcommand("verify-delta1", "check the #P/(d+1) orbit average");
    delta1->add_option("poset", cmd.target, "catalog name or poset expression")->required();

    auto* conj = app.add_subcommand("conjectures", "check M_O(p)+M_O(p*)=|O| and N_O(p)=N_O(p*) on a layer");
    conj->add_option("layer", cmd.target, "catalog name or layer(TYPE,i)")->required();

    auto* encode = app.add_subcommand("encode", "encode an ideal as a word, or decode with --word");
    encode->add_option("codec", cmd.target, "grid or k")->required()->check(CLI::IsMember({"grid", "k"}));
    encode->add_option("m", cmd.m)->required()->check(CLI::PositiveNumber);
    encode->add_option("n", cmd.n)->required()->check(CLI::PositiveNumber);
    encode->add_option("ideal", cmd.ideal_bits, "ideal as a bit per element");
    encode->add_option("--word", cmd.word, "word to decode instead");

    auto* step = app.add_subcommand("step-word", "apply ψ (or ψ̄ to a starred word) repeatedly");
    step->add_option("word", cmd.word)->required();
    step->add_option("--steps", cmd.steps, "number of steps")->check(CLI::NonNegativeNumber);

    auto* cat = app.add_subcommand("catalog", "list the Δ(1) families, exceptional entries and classical layers");
    cat->add_option("--max-elements", cmd.max_elements, "largest classical layer listed");

    for (CLI::App* sub : {orbits, grid, k, delta1, conj, encode, step, cat}) add_shared(sub, shared);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    cmd.name = app.get_subcommands().front()->get_name();
    cmd.cap = shared.cap;
    cmd.budget = shared.budget;
    cmd.timing = !shared.no_timing;
    cmd.threads = shared.threads;
    if (cmd.threads == 0) {
        const char* env = std::getenv("THREADS");
        cmd.threads = env ? static_cast<unsigned>(std::strtoul(env, nullptr, 10)) : 1;
    }

    try {
        const auto result = rowmotion::cli::run(cmd);
        std::cout << rowmotion::cli::emit(result, rowmotion::cli::parse_format(shared.format));
        return result.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
