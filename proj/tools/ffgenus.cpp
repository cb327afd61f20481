#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ffgenus/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Genus fields, ramification and conductors of constants over F_q(T)"};
    ffgenus::JobSpec job;
    std::string input = "-", format = "json";
    std::uint64_t seed = 0;
    unsigned wittlen = 0;
    app.add_option("input", input, "job file (JSON), - for stdin");
    app.add_flag("--verify", job.verify, "run the brute-force oracles on the result");
    app.add_option("--cap-unitgroup", job.caps.unit_group, "largest unit group to enumerate")->check(CLI::PositiveNumber);
    app.add_option("--cap-classes", job.caps.witt_classes, "largest Witt class group to enumerate")
        ->check(CLI::PositiveNumber);
    auto* wl = app.add_option("--cap-wittlen", wittlen, "longest Witt vector accepted")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    auto* sd = app.add_option("--seed", seed, "seed for polynomial factorization");
    app.add_option("--bundle", job.bundle_path, "where a failing --verify writes its counterexample");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : ffgenus::exit_code::schema;
    }
    if (*wl) job.cap_wittlen = wittlen;
    if (*sd) job.seed = seed;
    job.format = format == "text" ? ffgenus::OutputFormat::text : ffgenus::OutputFormat::json;

    std::stringstream buf;
    if (input == "-") buf << std::cin.rdbuf();
    else {
        std::ifstream f(input);
        if (!f) {
            std::cerr << "ffgenus: cannot read " << input << "\n";
            return ffgenus::exit_code::schema;
        }
        buf << f.rdbuf();
    }
    job.input_text = buf.str();
    return ffgenus::run(job, std::cout, std::cerr);
}
