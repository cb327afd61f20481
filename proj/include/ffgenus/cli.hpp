#ifndef FFGENUS_CLI_HPP
#define FFGENUS_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "ffgenus/oracle.hpp"
#include "ffgenus/ramify.hpp"
#include "ffgenus/serialize.hpp"

namespace ffgenus {

enum class OutputFormat { text, json };

/// One batch job. input_text is the JSON document
///   {"field": {"p": p, "l": l}, "command": "genus" | "ramify" | "conductor" | "unitgroup" | "verify",
///    "descriptor": {...}}            (unitgroup takes "N": poly instead of "descriptor")
struct JobSpec {
    std::string input_text;
    bool verify = false;
    CapConfig caps;
    std::optional<unsigned> cap_wittlen;
    OutputFormat format = OutputFormat::json;
    std::optional<std::uint64_t> seed;
    std::string bundle_path = "ffgenus-counterexample.json";
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int schema = 1;
inline constexpr int cap = 2;
inline constexpr int oracle = 3;
inline constexpr int consistency = 4;
}  // namespace exit_code

/// Counterexample bundle: the job as given, the full report (which carries the
/// fast-path results and every verdict), and the failing verdicts with both traces.
json counterexample_bundle(const json& job, const json& report, const std::vector<OracleVerdict>& verdicts);

/// Runs the job, writing the report to out and diagnostics to err. Under verify,
/// a failing verdict writes a counterexample bundle to bundle_path.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace ffgenus

#endif
