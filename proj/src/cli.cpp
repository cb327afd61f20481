#include "ffgenus/cli.hpp"

#include <fstream>

#include "ffgenus/errors.hpp"
#include "ffgenus/genus.hpp"
#include "ffgenus/oracle.hpp"
#include "ffgenus/serialize.hpp"

namespace ffgenus {

namespace {

// Process-wide knobs are scoped to one job.
struct GlobalGuard {
    WittLimits saved = witt_limits();
    ~GlobalGuard() {
        set_witt_limits(saved);
        set_default_factor_seed(0);
    }
};

std::string command_of(const json& in) {
    if (!in.contains("command")) return "genus";
    if (!in["command"].is_string()) throw schema_error("command must be a string");
    auto c = in["command"].get<std::string>();
    for (const char* known : {"genus", "ramify", "conductor", "unitgroup", "verify"})
        if (c == known) return c;
    throw schema_error("unknown command \"" + c + "\"");
}

std::uint64_t phi(const UnitGroup& G) {
    const std::uint64_t q = G.modulus().field().q();
    std::uint64_t n = 1;
    for (const auto& [P, a] : G.factorization()) {
        std::uint64_t qd = 1;
        for (unsigned i = 0; i < P.degree().value(); ++i) qd *= q;
        n *= qd - 1;
        for (unsigned i = 1; i < a; ++i) n *= qd;
    }
    return n;
}

struct Outcome {
    json report = json::object();
    std::string text;
    std::vector<OracleVerdict> verdicts;
};

Outcome compute(const std::string& cmd, const json& in, GroundField F, bool verify, const CapConfig& caps) {
    Outcome o;
    o.report["field"] = field_to_json(F);
    o.report["command"] = cmd;
    if (cmd == "unitgroup") {
        if (!in.contains("N")) throw schema_error("unitgroup needs \"N\"");
        auto N = poly_from_json(in["N"], F);
        if (N.is_constant() || !N.is_monic()) throw schema_error("N must be monic and nonconstant");
        auto G = UnitGroup::make(N, caps.unit_group);
        o.report["unitgroup"] = to_json(*G);
        o.text = to_text(*G);
        if (verify) {
            std::uint64_t prod = 1;
            for (auto n : G->orders()) prod *= n;
            o.verdicts.push_back(OracleVerdict{"generator orders multiply to phi(N)", std::to_string(phi(*G)),
                                               std::to_string(prod), phi(*G) == prod, "N=" + N.to_string()});
        }
        return o;
    }
    if (!in.contains("descriptor")) throw schema_error("missing field \"descriptor\"");
    auto d = descriptor_from_json(in["descriptor"], F);
    o.report["descriptor"] = descriptor_to_json(d);
    const bool all = cmd == "verify";
    if (all || cmd == "ramify") {
        auto r = ramify(d, caps);
        o.report["ramification"] = to_json(r);
        o.text += to_text(r);
        if (verify) o.verdicts.push_back(oracle_ramification(d, r, caps));
    }
    if (all || cmd == "genus") {
        auto g = genus(d, caps);
        o.report["genus"] = to_json(g);
        o.text += to_text(g);
        if (verify) o.verdicts.push_back(oracle_genus_unramified(d, g, caps));
    }
    if (all || cmd == "genus" || cmd == "conductor") {
        auto c = conductor_of_constants(d, caps);
        o.report["conductor"] = to_json(c);
        o.text += to_text(c);
        if (verify) o.verdicts.push_back(oracle_conductor_minimality(d, c.m, conductor_search_bound(d), caps));
    }
    return o;
}

int execute(const JobSpec& job, std::ostream& out, std::ostream& err) {
    if (job.caps.unit_group == 0 || job.caps.witt_classes == 0) throw schema_error("caps must be positive");
    json in;
    try {
        in = json::parse(job.input_text);
    } catch (const json::exception& e) {
        throw schema_error(std::string("input is not JSON: ") + e.what());
    }
    if (!in.is_object()) throw schema_error("input must be a JSON object");
    if (!in.contains("field")) throw schema_error("missing field \"field\"");
    auto F = field_from_json(in["field"]);
    const auto cmd = command_of(in);
    const bool verify = job.verify || cmd == "verify";

    GlobalGuard guard;
    if (job.seed) set_default_factor_seed(*job.seed);
    if (job.cap_wittlen) {
        if (*job.cap_wittlen == 0) throw schema_error("caps must be positive");
        WittLimits lim;
        lim.max_length = *job.cap_wittlen;
        lim.max_pv = 1;
        for (unsigned i = 0; i < lim.max_length && lim.max_pv < (std::uint64_t{1} << 40); ++i) lim.max_pv *= F.p();
        set_witt_limits(lim);
    }

    auto o = compute(cmd, in, F, verify, job.caps);
    bool ok = true;
    if (verify) {
        json vs = json::array();
        for (const auto& v : o.verdicts) {
            vs.push_back(to_json(v));
            ok = ok && v.pass;
        }
        o.report["verdicts"] = std::move(vs);
    }
    if (job.format == OutputFormat::json) out << o.report.dump(2) << "\n";
    else {
        out << o.text;
        for (const auto& v : o.verdicts) out << to_text(v);
    }
    if (!ok) {
        std::ofstream f(job.bundle_path);
        f << counterexample_bundle(in, o.report, o.verdicts).dump(2) << "\n";
        err << "ffgenus: oracle verdict failed; counterexample written to " << job.bundle_path << "\n";
        return exit_code::oracle;
    }
    return exit_code::ok;
}

}  // namespace

json counterexample_bundle(const json& job, const json& report, const std::vector<OracleVerdict>& verdicts) {
    json failed = json::array();
    for (const auto& v : verdicts)
        if (!v.pass) failed.push_back(to_json(v));
    return json{{"job", job}, {"report", report}, {"failed_verdicts", std::move(failed)}};
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        return execute(job, out, err);
    } catch (const cap_exceeded& e) {
        err << "ffgenus: cap exceeded: " << e.what() << "\n";
        return exit_code::cap;
    } catch (const schema_error& e) {
        err << "ffgenus: schema error: " << e.what() << "\n";
        return exit_code::schema;
    } catch (const json::exception& e) {
        err << "ffgenus: schema error: " << e.what() << "\n";
        return exit_code::schema;
    } catch (const consistency_error& e) {
        err << "ffgenus: consistency failure: " << e.what() << "\n";
        return exit_code::consistency;
    } catch (const std::exception& e) {
        err << "ffgenus: internal error: " << e.what() << "\n";
        return exit_code::consistency;
    }
}

}  // namespace ffgenus
