#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ffgenus/cli.hpp"
#include "gen.hpp"

using namespace ffgenus;
using gen::P;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_job(const json& in, bool verify = false, OutputFormat fmt = OutputFormat::json,
               std::optional<std::uint64_t> seed = std::nullopt) {
    JobSpec job;
    job.input_text = in.dump();
    job.verify = verify;
    job.format = fmt;
    job.seed = seed;
    std::ostringstream out, err;
    int code = run(job, out, err);
    return {code, out.str(), err.str()};
}

json job(GroundField F, const std::string& cmd, const Descriptor& d) {
    return json{{"field", field_to_json(F)}, {"command", cmd}, {"descriptor", descriptor_to_json(d)}};
}

WittRF wv(std::uint32_t p, std::vector<RatFn> c) { return WittRF(p, std::move(c)); }

std::vector<std::pair<GroundField, Descriptor>> sample_descriptors() {
    auto F2 = GroundField::make(2, 1), F3 = GroundField::make(3, 1), F4 = GroundField::make(2, 2),
         F5 = GroundField::make(5, 1);
    auto T2 = P(F2, {0, 1}), T3 = P(F3, {0, 1});
    auto P1 = P(F2, {1, 1, 1});
    RatFn one2 = RatFn::constant(F2.one()), one3 = RatFn::constant(F3.one());
    std::vector<std::pair<GroundField, Descriptor>> out;
    out.emplace_back(F3, kummer_normalize(2, T3 * P(F3, {1, 1})));
    out.emplace_back(F5, kummer_normalize(4, P(F5, {2, 0, 1}) * P(F5, {0, 1}).pow(3)));
    out.emplace_back(F3, ASWExt{1, 1, wv(3, {one3 - RatFn(T3)}), {}});
    out.emplace_back(F2, ASWExt{1, 2, wv(2, {one2 / RatFn(T2), RatFn(T2 * T2) + one2 / RatFn(P1)}), {}});
    out.emplace_back(F3, ASWExt{1, 1, std::nullopt, {wv(3, {one3 / RatFn(T3)}), wv(3, {RatFn(T3)})}});
    out.emplace_back(F4, ASWExt{2, 1, wv(2, {RatFn::constant(F4.one()) / RatFn(P(F4, {0, 1}))}), {}});
    out.emplace_back(F2, CyclotomicSubfield{P1, {{Fraction::make(1, 3)}}});
    out.emplace_back(F2, CompositeExt{ASWExt{1, 1, wv(2, {one2 / RatFn(T2) + RatFn(T2)}), {}},
                                      {CyclotomicSubfield{P1, {{Fraction::make(1, 3)}}}}});
    out.emplace_back(F2, ConstantExt{F2, 3});
    return out;
}

}  // namespace

TEST_CASE("descriptor JSON round trip") {
    for (const auto& [F, d] : sample_descriptors()) {
        auto j = descriptor_to_json(d);
        CAPTURE(j.dump());
        CHECK(descriptor_from_json(j, F) == d);
        // text form of the JSON is stable too
        CHECK(descriptor_to_json(descriptor_from_json(json::parse(j.dump()), F)).dump() == j.dump());
    }

    gen::Rng rng(2024);
    for (auto p : {2u, 3u}) {
        auto F = GroundField::make(p, 1);
        for (int it = 0; it < 40; ++it) {
            std::vector<RatFn> c;
            unsigned v = 1 + static_cast<unsigned>(rng.below(2));
            for (unsigned i = 0; i < v; ++i) c.push_back(rng.ratfn(F, 4, 4));
            Descriptor d = ASWExt{1, v, wv(p, c), {}};
            CHECK(descriptor_from_json(descriptor_to_json(d), F) == d);
        }
    }
    auto F5 = GroundField::make(5, 1);
    for (int it = 0; it < 40; ++it) {
        auto D = rng.monic(F5, 1 + static_cast<int>(rng.below(4)));
        std::optional<Descriptor> d;
        try {
            d = kummer_normalize(2, D);
        } catch (const trivial_extension&) {
            continue;
        }
        CHECK(descriptor_from_json(descriptor_to_json(*d), F5) == *d);
    }
}

TEST_CASE("report descriptors parse back") {
    for (const auto& [F, d] : sample_descriptors()) {
        auto r = run_job(job(F, "verify", d), true);
        CAPTURE(r.err);
        CHECK(r.code == 0);
        auto out = json::parse(r.out);
        CHECK(descriptor_from_json(out["descriptor"], field_from_json(out["field"])) == d);
        for (const auto& v : out["verdicts"]) CHECK(v["pass"].get<bool>());
    }
}

TEST_CASE("malformed input is a schema error") {
    auto F3 = GroundField::make(3, 1);
    json bad_coef{{"field", {{"p", 3}}},
                  {"command", "genus"},
                  {"descriptor", {{"kind", "asw"}, {"xi", {{{"num", {1, 7}}, {"den", {1}}}}}}}};
    CHECK(run_job(bad_coef).code == exit_code::schema);
    CHECK(run_job(json{{"field", {{"p", 4}}}, {"command", "genus"}}).code == exit_code::schema);
    CHECK(run_job(json{{"field", {{"p", 3}}}, {"command", "nope"}}).code == exit_code::schema);
    json no_kind{{"field", field_to_json(F3)}, {"descriptor", {{"t", 2}}}};
    CHECK(run_job(no_kind).code == exit_code::schema);
    json trivial{{"field", field_to_json(F3)}, {"descriptor", {{"kind", "kummer"}, {"t", 2}, {"D", {0, 0, 1}}}}};
    CHECK(run_job(trivial).code == exit_code::schema);
    JobSpec j;
    j.input_text = "{not json";
    std::ostringstream o, e;
    CHECK(run(j, o, e) == exit_code::schema);
}

TEST_CASE("unit group cap") {
    std::vector<std::uint32_t> N(31, 0);
    N[0] = 1;
    N[30] = 1;
    json in{{"field", {{"p", 5}}}, {"command", "unitgroup"}, {"N", N}};
    auto r = run_job(in);
    CHECK(r.code == exit_code::cap);
    CHECK(r.out.empty());

    json small{{"field", {{"p", 3}}}, {"command", "unitgroup"}, {"N", {1, 0, 1}}};
    auto s = run_job(small, true);
    CHECK(s.code == 0);
    CHECK(json::parse(s.out)["unitgroup"]["size"] == 8);
}

TEST_CASE("Witt length cap") {
    auto F2 = GroundField::make(2, 1);
    auto T = P(F2, {0, 1});
    RatFn one = RatFn::constant(F2.one());
    JobSpec j;
    j.input_text = job(F2, "ramify", ASWExt{1, 2, wv(2, {one / RatFn(T), RatFn(T)}), {}}).dump();
    j.cap_wittlen = 1;
    std::ostringstream o, e;
    CHECK(run(j, o, e) == exit_code::cap);
    // the cap does not leak into the next job
    j.cap_wittlen.reset();
    CHECK(run(j, o, e) == 0);
}

TEST_CASE("worked example through the front end") {
    for (auto p : {2u, 3u, 5u}) {
        auto F = GroundField::make(p, 1);
        RatFn one = RatFn::constant(F.one());
        auto r = run_job(job(F, "genus", ASWExt{1, 1, wv(p, {one - RatFn(P(F, {0, 1}))}), {}}), true);
        CHECK(r.code == 0);
        auto out = json::parse(r.out);
        CHECK(out["conductor"]["m"] == p);
        CHECK(out["conductor"]["s"] == 1);
        CHECK(out["genus"]["degree_over_K"] == 1);
        auto t = run_job(job(F, "genus", ASWExt{1, 1, wv(p, {one - RatFn(P(F, {0, 1}))}), {}}), false,
                         OutputFormat::text);
        CHECK(t.out.find("[K_ge:K] = 1") != std::string::npos);
        CHECK(t.out.find("m = " + std::to_string(p)) != std::string::npos);
    }
}

TEST_CASE("output is deterministic") {
    for (const auto& [F, d] : sample_descriptors()) {
        auto a = run_job(job(F, "verify", d), true);
        auto b = run_job(job(F, "verify", d), true);
        auto c = run_job(job(F, "verify", d), true, OutputFormat::json, 987654321);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
}

TEST_CASE("counterexample bundle") {
    OracleVerdict good{"a", "1", "1", true, "x"}, bad{"b", "1", "2", false, "y"};
    json in{{"field", {{"p", 2}}}};
    auto b = counterexample_bundle(in, json{{"r", 1}}, {good, bad});
    CHECK(b["job"] == in);
    REQUIRE(b["failed_verdicts"].size() == 1);
    CHECK(b["failed_verdicts"][0]["expected"] == "1");
    CHECK(b["failed_verdicts"][0]["observed"] == "2");
}

TEST_CASE("ramification oracle rejects a corrupted report") {
    for (const auto& [F, d] : sample_descriptors()) {
        auto r = ramify(d);
        CHECK(oracle_ramification(d, r).pass);
        auto bad = r;
        bad.infinity.e += 1;
        CHECK_FALSE(oracle_ramification(d, bad).pass);
    }
}
