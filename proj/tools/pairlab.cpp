// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/bench.hpp"
#include "pairlab/chain.hpp"
#include "pairlab/config.hpp"
#include "pairlab/ec_pairing.hpp"
#include "pairlab/example.hpp"
#include "pairlab/hec_pairing.hpp"
#include "pairlab/report.hpp"
#include "pairlab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace pairlab;

namespace
{
struct PairArgs
{
    std::string config;
    std::uint64_t m = 0;
    std::string alg;
    std::string left;
    std::string right;
    std::optional<std::string> chain;
    bool alternate_chain = false;
    std::uint64_t seed = 1;
    bool normalized = false;
    bool json = false;
};

struct ChainArgs
{
    std::uint64_t m = 0;
    std::string policy = "naf";
    bool json = false;
};

struct BenchArgs
{
    std::string alg = "ec-tate";
    std::size_t trials = 5;
    std::optional<std::string> div_weight;
    std::uint64_t seed = 1;
    bool json = false;
};

struct VerifyArgs
{
    std::vector<std::string> properties;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    bool json = false;
};

void emit(bool json, const nlohmann::json& j, const std::string& text)
{
    if (json)
        std::cout << j.dump() << '\n';
    else
        std::cout << text;
}

ChainPolicy chosen_policy(const PairArgs& a, ChainPolicy fallback)
{
    if (a.alternate_chain)
        return ChainPolicy::ladder;
    return a.chain ? parse_policy(*a.chain) : fallback;
}

int run_pair_ec(const PairArgs& a)
{
    const auto cfg = load_config(a.config);
    const auto E = cfg.elliptic();
    const auto alg = parse_ec_algorithm(a.alg);
    EcPairingOptions o;
    o.policy = chosen_policy(a, ChainPolicy::naf);
    o.seed = a.seed;
    o.normalized = a.normalized;
    const auto r = ec_pairing(alg, E, parse_point(E, a.left), parse_point(E, a.right), a.m, o);
    emit(a.json, pairing_json(a.alg, r, a.m, false), pairing_text(a.alg, r, a.m, false));
    return kExitOk;
}

int run_pair_hec(const PairArgs& a)
{
    const auto cfg = load_config(a.config);
    const auto C = cfg.hyperelliptic();
    const auto alg = parse_hec_algorithm(a.alg);
    HecPairingOptions o;
    o.policy = chosen_policy(a, ChainPolicy::binary);
    o.seed = a.seed;
    const auto r = hec_pairing(alg, C, parse_divisor(C, a.left), parse_divisor(C, a.right), a.m, o);
    emit(a.json, pairing_json(a.alg, r, a.m, true), pairing_text(a.alg, r, a.m, true));
    return kExitOk;
}

int run_chain(const ChainArgs& a)
{
    const auto policy = parse_policy(a.policy);
    const auto chain = build_chain(a.m, policy);
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : chain)
        steps.push_back({{"kind", to_string(s.kind)}, {"left", s.left}, {"right", s.right}, {"value", s.value}});
    emit(a.json, {{"schema", kJsonSchema}, {"m", a.m}, {"policy", a.policy}, {"steps", steps}}, format_chain(chain));
    return kExitOk;
}

Rational parse_rational(const std::string& text)
{
    try
    {
        return Rational(text);
    }
    catch (const std::exception&)
    {
        throw Error(Errc::parse_error, "not a rational number: " + text);
    }
}

int run_bench_cmd(const BenchArgs& a)
{
    BenchOptions o;
    o.trials = a.trials;
    o.seed = a.seed;
    if (a.div_weight)
        o.div_weight = parse_rational(*a.div_weight);
    const auto r = run_bench(parse_bench_family(a.alg), o);
    emit(a.json, bench_json(r), bench_text(r));
    return r.values_agree ? kExitOk : kExitCheckFailed;
}

int run_example(bool json)
{
    const auto checks = run_genus2_example();
    emit(json, checks_json(checks), checks_text(checks));
    return all_passed(checks) ? kExitOk : kExitCheckFailed;
}

int run_verify(const VerifyArgs& a)
{
    std::vector<Property> props;
    for (const auto& name : a.properties)
        props.push_back(parse_property(name));
    if (props.empty())
        props = all_properties();
    std::vector<PropertyReport> reports;
    bool ok = true;
    for (auto p : props)
    {
        reports.push_back(run_property(p, {.seed = a.seed, .samples = a.samples}));
        ok = ok && reports.back().passed();
    }
    emit(a.json, verify_json(reports), verify_text(reports));
    return ok ? kExitOk : kExitCheckFailed;
}

void add_pair_options(CLI::App* cmd, PairArgs& a, const char* left, const char* right, const char* algs)
{
    cmd->add_option("--config", a.config, "curve file (key=value)")->required();
    cmd->add_option("--m", a.m, "pairing order")->required();
    cmd->add_option("--alg", a.alg, algs)->required();
    cmd->add_option(left, a.left, "first argument")->required();
    cmd->add_option(right, a.right, "second argument")->required();
    cmd->add_option("--chain", a.chain, "chain policy: naf, binary or ladder");
    cmd->add_flag("--alternate-chain", a.alternate_chain, "use the ladder chain, which visits other multiples");
    cmd->add_option("--seed", a.seed, "seed for the baselines' auxiliary points");
    cmd->add_flag("--json", a.json, "machine-readable output");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves"};
    app.require_subcommand(1);

    auto* pair = app.add_subcommand("pair", "evaluate one pairing");
    pair->require_subcommand(1);
    PairArgs ec_args, hec_args;
    auto* pair_ec = pair->add_subcommand("ec", "pairing on an elliptic curve");
    add_pair_options(pair_ec, ec_args, "--P", "--Q", "weil, weil2, tate or tate2");
    pair_ec->add_flag("--normalized", ec_args.normalized, "weil2: divide out (-1)^m");
    auto* pair_hec = pair->add_subcommand("hec", "Tate pairing on a genus-2 Jacobian");
    add_pair_options(pair_hec, hec_args, "--D", "--E", "tate2 or tate-std");

    ChainArgs chain_args;
    auto* chain = app.add_subcommand("chain", "print the addition chain for m");
    chain->add_option("--m", chain_args.m, "target")->required();
    chain->add_option("--policy", chain_args.policy, "naf, binary or ladder");
    chain->add_flag("--json", chain_args.json, "machine-readable output");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "per-step operation counts, baseline against squared");
    bench->add_option("--alg", bench_args.alg, "ec-weil, ec-tate or hec");
    bench->add_option("--trials", bench_args.trials, "paired runs")->check(CLI::PositiveNumber);
    bench->add_option("--div-weight", bench_args.div_weight, "cost of a division in multiplications, e.g. 5 or 9/2");
    bench->add_option("--seed", bench_args.seed, "input seed");
    bench->add_flag("--json", bench_args.json, "machine-readable output");

    bool example_json = false;
    auto* example = app.add_subcommand("example-genus2", "reproduce the worked F_31 genus-2 example");
    example->add_flag("--json", example_json, "machine-readable output");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the property suites on the embedded curves");
    verify->add_option("--property", verify_args.properties,
        "weil-square, tate-square, hec-square, bilinearity, roots, nondegeneracy, chain-independence or cantor; repeatable");
    verify->add_option("--samples", verify_args.samples, "checks per property (0 = default)");
    verify->add_option("--seed", verify_args.seed, "sample seed");
    verify->add_flag("--json", verify_args.json, "machine-readable output");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitUsage;
    }

    try
    {
        if (pair_ec->parsed())
            return run_pair_ec(ec_args);
        if (pair_hec->parsed())
            return run_pair_hec(hec_args);
        if (chain->parsed())
            return run_chain(chain_args);
        if (bench->parsed())
            return run_bench_cmd(bench_args);
        if (example->parsed())
            return run_example(example_json);
        if (verify->parsed())
            return run_verify(verify_args);
    }
    catch (const DivisorCollision& e)
    {
        std::cerr << "error: " << e.what() << " (--alternate-chain picks a chain through other multiples)\n";
        return kExitDivisorCollision;
    }
    catch (const Error& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitOtherError;
    }
    return kExitUsage;
}
