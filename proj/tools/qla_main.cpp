#include "qla/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic constructor and verifier for quadratic Lie superalgebras"};
    app.require_subcommand(1);

    qla::RunConfig cfg;

    auto add_algebra_opts = [&](CLI::App* sub) {
        sub->add_option("--algebra", cfg.algebra_spec,
                        "algebra spec, e.g. \"gl(2|1)\", \"sl(3|0)\", \"osp(3|2)\", \"C(0|2)\"");
        sub->add_option("--algebra-file", cfg.algebra_file,
                        "path to a serialized algebra (json)");
    };

    auto* cat = app.add_subcommand("catalog", "list the built-in algebra families");
    cat->add_flag("--json", cfg.json, "machine-readable output");

    auto* val = app.add_subcommand("validate", "check every axiom of an algebra");
    add_algebra_opts(val);
    val->add_flag("--json", cfg.json);

    auto* ver = app.add_subcommand("verify", "verify an exact identity");
    ver->add_option("formula", cfg.formula,
                    "strange | very-strange | even-vsf | weighted-dual-sum | "
                    "casimir-orthogonality | identities")
        ->required();
    add_algebra_opts(ver);
    ver->add_option("--torus", cfg.torus, "rational Cartan coordinates, e.g. \"1/2,0\"");
    ver->add_option("--labels", cfg.labels, "s-labels for even-vsf, e.g. \"1,1\"");
    ver->add_option("--m", cfg.m, "automorphism order override for even-vsf");
    ver->add_option("--samples", cfg.samples, "number of random torus samples");
    ver->add_option("--seed", cfg.seed, "seed for torus sampling");
    ver->add_flag("--json", cfg.json, "stream one json report per line");

    auto* dec = app.add_subcommand("decompose", "triangular decomposition and isotypic data");
    add_algebra_opts(dec);
    dec->add_flag("--json", cfg.json);

    auto* dmp = app.add_subcommand("dump", "serialize an algebra to json");
    add_algebra_opts(dmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : qla::cli::exit_parse_error;
    }

    if (cat->parsed()) cfg.command = "catalog";
    else if (val->parsed()) cfg.command = "validate";
    else if (ver->parsed()) cfg.command = "verify";
    else if (dec->parsed()) cfg.command = "decompose";
    else if (dmp->parsed()) cfg.command = "dump";

    return qla::cli::run(cfg, std::cout, std::cerr);
}
