#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qstretch/cli/commands.hpp"

namespace {

constexpr int kUsageError = 2;

struct Flags {
    std::string file;
    bool pretty = false;
};

CLI::App* with_file(CLI::App* sub, Flags& flags) {
    sub->add_option("file", flags.file, "algebra file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--pretty", flags.pretty, "print a table instead of JSON");
    return sub;
}

void add_cap(CLI::App* sub, qstretch::cli::Options& o) {
    sub->add_option("--degree-cap", o.degree_cap, "overlap degree cap for the Groebner completion");
}

void add_A(CLI::App* sub, qstretch::cli::Options& o, bool required) {
    auto* opt = sub->add_option("-A,--A", o.A, "stretch factor")->check(CLI::PositiveNumber);
    if (required) opt->required();
}

void add_n(CLI::App* sub, qstretch::cli::Options& o) {
    sub->add_option("-n,--n", o.n_max, "resolution length")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stretched quiver algebras: presentations, resolutions and verification reports", "qstretch"};
    app.set_version_flag("--version", qstretch::cli::kToolVersion);
    app.require_subcommand(1);

    qstretch::cli::Options o;
    Flags flags;

    auto* stretch = with_file(app.add_subcommand("stretch", "build the stretched presentation"), flags);
    add_A(stretch, o, true);
    stretch->add_option("--emit", o.emit, "write the stretched algebra file here");
    add_cap(stretch, o);

    auto* basis = with_file(app.add_subcommand("basis", "Groebner basis and normal words"), flags);
    add_cap(basis, o);

    auto* dims = with_file(app.add_subcommand("dims", "dimensions of the algebra and its projectives"), flags);
    add_cap(dims, o);

    auto* resolve = with_file(app.add_subcommand("resolve", "minimal projective resolution"), flags);
    add_n(resolve, o);
    add_A(resolve, o, false);
    add_cap(resolve, o);
    resolve->add_option("--module", o.module, "module to resolve")
        ->check(CLI::IsMember({"simple", "dual", "quotient-eps"}));
    resolve->add_option("--budget", o.budget, "maximal dimension of the enveloping algebra");

    auto* check = app.add_subcommand("check", "degree pattern detectors");
    check->require_subcommand(1);
    auto* dk = with_file(check->add_subcommand("d-koszul", "d-Koszul detector"), flags);
    dk->add_option("--d", o.d, "expected d, needed when P^2 is empty");
    auto* st = with_file(check->add_subcommand("stacked", "(D,A)-stacked detector"), flags);
    for (auto* sub : {dk, st}) {
        add_n(sub, o);
        add_A(sub, o, false);
        add_cap(sub, o);
    }

    auto* verify = app.add_subcommand("verify", "theorem checks on the stretched algebra");
    verify->require_subcommand(1);
    auto* vs = with_file(verify->add_subcommand("stratifying", "corner algebra and stratifying ideal"), flags);
    auto* vt = with_file(verify->add_subcommand("transport", "transport of the resolution of the top"), flags);
    auto* vb = with_file(verify->add_subcommand("bimodule", "bimodule resolution ledger"), flags);
    auto* vi = with_file(verify->add_subcommand("idim", "injective dimension bound"), flags);
    for (auto* sub : {vs, vt, vb, vi}) {
        add_A(sub, o, true);
        add_cap(sub, o);
    }
    add_n(vt, o);
    add_n(vi, o);
    vb->add_option("--budget", o.budget, "maximal dimension of the enveloping algebra");

    auto* report = with_file(app.add_subcommand("report", "run every check"), flags);
    report->add_flag("--all", o.all, "include every check (the default)");
    add_A(report, o, true);
    add_n(report, o);
    add_cap(report, o);
    report->add_option("--d", o.d, "expected d for the d-Koszul detector");
    report->add_option("--budget", o.budget, "maximal dimension of the enveloping algebra");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    for (auto* sub : app.get_subcommands()) {
        o.command = sub->get_name();
        for (auto* inner : sub->get_subcommands()) o.command += " " + inner->get_name();
    }

    std::string text;
    {
        std::ifstream in(flags.file, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    try {
        auto r = qstretch::cli::run(o, text);
        std::cout << (flags.pretty ? r.to_table() : r.to_json());
        if (const auto* f = r.first_failure()) {
            std::cerr << "qstretch: FAIL " << f->name << ": predicted " << f->predicted << ", computed "
                      << f->computed << "\n";
        }
        return r.exit_code;
    } catch (const qstretch::cli::ParseError& e) {
        std::cerr << flags.file << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "qstretch: " << e.what() << "\n";
    }
    return kUsageError;
}
