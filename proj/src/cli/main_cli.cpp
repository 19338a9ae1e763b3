#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wildram/cli.hpp"
#include "wildram/errors.hpp"
#include "wildram/report_io.hpp"

namespace wildram {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open " + path);
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ramification jumps, genera and oracle checks for Artin-Schreier-Witt extensions"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    std::optional<std::int64_t> prec;
    std::optional<std::int64_t> trials;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* sub, bool file_required) {
        auto* opt = sub->add_option("file", file, "job file, or - for stdin");
        if (file_required) opt->required();
        sub->add_flag("--json", json, "emit the JSON report");
        sub->add_option("--prec", prec, "oracle working precision")->check(CLI::PositiveNumber);
    };
    CLI::App* reduce = app.add_subcommand("reduce", "reduced form and jumps of the job's extensions");
    CLI::App* jumps = app.add_subcommand("jumps", "ramification jumps in both numberings");
    CLI::App* genus = app.add_subcommand("genus", "genus of a cover branched only at infinity");
    CLI::App* verify = app.add_subcommand("verify", "cross-check jumps against the series oracle");
    add_common(reduce, true);
    add_common(jumps, true);
    add_common(genus, true);
    add_common(verify, false);
    verify->add_option("--trials", trials, "run the randomized suite with this many trials")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed of the randomized suite");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : kExitHardError;
    }

    const Command cmd = *command_from_string(app.get_subcommands().front()->get_name());
    try {
        RamReport r;
        if (cmd == Command::Verify && trials) {
            SuiteOptions so;
            so.trials = *trials;
            so.seed = seed;
            so.prec = prec;
            if (!file.empty()) {
                const JobSpec job = parse_job(slurp(file, in));
                so.field = job.field;
                if (!so.prec) so.prec = job.prec;
            }
            r = run_verification_suite(so);
        } else {
            if (file.empty()) throw InvalidInput("verify needs a job file or --trials");
            const JobSpec job = parse_job(slurp(file, in));
            r = run(job, cmd, RunOptions{prec});
        }
        out << (json ? report_to_json(r) : report_to_text(r));
        return exit_code(r.status);
    } catch (const ParseError& e) {
        err << "error: " << (file == "-" ? "<stdin>" : file) << ": " << e.what() << "\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitHardError;
}

}  // namespace wildram
