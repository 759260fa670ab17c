#include <iostream>

#include "commands.hpp"

using namespace gfkit::cli;

namespace {

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

int emit(const Envelope& e, Format fmt, int code) {
    std::cout << render(e, fmt);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gfkit: generating-function formulas of group theory and quantum mechanics"};
    app.fallthrough();
    app.require_subcommand(1);
    app.footer("Half-integers are passed doubled (--two-j, --two-m). GFKIT_FACT_MAX sets the initial factorial cache size.");

    Format fmt = Format::Json;
    Context ctx;
    app.add_option("--format", fmt, "json, csv or text")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))->option_text("json|csv|text");
    app.add_option("--seed", ctx.seed, "seed for randomized commands");

    add_wigner(app, ctx);
    add_su3(app, ctx);
    add_gelfand(app, ctx);
    add_hurwitz(app, ctx);
    add_hydrogen(app, ctx);
    add_oscillator(app, ctx);
    add_manybody(app, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        if (argc > 1 && argv[1][0] != '-' && !app.get_subcommand_no_throw(argv[1]))
            msg = std::string("unknown command: ") + argv[1];
        std::cerr << "usage error: " << msg << "\nrun with --help for usage\n";
        return emit(Envelope::error(msg), fmt, 2);
    }

    try {
        Envelope e = ctx.action();
        return emit(e, fmt, 0);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return emit(Envelope::error(e.what()), fmt, 2);
    } catch (const gfkit::Error& e) {
        return emit(Envelope::error(e.what()), fmt, 1);
    } catch (const std::exception& e) {
        return emit(Envelope::error(e.what()), fmt, 1);
    }
}
