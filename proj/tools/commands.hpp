#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gfkit/arith.hpp>
#include <gfkit/errors.hpp>

#include "envelope.hpp"

namespace gfkit::cli {

struct Context {
    uint64_t seed = 1;
    std::function<Envelope()> action;
};

void add_wigner(CLI::App& app, Context& ctx);
void add_su3(CLI::App& app, Context& ctx);
void add_gelfand(CLI::App& app, Context& ctx);
void add_hurwitz(CLI::App& app, Context& ctx);
void add_hydrogen(CLI::App& app, Context& ctx);
void add_oscillator(CLI::App& app, Context& ctx);
void add_manybody(CLI::App& app, Context& ctx);

inline Envelope exact_value(const SqrtRational& v, std::string meta) {
    Envelope e;
    e.meta = std::move(meta);
    e.value_exact = v.str();
    e.value_float = v.to_double();
    return e;
}

// subcommand whose action is filled in when it is selected
template <class F>
CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, Context& ctx, F&& run) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&ctx, run = std::forward<F>(run)] { ctx.action = run; });
    return c;
}

// integer or p/q
inline std::optional<Rational> as_rational(const std::string& s) {
    static const std::regex re(R"(^[+-]?\d+(/\d+)?$)");
    if (!std::regex_match(s, re)) return std::nullopt;
    Rational q(s);
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

// "1 2 3; 4 5 6" -> rows of whitespace separated tokens
inline std::vector<std::vector<std::string>> split_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::stringstream rs(row);
        std::vector<std::string> r;
        std::string tok;
        while (rs >> tok) r.push_back(tok);
        if (!r.empty()) rows.push_back(r);
    }
    return rows;
}

}  // namespace gfkit::cli
