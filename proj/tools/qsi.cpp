// qsi - semi-invariant algebras of Euclidean quivers.
//
// Subcommands: classify, orbits, decompose, arcs, presentation, verify.
// Quivers and dimension vectors are JSON files; --dim also accepts inline
// JSON. Exit codes: 0 success, 1 input/validation error, 2 verification
// failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qsi/json_io.hpp"

namespace {

using qsi::Json;

Json load_json(const std::string& path_or_inline) {
    std::string text;
    if (!path_or_inline.empty() && path_or_inline.front() == '{') {
        text = path_or_inline;
    } else {
        std::ifstream in(path_or_inline);
        if (!in) throw qsi::ParseError("cannot open " + path_or_inline);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw qsi::ParseError("malformed JSON: " + std::string(e.what()));
    }
}

void emit(const Json& j, const std::string& format) {
    if (format == "text")
        std::cout << qsi::render_text(j);
    else
        std::cout << j.dump(2) << "\n";
}

long env_workers() {
    const char* raw = std::getenv("QSI_THREADS");
    if (!raw) return 1;
    const long n = std::strtol(raw, nullptr, 10);
    return n >= 1 ? n : 1;
}

struct CommonOpts {
    std::string input;
    std::string dim;
    std::string format = "json";
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-invariant algebras of Euclidean quivers"};
    app.require_subcommand(1);

    CommonOpts opts;
    qsi::SamplerConfig cfg;
    std::uint64_t modulus = 0;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", opts.input, "quiver JSON file")->required();
    };
    auto add_dim = [&](CLI::App* cmd) {
        cmd->add_option("--dim", opts.dim, "dimension vector JSON file or inline JSON")->required();
    };
    auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& choices) {
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember(choices))
            ->capture_default_str();
    };

    CLI::App* classify = app.add_subcommand("classify", "Dynkin/Euclidean/wild classification");
    add_input(classify);
    add_format(classify, {"json", "text"});

    CLI::App* orbits = app.add_subcommand("orbits", "radical vector and simple regular orbits");
    add_input(orbits);
    add_format(orbits, {"json", "text"});

    CLI::App* decompose =
        app.add_subcommand("decompose", "canonical and generic decomposition of d");
    add_input(decompose);
    add_dim(decompose);
    add_format(decompose, {"json", "text"});

    CLI::App* arcs = app.add_subcommand("arcs", "labeled polygons and admissible arcs");
    add_input(arcs);
    add_dim(arcs);
    add_format(arcs, {"json", "text", "dot"});

    CLI::App* presentation =
        app.add_subcommand("presentation", "generators, relations and classification");
    add_input(presentation);
    add_dim(presentation);
    add_format(presentation, {"json", "text"});

    CLI::App* verify = app.add_subcommand("verify", "randomized exact verification harness");
    add_input(verify);
    add_dim(verify);
    add_format(verify, {"json", "text"});
    verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    verify->add_option("--trials", cfg.trials, "sampling trials per rank estimate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--entry-bound", cfg.entry_bound, "entry bound for sampled maps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--modulus", modulus, "62-bit prime for mod-p screening");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    cfg.workers = env_workers();

    try {
        const auto quiver = qsi::quiver_from_json(load_json(opts.input));

        if (classify->parsed()) {
            emit(qsi::classification_to_json(qsi::classify_graph(*quiver)), opts.format);
            return 0;
        }

        if (orbits->parsed()) {
            emit(qsi::orbits_to_json(qsi::simple_regular_orbits(quiver)), opts.format);
            return 0;
        }

        if (decompose->parsed()) {
            const auto es = qsi::simple_regular_orbits(quiver);
            const auto d = qsi::dimvec_from_json(*quiver, load_json(opts.dim));
            const auto cd = qsi::canonical_decomposition(es, d);
            emit(qsi::decomposition_to_json(es, cd, qsi::generic_decomposition(es, cd)),
                 opts.format);
            return 0;
        }

        if (arcs->parsed()) {
            const auto es = qsi::simple_regular_orbits(quiver);
            const auto d = qsi::dimvec_from_json(*quiver, load_json(opts.dim));
            const auto cd = qsi::canonical_decomposition(es, d);
            if (opts.format == "dot")
                std::cout << qsi::polygons_to_dot(es, cd);
            else
                emit(qsi::arcs_to_json(es, cd), opts.format);
            return 0;
        }

        if (presentation->parsed()) {
            if (qsi::classify_graph(*quiver).kind != qsi::GraphKind::Euclidean) {
                Json j;
                j["classification"] = qsi::to_string(qsi::AlgebraClass::OutOfScope);
                j["warnings"] = Json::array({"quiver is not Euclidean"});
                emit(j, opts.format);
                return 0;
            }
            const auto es = qsi::simple_regular_orbits(quiver);
            const auto d = qsi::dimvec_from_json(*quiver, load_json(opts.dim));
            emit(qsi::presentation_to_json(es, qsi::make_presentation(es, d)), opts.format);
            return 0;
        }

        if (verify->parsed()) {
            if (modulus != 0) {
                if (!qsi::is_prime_u64(modulus)) {
                    std::cerr << "error: --modulus must be prime\n";
                    return 1;
                }
                cfg.modulus = modulus;
            }
            const auto es = qsi::simple_regular_orbits(quiver);
            const auto d = qsi::dimvec_from_json(*quiver, load_json(opts.dim));
            const auto report = qsi::verify_presentation(es, d, cfg);
            emit(qsi::report_to_json(report), opts.format);
            return report.all_pass() ? 0 : 2;
        }
    } catch (const qsi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
