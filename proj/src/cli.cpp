#include "boxfactor/cli.hpp"

#include "boxfactor/bench.hpp"
#include "boxfactor/error.hpp"
#include "boxfactor/lgr.hpp"
#include "boxfactor/loop_factor.hpp"
#include "boxfactor/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace boxfactor {

namespace {

// Input problems that are not LGR syntax errors (missing files).
struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wraps any library error raised while reading input so it maps to exit 3.
struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UsageFailure("cannot open '" + path + "'");
    }
    buffer << file.rdbuf();
    return buffer.str();
}

Graph load_graph(const std::string& path, std::istream& in) {
    const auto text = read_input(path, in);
    try {
        return parse_lgr(text);
    } catch (const Error& e) {
        throw ParseFailure(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageFailure("cannot write '" + path + "'");
    }
    file << content;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file(path, text);
    }
}

} // namespace

std::string format_factorization(const Factorization& f) {
    std::string out;
    for (std::size_t i = 0; i < f.primes.size(); ++i) {
        out += "# prime " + std::to_string(i) + "\n";
        out += serialize_lgr(f.primes[i]);
    }
    out += "# coords\n";
    out += serialize_coords(f.coord);
    return out;
}

std::string format_factorization_json(const Factorization& f, const std::string& algorithm) {
    nlohmann::json doc;
    doc["algorithm"] = algorithm;
    doc["primes"] = nlohmann::json::array();
    for (const auto& p : f.primes) {
        nlohmann::json prime;
        prime["n"] = p.n();
        prime["edges"] = nlohmann::json::array();
        for (auto [u, v] : p.edges()) {
            prime["edges"].push_back({u, v});
        }
        prime["loops"] = p.loops();
        doc["primes"].push_back(std::move(prime));
    }
    doc["coords"] = nlohmann::json::array();
    for (Vertex v = 0; v < f.coord.n(); ++v) {
        auto tuple = f.coord.coords(v);
        doc["coords"].push_back(std::vector<std::size_t>(tuple.begin(), tuple.end()));
    }
    return doc.dump() + "\n";
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cartesian product and prime factorization of graphs with loops", "boxfactor"};
    app.require_subcommand(1);

    std::vector<std::string> product_files;
    std::string product_out;
    auto* product = app.add_subcommand("product", "Cartesian product of the input graphs");
    product->add_option("files", product_files, "LGR inputs ('-' for stdin)")->required();
    product->add_option("-o,--output", product_out, "write the product here instead of stdout");

    std::string factor_file;
    std::string algorithm = "linear";
    bool as_json = false;
    std::string factor_prefix;
    auto* factor = app.add_subcommand("factor", "prime factorization");
    factor->add_option("file", factor_file, "LGR input ('-' for stdin)")->required();
    factor->add_option("--algorithm", algorithm, "linear, subset or oracle")
        ->check(CLI::IsMember({"linear", "subset", "oracle"}));
    factor->add_flag("--json", as_json, "machine-readable output");
    factor->add_option("--prefix", factor_prefix, "also write <prefix>.prime<i>.lgr and <prefix>.coords.tsv");

    std::string strip_file;
    auto* strip = app.add_subcommand("strip", "remove all loops");
    strip->add_option("file", strip_file, "LGR input ('-' for stdin)")->required();

    std::vector<std::string> verify_files;
    auto* verify = app.add_subcommand("verify", "check a factorization: <graph> <factors>... <coords.tsv>");
    verify->add_option("files", verify_files, "graph, factor files, coordinate table")->required()->expected(2, -1);

    InstanceSpec spec;
    std::string gen_prefix;
    auto* gen = app.add_subcommand("gen", "random product with known generators");
    gen->add_option("--factors", spec.factors, "generator count")->required()->check(CLI::Range(1, 16));
    gen->add_option("--min-size", spec.min_size, "smallest generator")->required()->check(CLI::Range(1, 1 << 16));
    gen->add_option("--max-size", spec.max_size, "largest generator")->required()->check(CLI::Range(1, 1 << 16));
    gen->add_option("--loop-prob", spec.loop_probability, "loop probability")->required()->check(CLI::Range(0.0, 1.0));
    gen->add_option("--edge-prob", spec.edge_probability, "extra edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", spec.seed, "random seed")->required();
    gen->add_option("--prefix", gen_prefix, "also write <prefix>.lgr, <prefix>.gen<i>.lgr, <prefix>.coords.tsv");

    std::string family;
    std::size_t d_from = 0;
    std::size_t d_to = 0;
    bool csv = false;
    BenchOptions bench_options;
    auto* bench = app.add_subcommand("bench", "time factorization stages on a graph family");
    bench->add_option("--family", family, "graph family")->required()->check(CLI::IsMember({"hypercube-loops"}));
    bench->add_option("--from", d_from, "first dimension")->required()->check(CLI::Range(1, 24));
    bench->add_option("--to", d_to, "last dimension")->required()->check(CLI::Range(1, 24));
    bench->add_option("--loop-prob", bench_options.loop_probability, "loop probability")->check(CLI::Range(0.0, 1.0));
    bench->add_option("--seed", bench_options.seed, "random seed");
    bench->add_flag("--csv", csv, "CSV output: n,m,stage,milliseconds");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*product) {
            std::vector<Graph> factors;
            for (const auto& path : product_files) {
                factors.push_back(load_graph(path, in));
            }
            emit(serialize_lgr(cartesian_product(factors).graph), product_out, out);
        } else if (*factor) {
            const auto g = load_graph(factor_file, in);
            Factorization f;
            if (algorithm == "subset") {
                f = factor_loops_subset_scan(g);
            } else if (algorithm == "oracle") {
                f = brute_force_factor(g);
            } else {
                f = factor_loops_linear(g);
            }
            out << (as_json ? format_factorization_json(f, algorithm) : format_factorization(f));
            if (!factor_prefix.empty()) {
                for (std::size_t i = 0; i < f.primes.size(); ++i) {
                    write_file(factor_prefix + ".prime" + std::to_string(i) + ".lgr", serialize_lgr(f.primes[i]));
                }
                write_file(factor_prefix + ".coords.tsv", serialize_coords(f.coord));
            }
        } else if (*strip) {
            out << serialize_lgr(strip_loops(load_graph(strip_file, in)));
        } else if (*verify) {
            const auto g = load_graph(verify_files.front(), in);
            Factorization f;
            std::vector<std::size_t> sizes;
            for (std::size_t i = 1; i + 1 < verify_files.size(); ++i) {
                f.primes.push_back(load_graph(verify_files[i], in));
                sizes.push_back(f.primes.back().n());
            }
            std::optional<Coordinatization> coord;
            try {
                coord = parse_coords(read_input(verify_files.back(), in), g.n(), sizes);
            } catch (const Error& e) {
                throw ParseFailure(verify_files.back() + ": " + e.what());
            }
            if (!coord) {
                out << "invalid: coordinate table is not a bijection onto the factor box\n";
                return kExitVerifyFailed;
            }
            f.coord = std::move(*coord);
            const bool ok = verify_factorization(g, f);
            out << (ok ? "ok\n" : "invalid: product of factors does not reproduce the graph\n");
            return ok ? kExitOk : kExitVerifyFailed;
        } else if (*gen) {
            if (spec.min_size > spec.max_size) {
                err << "usage error: --min-size exceeds --max-size\n";
                return kExitUsage;
            }
            const auto instance = random_instance(spec);
            std::string text = "# instance\n" + serialize_lgr(instance.product);
            for (std::size_t i = 0; i < instance.generators.size(); ++i) {
                text += "# generator " + std::to_string(i) + "\n" + serialize_lgr(instance.generators[i]);
            }
            text += "# coords\n" + serialize_coords(instance.coord);
            out << text;
            if (!gen_prefix.empty()) {
                write_file(gen_prefix + ".lgr", serialize_lgr(instance.product));
                for (std::size_t i = 0; i < instance.generators.size(); ++i) {
                    write_file(gen_prefix + ".gen" + std::to_string(i) + ".lgr",
                               serialize_lgr(instance.generators[i]));
                }
                write_file(gen_prefix + ".coords.tsv", serialize_coords(instance.coord));
            }
        } else if (*bench) {
            if (d_from > d_to) {
                err << "usage error: --from exceeds --to\n";
                return kExitUsage;
            }
            const auto rows = bench_hypercube_loops(d_from, d_to, bench_options);
            out << std::fixed << std::setprecision(4);
            if (csv) {
                out << "n,m,stage,milliseconds\n";
            }
            for (const auto& row : rows) {
                if (csv) {
                    out << row.n << "," << row.m << "," << row.stage << "," << row.milliseconds << "\n";
                } else {
                    out << "n=" << row.n << " m=" << row.m << " " << row.stage << " " << row.milliseconds << " ms\n";
                }
            }
        }
    } catch (const UsageFailure& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseFailure& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace boxfactor
