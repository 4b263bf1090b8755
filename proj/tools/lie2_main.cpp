#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lie2/lie2.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

struct Options {
    std::string field = "gf2";
    std::string format = "text";
    std::string out;
    std::string golden;
    bool no_golden = false;
};

struct Outcome {
    int code = kOk;
    std::vector<json> docs;
};

int exit_code(lie2_status st) {
    switch (st) {
        case LIE2_OK: return kOk;
        case LIE2_ERR_MISMATCH: return kMismatch;
        case LIE2_ERR_USAGE:
        case LIE2_ERR_DOMAIN: return kUsage;
        case LIE2_ERR_RESOURCE: return kResource;
        default: return kMismatch;
    }
}

// Runs one document call; errors other than a mismatch carry no document.
template <class F>
void run(Outcome& o, F&& call) {
    char* doc = nullptr;
    lie2_status st = call(&doc);
    if (doc) {
        o.docs.push_back(json::parse(doc));
        lie2_string_free(doc);
    }
    if (st != LIE2_OK && st != LIE2_ERR_MISMATCH) std::cerr << "lie2: " << lie2_last_error() << "\n";
    o.code = std::max(o.code, exit_code(st));
}

std::vector<int> parse_range(const std::string& s) {
    auto num = [&](const std::string& t) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            throw CLI::ValidationError("--n", "expected an integer or a range a..b, got '" + s + "'");
        }
    };
    auto dots = s.find("..");
    if (dots == std::string::npos) return {num(s)};
    int a = num(s.substr(0, dots)), b = num(s.substr(dots + 2));
    if (a > b) throw CLI::ValidationError("--n", "empty range " + s);
    std::vector<int> r;
    for (int i = a; i <= b; ++i) r.push_back(i);
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--from", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* golden_dir(const Options& opt) {
    if (opt.no_golden) return nullptr;
    if (!opt.golden.empty()) return opt.golden.c_str();
    static const std::string def = LIE2_GOLDEN_DIR;
    return std::filesystem::is_directory(def) ? def.c_str() : nullptr;
}

json strip(json d) {
    d.erase("text");
    d.erase("csv");
    return d;
}

int write(const Options& opt, const Outcome& o) {
    std::string body;
    if (opt.format == "json") {
        json j = o.docs.size() == 1 ? strip(o.docs[0]) : json::array();
        if (o.docs.size() != 1)
            for (const auto& d : o.docs) j.push_back(strip(d));
        body = j.dump(2) + "\n";
    } else if (opt.format == "csv") {
        bool first = true;
        for (const auto& d : o.docs) {
            if (!d.contains("csv")) {
                std::cerr << "lie2: csv output is only available for tables\n";
                return kUsage;
            }
            std::string c = d["csv"].get<std::string>();
            body += first ? c : c.substr(c.find('\n') + 1);
            first = false;
        }
    } else {
        for (std::size_t i = 0; i < o.docs.size(); ++i) {
            if (i) body += "\n";
            body += o.docs[i].value("text", "");
            if (o.docs[i].contains("golden_match"))
                body += std::string("golden: ") + (o.docs[i]["golden_match"].get<bool>() ? "match" : "MISMATCH") + "\n";
        }
    }
    if (opt.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(opt.out);
        if (!f) {
            std::cerr << "lie2: cannot write " << opt.out << "\n";
            return kUsage;
        }
        f << body;
    }
    return o.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lie2: Lie (super)algebras over GF(2^k), gradings and superizations"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--field", opt.field, "gf2, gf4, ..., gf2e<k> (k <= 16)")->capture_default_str();
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    app.add_option("--out", opt.out, "write output to a file");
    app.add_option("--golden", opt.golden, "directory with golden files (default: tests/golden of the source tree)");
    app.add_flag("--no-golden", opt.no_golden, "skip golden comparisons");
    app.add_flag_callback("--version", [] {
        std::cout << lie2_version() << "\n";
        throw CLI::Success();
    });

    Outcome o;

    // classical
    auto* classical = app.add_subcommand("classical", "structure constants of a classical Lie algebra");
    std::string series;
    std::string n_text;
    int derived = -1;
    bool mod_center = false;
    classical->add_option("--series", series, "gl, sl, psl, o, o1, o2, o2_mod_c, tilde_o")->required();
    classical->add_option("--n", n_text, "matrix size")->required();
    classical->add_option("--derived", derived, "number of derived steps");
    classical->add_flag("--mod-center", mod_center, "quotient by the center");
    classical->callback([&] {
        for (int n : parse_range(n_text))
            run(o, [&](char** d) {
                return lie2_run_classical(opt.field.c_str(), series.c_str(), static_cast<size_t>(n), derived,
                                          mod_center ? 1 : -1, d);
            });
    });

    // vect
    auto* vect = app.add_subcommand("vect", "gradings of vect^(1)(1;n)");
    std::string mode = "grade", u_text;
    vect->add_option("mode", mode, "grade, charpoly or sierpinski")->check(CLI::IsMember({"grade", "charpoly", "sierpinski"}));
    vect->add_option("--n", n_text, "height")->required();
    vect->add_option("--u", u_text, "grading parameters c0,c1,... (or a bit string)");
    vect->callback([&] {
        for (int n : parse_range(n_text)) {
            std::string u = u_text.empty() ? std::string(static_cast<std::size_t>(std::max(n, 0)), '0') : u_text;
            run(o, [&](char** d) { return lie2_run_vect(opt.field.c_str(), n, u.c_str(), mode.c_str(), d); });
        }
    });

    // gradings
    auto* gradings = app.add_subcommand("gradings", "projection reps and enumerated gradings");
    std::string from;
    bool enumerate = false;
    std::size_t limit = 0;
    gradings->add_option("--series", series, "sl, psl, o1, o2, o2_mod_c, tilde_o");
    gradings->add_option("--n", n_text, "size");
    gradings->add_option("--from", from, "Lie algebra JSON document");
    gradings->add_flag("--enumerate", enumerate, "enumerate all idempotent derivations");
    gradings->add_option("--limit", limit, "bound on enumerated derivations");
    gradings->callback([&] {
        if (!from.empty()) {
            std::string text = read_file(from);
            run(o, [&](char** d) { return lie2_run_gradings_json(text.c_str(), limit, d); });
            return;
        }
        if (series.empty() || n_text.empty()) throw CLI::ValidationError("gradings", "need --from or --series and --n");
        for (int n : parse_range(n_text))
            run(o, [&](char** d) {
                return lie2_run_gradings(opt.field.c_str(), series.c_str(), static_cast<size_t>(n), enumerate ? 1 : 0,
                                         limit, d);
            });
    });

    // superize
    auto* superize = app.add_subcommand("superize", "method-2 superization of a graded Lie algebra");
    superize->add_option("--from", from, "grading JSON {\"algebra\": ..., \"U\": rows}")->required();
    superize->callback([&] {
        std::string text = read_file(from);
        run(o, [&](char** d) { return lie2_run_superize(text.c_str(), d); });
    });

    // known
    auto* known = app.add_subcommand("known", "named superalgebras");
    std::string name;
    std::size_t a = 0, b = 0;
    known->add_option("--name", name, "kl, kl-printed, q-vect, k, oo-II, oo-IPi, oo-PiPi, pe")->required();
    known->add_option("--n", n_text, "height (kl, q-vect, k)");
    known->add_option("--a", a, "even block size");
    known->add_option("--b", b, "odd block size");
    known->callback([&] {
        std::vector<int> ns = n_text.empty() ? std::vector<int>{static_cast<int>(a)} : parse_range(n_text);
        for (int n : ns)
            run(o, [&](char** d) {
                return lie2_run_known(opt.field.c_str(), name.c_str(), static_cast<size_t>(n_text.empty() ? a : n), b, d);
            });
    });

    // tables
    auto* tables = app.add_subcommand("tables", "dim L_k tables of the even parts");
    std::string table_series = "vect1";
    tables->add_option("--series", table_series)->check(CLI::IsMember({"vect1"}));
    tables->add_option("--n", n_text, "height or range a..b")->required();
    tables->callback([&] {
        for (int n : parse_range(n_text)) run(o, [&](char** d) { return lie2_run_tables(n, golden_dir(opt), d); });
    });

    // verify charpoly
    auto* verify = app.add_subcommand("verify", "computer checks");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* charpoly = verify->add_subcommand("charpoly", "char poly of the d^2 action against the closed formula");
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    charpoly->add_option("--n", n_text, "height or range")->required();
    charpoly->add_option("--samples", samples, "random tuples (0 = exhaustive)");
    charpoly->add_option("--seed", seed, "RNG seed")->capture_default_str();
    charpoly->callback([&] {
        for (int n : parse_range(n_text))
            run(o, [&](char** d) { return lie2_run_verify_charpoly(opt.field.c_str(), n, samples, seed, d); });
    });

    // sierpinski
    auto* sierpinski = app.add_subcommand("sierpinski", "support patterns of der vect^(1)(1;n)");
    sierpinski->add_option("--n", n_text, "height or range")->required();
    sierpinski->callback([&] {
        for (int n : parse_range(n_text)) run(o, [&](char** d) { return lie2_run_sierpinski(n, golden_dir(opt), d); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (o.docs.empty()) return o.code ? o.code : kUsage;
    return write(opt, o);
}
