#include "ruelle/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "ruelle/biortho.hpp"
#include "ruelle/cascade.hpp"
#include "ruelle/json_io.hpp"
#include "ruelle/stretched_haar.hpp"

namespace ruelle::cli {

namespace {

int parse_strict_int(const std::string& s, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError(std::string("invalid integer for ") + what + ": " + s);
    return value;
}

int require_odd_p(int p) {
    if (p < 1 || p % 2 == 0)
        throw UsageError("p must be an odd positive integer, got " +
                         std::to_string(p));
    return p;
}

Filter filter_from_text(const std::string& text, const char* origin) {
    try {
        return filter_from_json(Json::parse(text));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("malformed filter ") + origin + ": " +
                         e.what());
    }
}

// mt19937_64-driven uniform in [0,1), identical on every platform
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_deg_span) {
    while (true) {
        const int len = 1 + static_cast<int>(rng() % (max_deg_span + 1));
        const int min_deg = -static_cast<int>(rng() % 5);
        std::vector<Complex> coeffs(static_cast<std::size_t>(len));
        for (auto& c : coeffs)
            c = Complex{uniform01(rng) - 0.5, uniform01(rng) - 0.5};
        LaurentPoly out = LaurentPoly::make(min_deg, std::move(coeffs));
        if (!out.is_zero()) return out;
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

}  // namespace

FilterSpec classify_filter_arg(const std::string& arg) {
    FilterSpec spec;
    if (!arg.empty() && arg.front() == '@') {
        spec.source = FilterSpec::Source::File;
        spec.value = arg.substr(1);
    } else if (!arg.empty() && arg.front() == '{') {
        spec.source = FilterSpec::Source::Inline;
        spec.value = arg;
    } else {
        spec.source = FilterSpec::Source::Preset;
        spec.value = arg;
    }
    return spec;
}

Filter parse_filter(const FilterSpec& spec) {
    switch (spec.source) {
        case FilterSpec::Source::Preset: {
            if (spec.value == "haar") return stretched_haar_filter(1);
            constexpr const char* kPrefix = "stretched:";
            if (spec.value.rfind(kPrefix, 0) == 0) {
                const int p = parse_strict_int(
                    spec.value.substr(std::string(kPrefix).size()), "stretched:<p>");
                return stretched_haar_filter(require_odd_p(p));
            }
            throw UsageError("unknown filter preset: " + spec.value +
                             " (expected \"haar\", \"stretched:<odd p>\", \"@file\""
                             " or inline JSON)");
        }
        case FilterSpec::Source::Inline:
            return filter_from_text(spec.value, "inline JSON");
        case FilterSpec::Source::File: {
            std::ifstream in(spec.value);
            if (!in) throw UsageError("cannot open filter file: " + spec.value);
            std::ostringstream text;
            text << in.rdbuf();
            return filter_from_text(text.str(), spec.value.c_str());
        }
    }
    throw UsageError("empty filter spec");
}

Defaults defaults_with_env() {
    Defaults d;
    if (const char* env = std::getenv("RL_DEFAULT_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0))
            throw UsageError(std::string("RL_DEFAULT_TOL is not a positive "
                                         "decimal number: ") +
                             env);
        d.tol = v;
    }
    return d;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    try {
        const Defaults defaults = defaults_with_env();

        CLI::App app{"transfer-operator analysis of wavelet filter pairs"};
        app.require_subcommand(1);

        std::string filter_arg, filter2_arg, format = "csv", out_path;
        int p = 9;
        double tol = defaults.tol;
        int n = defaults.n;
        int K = defaults.K;
        int grid = defaults.grid;
        double lambda_re = 1.0, lambda_im = 0.0;
        unsigned long long seed = defaults.seed;
        int count = defaults.count;

        const std::string filter_help =
            "filter: \"haar\", \"stretched:<odd p>\", \"@file.json\" or inline JSON";

        auto* config = app.add_subcommand("config", "print the defaults table");

        auto* cycles =
            app.add_subcommand("cycles", "orbits of k -> 2k mod p on {0..p-1}");
        cycles->add_option("--p,-p", p, "odd modulus")->required();

        auto* spectrum_cmd = app.add_subcommand(
            "spectrum", "eigenvalues of the transfer operator on its window");
        spectrum_cmd->add_option("--filter", filter_arg, filter_help)->required();
        spectrum_cmd->add_option("--filter2", filter2_arg,
                              "second filter of a signed pair (defaults to --filter)");

        auto* fixedspace = app.add_subcommand(
            "fixedspace", "orthonormal basis of an eigenspace of the window matrix");
        fixedspace->add_option("--filter", filter_arg, filter_help)->required();
        fixedspace->add_option("--filter2", filter2_arg, "second filter of the pair");
        fixedspace->add_option("--tol", tol, "relative singular-value cut")
            ->capture_default_str();
        fixedspace->add_option("--lambda-re", lambda_re, "eigenvalue, real part")
            ->capture_default_str();
        fixedspace->add_option("--lambda-im", lambda_im, "eigenvalue, imaginary part")
            ->capture_default_str();

        auto* verdict = app.add_subcommand(
            "verdict", "orthogonality (one filter) or biorthogonality (pair) report");
        verdict->add_option("--filter", filter_arg, filter_help)->required();
        verdict->add_option("--filter2", filter2_arg, "second filter of the pair");
        verdict->add_option("--tol", tol, "decision tolerance")
            ->capture_default_str();

        auto* eigenbasis = app.add_subcommand(
            "eigenbasis", "one fixed eigenfunction per doubling-map orbit");
        eigenbasis->add_option("--p,-p", p, "odd stretch factor")->required();

        auto* cascade_cmd = app.add_subcommand(
            "cascade",
            "grid of the periodized cross-product of cascade partial products");
        cascade_cmd->add_option("--filter", filter_arg, filter_help)->required();
        cascade_cmd->add_option("--filter2", filter2_arg,
                                "second filter of the pair (defaults to --filter)");
        cascade_cmd->add_option("--n", n, "partial-product terms")
            ->capture_default_str();
        cascade_cmd->add_option("--K", K, "periodization terms each side")
            ->capture_default_str();
        cascade_cmd->add_option("--grid", grid, "samples on [0, 2pi)")
            ->capture_default_str();
        cascade_cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();

        auto* elemprop = app.add_subcommand(
            "elemprop", "randomized check of the transfer-operator identities");
        elemprop->add_option("--seed", seed, "RNG seed")->capture_default_str();
        elemprop->add_option("--count", count, "number of random instances")
            ->capture_default_str();
        elemprop->add_option("--tol", tol, "identity tolerance")
            ->default_str("1e-11");

        auto* export_cmd =
            app.add_subcommand("export", "write a filter in the JSON file format");
        export_cmd->add_option("--filter", filter_arg, filter_help)->required();
        export_cmd->add_option("--out", out_path, "output path (default stdout)");

        {
            std::vector<const char*> argv;
            argv.push_back("rl");
            for (const auto& a : args) argv.push_back(a.c_str());
            try {
                app.parse(static_cast<int>(argv.size()),
                          const_cast<char**>(argv.data()));
            } catch (const CLI::ParseError& e) {
                std::ostringstream help_out, help_err;
                const int rc = app.exit(e, help_out, help_err);
                out << help_out.str();
                err << help_err.str();
                return rc == 0 ? 0 : 2;
            }
        }

        if (*config) {
            emit(out, Json{{"tol", defaults.tol},
                           {"n", defaults.n},
                           {"K", defaults.K},
                           {"grid", defaults.grid},
                           {"floor_eps", defaults.floor_eps},
                           {"seed", defaults.seed},
                           {"count", defaults.count}});
            return 0;
        }

        if (*cycles) {
            emit(out, to_json(doubling_cycles(require_odd_p(p))));
            return 0;
        }

        if (*eigenbasis) {
            Json basis = Json::array();
            for (const LaurentPoly& h : continuous_eigenbasis(require_odd_p(p)))
                basis.push_back(to_json(h));
            emit(out, Json{{"p", p}, {"basis", std::move(basis)}});
            return 0;
        }

        if (*spectrum_cmd || *fixedspace || *verdict) {
            const Filter m0 = parse_filter(classify_filter_arg(filter_arg));
            const bool has_pair = !filter2_arg.empty();
            const Filter m0p =
                has_pair ? parse_filter(classify_filter_arg(filter2_arg)) : m0;
            if (m0.scale_N() != m0p.scale_N())
                throw UsageError("--filter and --filter2 must share the scale N");

            if (*verdict) {
                const CriterionReport report =
                    has_pair ? biorthogonality_verdict(m0, m0p, tol)
                             : orthogonality_verdict(m0, tol);
                emit(out, to_json(report));
                return 0;
            }

            const LawtonMatrix L = lawton_matrix(m0, m0p.m0());
            if (*spectrum_cmd) {
                Json eigenvalues = Json::array();
                for (const Complex& v : spectrum(L))
                    eigenvalues.push_back(Json::array({v.real(), v.imag()}));
                emit(out, Json{{"d", L.half_width()},
                               {"N", L.scale_N()},
                               {"eigenvalues", std::move(eigenvalues)}});
            } else {
                emit(out, to_json(fixed_space(L, Complex{lambda_re, lambda_im}, tol)));
            }
            return 0;
        }

        if (*cascade_cmd) {
            const Filter m0 = parse_filter(classify_filter_arg(filter_arg));
            const Filter m0p = filter2_arg.empty()
                                   ? m0
                                   : parse_filter(classify_filter_arg(filter2_arg));
            if (grid < 1) throw UsageError("--grid must be positive");
            const GridSpec spec{0.0, 2.0 * std::numbers::pi / grid,
                                static_cast<std::size_t>(grid)};
            const GridFunction g = h_cross_approx(m0, m0p, n, K, spec);
            if (format == "csv")
                write_csv(out, g);
            else
                emit(out, to_json(g));
            return 0;
        }

        if (*elemprop) {
            if (count < 1) throw UsageError("--count must be positive");
            const double etol = elemprop->count("--tol") ? tol : 1e-11;
            std::mt19937_64 rng(seed);
            Json failures = Json::array();
            for (int i = 0; i < count; ++i) {
                const int N = 2 + static_cast<int>(rng() % 3);
                const Filter m0(random_poly(rng, 8), N);
                const LaurentPoly m0p = random_poly(rng, 8);
                const LaurentPoly f = random_poly(rng, 8);
                const LaurentPoly g = random_poly(rng, 8);
                const int iter_n = 1 + static_cast<int>(rng() % 3);
                const ElempropReport rep =
                    check_elemprop(m0, m0p, f, g, iter_n, etol);
                if (!rep.all_hold())
                    failures.push_back(
                        Json{{"index", i},
                             {"residuals",
                              {rep.integral_identity.residual,
                               rep.pairing_identity.residual,
                               rep.pullout_identity.residual,
                               rep.iterated_integral.residual}}});
            }
            emit(out, Json{{"seed", seed},
                           {"count", count},
                           {"tol", etol},
                           {"all_hold", failures.empty()},
                           {"failures", std::move(failures)}});
            return 0;
        }

        if (*export_cmd) {
            const Filter m0 = parse_filter(classify_filter_arg(filter_arg));
            const Json j = to_json(m0);
            if (out_path.empty()) {
                emit(out, j);
            } else {
                std::ofstream file(out_path);
                if (!file) throw UsageError("cannot open output file: " + out_path);
                file << j.dump() << "\n";
            }
            return 0;
        }

        err << "error: no subcommand selected\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ruelle::cli
