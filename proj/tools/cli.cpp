#include "cli.hpp"

#include "CLI11.hpp"
#include "doflab/alignment.hpp"
#include "doflab/dof_formulas.hpp"
#include "doflab/genie_chain.hpp"
#include "doflab/json_io.hpp"
#include "doflab/multilook.hpp"
#include "doflab/network.hpp"
#include "doflab/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

namespace doflab::cli {

namespace {

struct Options {
    int k = 4;
    int mt = 0;
    int mr = 0;
    std::uint64_t seed = 1;
    int seeds = 1;
    int jobs = 1;
    std::string script;
    std::string regime = "half";
    int max = 40;
    std::string out;
    std::string format = "json";
    int beta = 1;
    std::string case_name;
    std::string input;
    std::vector<std::size_t> dims;
    int m = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DOF_LAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("DOF_LAB_SEED is not an unsigned integer: ") + env);
        }
    }
    return 1;
}

// Results are written back by index, so the output order never depends on the
// number of worker threads.
template <class T>
std::vector<T> parallel_map(std::size_t n, int jobs, const std::function<T(std::size_t)>& fn) {
    std::vector<T> results(n);
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), std::max<std::size_t>(n, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    results[i] = fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

std::uint64_t point_seed(const Options& o, std::size_t index) {
    return o.seeds == 1 ? o.seed : derive_seed(o.seed, "point", {index});
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        throw UsageError("cannot open output file: " + o.out);
    f << text;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (o.format == a)
            return;
    throw UsageError("unsupported --format for this command: " + o.format);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

int cmd_bounds(const Options& o, std::ostream& out) {
    require_format(o, {"json", "csv"});
    if (o.mt < 1 || o.mr < 1)
        throw UsageError("--mt and --mr must be positive");
    const DoFReport rep = classify(o.k, o.mt, o.mr);
    if (o.format == "json") {
        emit(o, to_json(rep).dump(2) + "\n", out);
        return ok;
    }
    const json j = to_json(rep);
    std::string header, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
        header += (header.empty() ? "" : ",") + it.key();
        const std::string v = it->is_null() ? "" : it->is_string() ? it->get<std::string>() : it->dump();
        row += (it == j.begin() ? "" : ",") + csv_escape(v);
    }
    emit(o, header + "\n" + row + "\n", out);
    return ok;
}

ChainScript load_script_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw UsageError("cannot read script file: " + path);
    return script_from_json(json::parse(f));
}

struct ChainRun {
    std::uint64_t seed = 0;
    ChainLedger ledger;
};

ChainRun run_chain_once(const Options& o, std::uint64_t seed) {
    ChainRun r;
    r.seed = seed;
    if (o.script == "alg1" || o.script == "alg2") {
        if (o.mt < 1 || o.mr < 1)
            throw UsageError("--script " + o.script + " needs --mt and --mr");
        const Network net = generate_generic(Topology::full_ic, 4, o.mt, o.mr, seed);
        r.ledger = o.script == "alg1" ? run_algorithm1(net) : run_algorithm2(net);
        return r;
    }
    const ChainScript s = o.input.empty() ? builtin_script(o.script) : load_script_file(o.input);
    r.ledger = run_script(network_for_script(s, seed), s);
    return r;
}

json chain_json(const ChainRun& r) {
    json j{{"seed", r.seed}};
    const json ledger = to_json(r.ledger);
    for (auto& [key, value] : ledger.items())
        j[key] = value;
    return j;
}

int cmd_chain(const Options& o, std::ostream& out) {
    require_format(o, {"json", "csv"});
    if (o.script.empty() && o.input.empty())
        throw UsageError("chain needs --script or --input");
    if (o.seeds < 1)
        throw UsageError("--seeds must be at least 1");
    const auto runs = parallel_map<ChainRun>(static_cast<std::size_t>(o.seeds), o.jobs,
                                             [&](std::size_t i) { return run_chain_once(o, point_seed(o, i)); });
    bool degraded = false;
    bool closed = true;
    for (const auto& r : runs) {
        degraded = degraded || r.ledger.degraded;
        try {
            ledger_bound(r.ledger);
        } catch (const ChainDoesNotClose&) {
            closed = false;
        }
    }
    if (o.format == "csv") {
        std::ostringstream s;
        s << "script,seed,bound,degraded,steps\n";
        for (const auto& r : runs) {
            std::string bound;
            try {
                bound = to_string(ledger_bound(r.ledger));
            } catch (const ChainDoesNotClose&) {
            }
            s << csv_escape(r.ledger.name) << ',' << r.seed << ',' << bound << ',' << (r.ledger.degraded ? "true" : "false")
              << ',' << r.ledger.trace.size() << '\n';
        }
        emit(o, s.str(), out);
    } else if (runs.size() == 1) {
        emit(o, chain_json(runs.front()).dump(2) + "\n", out);
    } else {
        json all = json::array();
        for (const auto& r : runs)
            all.push_back(chain_json(r));
        emit(o, all.dump(2) + "\n", out);
    }
    return degraded || !closed ? failed : ok;
}

int cmd_certify(const Options& o, std::ostream& out) {
    require_format(o, {"csv", "json"});
    CertRegime regime;
    try {
        regime = parse_cert_regime(o.regime);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto points = certify_points(regime, o.max);
    const auto reports = parallel_map<CertReport>(points.size(), o.jobs, [&](std::size_t i) {
        return certify_structured(points[i].first, points[i].second, regime, derive_seed(o.seed, "point", {i}));
    });
    bool all = true;
    for (const auto& r : reports)
        all = all && r.pass;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        emit(o, json{{"regime", o.regime}, {"max", o.max}, {"all_pass", all}, {"points", arr}}.dump(2) + "\n", out);
    } else {
        std::ostringstream s;
        s << "M,N,regime,a,steps,bound,pass\n";
        for (const auto& r : reports)
            s << r.M << ',' << r.N << ',' << cert_regime_name(r.regime) << ',' << r.a << ',' << r.steps.size() << ','
              << to_string(r.bound) << ',' << (r.pass ? "pass" : "fail") << '\n';
        emit(o, s.str(), out);
    }
    return all ? ok : failed;
}

int cmd_align(const Options& o, std::ostream& out) {
    require_format(o, {"json"});
    if (o.beta < 1)
        throw UsageError("--beta must be positive");
    Network net;
    PrecoderSet pre;
    if (o.case_name.empty()) {
        const int mt = o.beta * o.k;
        const int mr = o.beta * (o.k * o.k - o.k - 1);
        net = generate_generic(Topology::full_ic, o.k, mt, mr, o.seed);
        pre = design_k_user(net, o.beta);
    } else {
        FourToOneCase c;
        try {
            c = parse_four_to_one_case(o.case_name);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const int pm = c == FourToOneCase::c4_9 ? 4 : c == FourToOneCase::c3_5 ? 3 : 5;
        const int pn = c == FourToOneCase::c4_9 ? 9 : c == FourToOneCase::c3_5 ? 5 : 6;
        net = generate_generic(Topology::many_to_one, 4, o.beta * pm, o.beta * pn, o.seed);
        pre = design_four_to_one(net, c, o.seed);
    }
    const AlignmentReport rep = verify_alignment(net, pre, pre.d);
    json j{{"topology", topology_name(net.topology)},
           {"K", net.K},
           {"M_T", net.mt},
           {"M_R", net.mr},
           {"seed", o.seed},
           {"report", to_json(rep)},
           {"precoders", to_json(pre)}};
    emit(o, j.dump(2) + "\n", out);
    return rep.pass ? ok : failed;
}

int cmd_curve(const Options& o, std::ostream& out) {
    require_format(o, {"csv", "json"});
    if (o.max < 1)
        throw UsageError("--max must be positive");
    std::vector<std::pair<int, int>> fracs;
    for (int n = 1; n <= o.max; ++n)
        for (int m = 1; m <= n; ++m)
            if (std::gcd(m, n) == 1)
                fracs.emplace_back(m, n);
    std::sort(fracs.begin(), fracs.end(), [](auto a, auto b) {
        return static_cast<long>(a.first) * b.second < static_cast<long>(b.first) * a.second;
    });
    const auto reports =
        parallel_map<DoFReport>(fracs.size(), o.jobs, [&](std::size_t i) { return classify(o.k, fracs[i].first, fracs[i].second); });
    auto per_n = [](const Rational& v, int n) {
        Rational r = v / n;
        r.canonicalize();
        return to_string(r);
    };
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            const int n = r.point.N;
            arr.push_back(json{{"gamma", to_string(r.point.gamma)},
                               {"counting_over_n", per_n(r.counting, n)},
                               {"decomposition_over_n", per_n(r.decomposition, n)},
                               {"dstar_over_n", r.dstar ? json(per_n(*r.dstar, n)) : json(nullptr)},
                               {"best_over_n", per_n(r.best_known, n)},
                               {"status", status_name(r.status)}});
        }
        emit(o, json{{"K", o.k}, {"max", o.max}, {"points", arr}}.dump(2) + "\n", out);
        return ok;
    }
    std::ostringstream s;
    s << "gamma,counting_over_n,decomposition_over_n,dstar_over_n,best_over_n,status\n";
    for (const auto& r : reports) {
        const int n = r.point.N;
        s << to_string(r.point.gamma) << ',' << per_n(r.counting, n) << ',' << per_n(r.decomposition, n) << ','
          << (r.dstar ? per_n(*r.dstar, n) : std::string()) << ',' << per_n(r.best_known, n) << ',' << status_name(r.status)
          << '\n';
    }
    emit(o, s.str(), out);
    return ok;
}

int cmd_multilook(const Options& o, std::ostream& out) {
    require_format(o, {"json"});
    if (!o.input.empty()) {
        std::ifstream f(o.input);
        if (!f)
            throw UsageError("cannot read input file: " + o.input);
        const json j = json::parse(f);
        std::vector<Subspace> spaces;
        for (const auto& s : j.at("subspaces"))
            spaces.push_back(subspace_from_json(s));
        const std::size_t M = j.contains("M") ? j.at("M").get<std::size_t>() : spaces.empty() ? 0 : spaces.front().ambient();
        const MultilookResult r = build_full_sets(spaces, M);
        emit(o, json{{"M", M}, {"result", to_json(r)}}.dump(2) + "\n", out);
        return ok;
    }
    if (o.dims.empty() || o.m < 1)
        throw UsageError("multilook needs --input, or --dims with --m");
    const std::size_t M = static_cast<std::size_t>(o.m);
    std::vector<Subspace> spaces;
    for (std::size_t i = 0; i < o.dims.size(); ++i) {
        if (o.dims[i] > M)
            throw UsageError("subspace dimension exceeds --m");
        spaces.push_back(random_generic(M, o.dims[i], derive_seed(o.seed, "multilook", {i})));
    }
    const MultilookResult r = build_full_sets(spaces, M);
    json j{{"M", M},
           {"dims", o.dims},
           {"seed", o.seed},
           {"l_sigma_generic", l_sigma_generic(o.dims, M)},
           {"result", to_json(r)}};
    emit(o, j.dump(2) + "\n", out);
    return r.l_sigma == l_sigma_generic(o.dims, M) ? ok : failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    try {
        o.seed = default_seed();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    CLI::App app{"Degrees-of-freedom bounds, genie chains and alignment checks for MIMO interference networks", "doflab"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "Master seed (default: DOF_LAB_SEED or 1)");
        sub->add_option("--out", o.out, "Write output to this file instead of stdout");
        sub->add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    };

    auto* bounds = app.add_subcommand("bounds", "Counting, decomposition and best known DoF for one point");
    bounds->add_option("--k", o.k, "Number of users")->check(CLI::Range(4, 1000));
    bounds->add_option("--mt", o.mt, "Transmit antennas")->required();
    bounds->add_option("--mr", o.mr, "Receive antennas")->required();
    bounds->add_option("--format", o.format, "json or csv");
    common(bounds);

    auto* chain = app.add_subcommand("chain", "Run a genie chain and print its ledger");
    chain->add_option("--script", o.script, "Builtin script, alg1, alg2 or four_to_one_MxN");
    chain->add_option("--input", o.input, "Chain script JSON file");
    chain->add_option("--mt", o.mt, "Transmit antennas (alg1, alg2)");
    chain->add_option("--mr", o.mr, "Receive antennas (alg1, alg2)");
    chain->add_option("--seeds", o.seeds, "Number of seeds to sweep")->check(CLI::PositiveNumber);
    chain->add_option("--format", o.format, "json or csv");
    common(chain);

    auto* certify = app.add_subcommand("certify", "Exact certificates on the structured channels");
    certify->add_option("--regime", o.regime, "half or p3");
    certify->add_option("--max", o.max, "Largest N to check");
    o.format = "csv";
    certify->add_option("--format", o.format, "csv or json");
    common(certify);

    auto* align = app.add_subcommand("align", "Design and verify linear alignment precoders");
    align->add_option("--k", o.k, "Users of the K-user design")->check(CLI::Range(3, 64));
    align->add_option("--beta", o.beta, "Antenna scaling");
    align->add_option("--case", o.case_name, "Four-to-one case: 4/9, 3/5 or 5/6");
    common(align);

    auto* curve = app.add_subcommand("curve", "Per-antenna DoF curve over gamma = M/N");
    curve->add_option("--k", o.k, "Number of users")->check(CLI::Range(4, 1000));
    curve->add_option("--max", o.max, "Largest denominator of gamma");
    curve->add_option("--format", o.format, "csv or json");
    common(curve);

    auto* multilook = app.add_subcommand("multilook", "Group subspaces into full sets");
    multilook->add_option("--input", o.input, "JSON file with M and a list of subspaces");
    multilook->add_option("--dims", o.dims, "Dimensions of generic subspaces")->delimiter(',');
    multilook->add_option("--m", o.m, "Ambient dimension for --dims");
    common(multilook);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    // certify and curve default to CSV; the others to JSON.
    const bool format_given = (bounds->parsed() && bounds->count("--format")) || (chain->parsed() && chain->count("--format")) ||
                              (certify->parsed() && certify->count("--format")) || (curve->parsed() && curve->count("--format"));
    if (!format_given)
        o.format = certify->parsed() || curve->parsed() ? "csv" : "json";
    if (curve->parsed() && !curve->count("--max"))
        o.max = 12;

    try {
        if (bounds->parsed())
            return cmd_bounds(o, out);
        if (chain->parsed())
            return cmd_chain(o, out);
        if (certify->parsed())
            return cmd_certify(o, out);
        if (align->parsed())
            return cmd_align(o, out);
        if (curve->parsed())
            return cmd_curve(o, out);
        if (multilook->parsed())
            return cmd_multilook(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "failed: " << e.what() << '\n';
        return failed;
    }
    return usage;
}

}  // namespace doflab::cli
