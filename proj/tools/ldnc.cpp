#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldnc/capacity.hpp"
#include "ldnc/codec.hpp"
#include "ldnc/io.hpp"
#include "ldnc/network.hpp"
#include "ldnc/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

struct ParamFlags {
    int n1 = 0, n2 = 0, n3 = 0, n4 = 0, m = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n1", n1, "gain S->A")->required()->check(CLI::NonNegativeNumber);
        cmd->add_option("--n2", n2, "gain S->B")->required()->check(CLI::NonNegativeNumber);
        cmd->add_option("--n3", n3, "gain A->D")->required()->check(CLI::NonNegativeNumber);
        cmd->add_option("--n4", n4, "gain B->D")->required()->check(CLI::NonNegativeNumber);
        cmd->add_option("--m", m, "disturber gain M->A and M->B")
            ->required()
            ->check(CLI::NonNegativeNumber);
    }

    ldnc::NetworkParams params() const { return ldnc::NetworkParams::make(n1, n2, n3, n4, m); }
};

void print_capacity_table(const ldnc::CapacityReport& rep) {
    const auto& p = rep.params;
    std::cout << "params: n1=" << p.n1 << " n2=" << p.n2 << " n3=" << p.n3 << " n4=" << p.n4
              << " m=" << p.m << " q=" << p.q() << "\n";
    std::cout << "case: " << ldnc::to_string(rep.regime.id)
              << (rep.regime.swapped ? " (relays swapped)" : "") << "\n";
    std::cout << "capacity: " << rep.capacity << "\n";
    if (rep.k) std::cout << "k: " << *rep.k << "\n";
    if (rep.j) std::cout << "j: " << *rep.j << "\n";
    std::cout << "bounds:";
    for (const auto& [name, v] : rep.bound_terms) std::cout << ' ' << name << '=' << v;
    std::cout << "\ncut: " << rep.cut << "\n";
}

// "N" or "LO..HI", inclusive and nonnegative.
std::pair<int, int> parse_range(const std::string& s) {
    const auto bad = [&] {
        throw CLI::ValidationError("range", "malformed range '" + s + "' (want N or LO..HI)");
    };
    const auto num = [&](const std::string& t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) bad();
        return std::stoi(t);
    };
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = num(s);
        return {v, v};
    }
    const int lo = num(s.substr(0, dots));
    const int hi = num(s.substr(dots + 2));
    if (lo > hi) bad();
    return {lo, hi};
}

int run_capacity(const ParamFlags& f, bool json) {
    const auto rep = ldnc::capacity(f.params());
    if (json)
        std::cout << ldnc::to_json(rep).dump(2) << "\n";
    else
        print_capacity_table(rep);
    return kExitOk;
}

int run_construct(const ParamFlags& f, const std::string& out_ga, const std::string& out_gb) {
    const auto p = f.params();
    const auto scheme = ldnc::construct_scheme(p);
    try {
        ldnc::write_matrix_file(out_ga, scheme.g_a);
        ldnc::write_matrix_file(out_gb, scheme.g_b);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    std::cout << "q: " << p.q() << "\n";
    std::cout << "rate: " << ldnc::achievable_rate(p, scheme) << "\n";
    return kExitOk;
}

int run_rate(const ParamFlags& f, const std::string& ga_path, const std::string& gb_path,
             bool json) {
    const auto p = f.params();
    ldnc::CodingScheme scheme;
    try {
        scheme.g_a = ldnc::read_matrix_file(ga_path);
        scheme.g_b = ldnc::read_matrix_file(gb_path);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    const auto q = static_cast<std::size_t>(p.q());
    if (scheme.g_a.rows() != q || scheme.g_a.cols() != q || scheme.g_b.rows() != q ||
        scheme.g_b.cols() != q) {
        std::cerr << "error: matrices must be " << q << "x" << q << " for these parameters\n";
        return kExitUsage;
    }
    const auto gs = ldnc::compose_gs(p, scheme);
    const auto gm = ldnc::compose_gm(p, scheme);
    const auto rank_gs = ldnc::rank(gs);
    const auto inter = ldnc::rank_intersection(gs, gm);
    if (json) {
        nlohmann::json j = {{"params", ldnc::to_json(p)},
                            {"rate", rank_gs - inter},
                            {"rank_gs", rank_gs},
                            {"rank_intersection", inter}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "q: " << p.q() << "\n";
        std::cout << "rank(G_S): " << rank_gs << "\n";
        std::cout << "rank(G_S ^ G_M): " << inter << "\n";
        std::cout << "rate: " << rank_gs - inter << "\n";
    }
    return kExitOk;
}

int run_simulate(const ParamFlags& f, int trials, std::uint64_t seed, bool json) {
    const auto p = f.params();
    const auto q = static_cast<std::size_t>(p.q());
    const auto scheme = ldnc::construct_scheme(p);
    const auto cb = ldnc::build_codebook(ldnc::compose_gs(p, scheme), ldnc::compose_gm(p, scheme));
    std::mt19937_64 rng(seed);
    int ok = 0;
    for (int t = 0; t < trials; ++t) {
        ldnc::Gf2Matrix msg(static_cast<std::size_t>(cb.rate), 1);
        for (std::size_t i = 0; i < msg.rows(); ++i) msg.set(i, 0, rng() & 1);
        ldnc::Gf2Matrix x_m(q, 1);
        for (std::size_t i = 0; i < q; ++i) x_m.set(i, 0, rng() & 1);
        const auto y = ldnc::transmit(p, scheme, ldnc::encode(cb, msg), x_m);
        const auto decoded = ldnc::decode(cb, y);
        if (decoded && *decoded == msg) ++ok;
    }
    if (json) {
        nlohmann::json j = {{"params", ldnc::to_json(p)}, {"rate", cb.rate},
                            {"trials", trials},          {"decoded", ok},
                            {"seed", seed},              {"passed", ok == trials}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "q: " << p.q() << "\n";
        std::cout << "rate: " << cb.rate << "\n";
        std::cout << "decoded: " << ok << "/" << trials << "\n";
    }
    return ok == trials ? kExitOk : kExitIo;
}

int run_verify(int max_gain, int bits_cap, unsigned jobs, bool json) {
    const auto rep = ldnc::verify_grid(max_gain, bits_cap, jobs);
    if (json) {
        std::cout << ldnc::to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "grid: [0," << rep.max_gain << "]^5, " << rep.total_points << " points\n";
        std::cout << "bit budget: " << rep.bit_budget << "\n";
        for (const auto& mm : rep.mismatches)
            std::cout << "MISMATCH n1=" << mm.params.n1 << " n2=" << mm.params.n2
                      << " n3=" << mm.params.n3 << " n4=" << mm.params.n4
                      << " m=" << mm.params.m << " closed=" << mm.closed_form
                      << " brute=" << mm.brute_force << "\n";
        for (const auto& p : rep.skipped)
            std::cout << "skipped n1=" << p.n1 << " n2=" << p.n2 << " n3=" << p.n3
                      << " n4=" << p.n4 << " m=" << p.m << "\n";
        std::cout << "mismatches: " << rep.mismatches.size() << "\n";
        std::cout << "skipped: " << rep.skipped.size() << "\n";
        std::cout << (rep.passed() ? "VERIFIED" : "FAILED") << "\n";
    }
    return rep.passed() ? kExitOk : kExitIo;
}

int run_sweep(const std::vector<std::string>& ranges, bool json, bool csv) {
    std::pair<int, int> r[5];
    for (int i = 0; i < 5; ++i) r[i] = parse_range(ranges[i]);
    nlohmann::json rows = nlohmann::json::array();
    if (csv) std::cout << "n1,n2,n3,n4,m,q,case,capacity,cut\n";
    for (int n1 = r[0].first; n1 <= r[0].second; ++n1)
        for (int n2 = r[1].first; n2 <= r[1].second; ++n2)
            for (int n3 = r[2].first; n3 <= r[2].second; ++n3)
                for (int n4 = r[3].first; n4 <= r[3].second; ++n4)
                    for (int m = r[4].first; m <= r[4].second; ++m) {
                        const auto p = ldnc::NetworkParams::make(n1, n2, n3, n4, m);
                        const auto rep = ldnc::capacity(p);
                        if (csv) {
                            std::cout << n1 << ',' << n2 << ',' << n3 << ',' << n4 << ',' << m
                                      << ',' << p.q() << ',' << ldnc::to_string(rep.regime.id)
                                      << ',' << rep.capacity << ',' << rep.cut << "\n";
                        } else if (json) {
                            rows.push_back(ldnc::to_json(rep));
                        } else {
                            std::cout << "n1=" << n1 << " n2=" << n2 << " n3=" << n3
                                      << " n4=" << n4 << " m=" << m << " q=" << p.q() << " "
                                      << ldnc::to_string(rep.regime.id) << " C=" << rep.capacity
                                      << " cut=" << rep.cut << "\n";
                        }
                    }
    if (json && !csv) std::cout << rows.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear capacity of the diamond relay network with a disturbing node"};
    app.require_subcommand(1);

    ParamFlags cap_f, con_f, rate_f, sim_f;
    bool cap_json = false, rate_json = false, sim_json = false, ver_json = false;
    bool sweep_json = false, sweep_csv = false;
    std::string out_ga, out_gb, ga_path, gb_path;
    int trials = 100, max_gain = 0, bits_cap = 20;
    unsigned jobs = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> sweep_ranges(5, "0");

    auto* cap = app.add_subcommand("capacity", "closed-form capacity report for one instance");
    cap_f.attach(cap);
    cap->add_flag("--json", cap_json, "emit JSON");

    auto* con = app.add_subcommand("construct", "write optimal relay coding matrices");
    con_f.attach(con);
    con->add_option("--out-ga", out_ga, "output path for G_A")->required();
    con->add_option("--out-gb", out_gb, "output path for G_B")->required();

    auto* rate = app.add_subcommand("rate", "rate of user-supplied coding matrices");
    rate_f.attach(rate);
    rate->add_option("--ga", ga_path, "path to G_A matrix file")->required();
    rate->add_option("--gb", gb_path, "path to G_B matrix file")->required();
    rate->add_flag("--json", rate_json, "emit JSON");

    auto* sim = app.add_subcommand("simulate", "end-to-end encode/transmit/decode round trips");
    sim_f.attach(sim);
    sim->add_option("--trials", trials, "number of random round trips")
        ->check(CLI::NonNegativeNumber);
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_flag("--json", sim_json, "emit JSON");

    auto* ver = app.add_subcommand("verify", "brute-force certification of the closed forms");
    ver->add_option("--max-gain", max_gain, "grid upper bound per gain")
        ->required()
        ->check(CLI::NonNegativeNumber);
    ver->add_option("--bits-cap", bits_cap, "skip points whose enumeration exceeds this many bits")
        ->check(CLI::NonNegativeNumber);
    ver->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    ver->add_flag("--json", ver_json, "emit JSON");

    auto* sweep = app.add_subcommand("sweep", "capacity table over parameter ranges");
    sweep->add_option("--n1", sweep_ranges[0], "range for n1 (N or LO..HI)");
    sweep->add_option("--n2", sweep_ranges[1], "range for n2");
    sweep->add_option("--n3", sweep_ranges[2], "range for n3");
    sweep->add_option("--n4", sweep_ranges[3], "range for n4");
    sweep->add_option("--m", sweep_ranges[4], "range for m");
    sweep->add_flag("--json", sweep_json, "emit JSON");
    sweep->add_flag("--csv", sweep_csv, "emit CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cap->parsed()) return run_capacity(cap_f, cap_json);
        if (con->parsed()) return run_construct(con_f, out_ga, out_gb);
        if (rate->parsed()) return run_rate(rate_f, ga_path, gb_path, rate_json);
        if (sim->parsed()) return run_simulate(sim_f, trials, seed, sim_json);
        if (ver->parsed()) return run_verify(max_gain, bits_cap, jobs, ver_json);
        if (sweep->parsed()) return run_sweep(sweep_ranges, sweep_json, sweep_csv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
