#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ebw/decode.hpp"
#include "ebw/design.hpp"
#include "ebw/eaqecc.hpp"
#include "ebw/errors.hpp"
#include "ebw/evenfree.hpp"
#include "ebw/io.hpp"
#include "ebw/tanner.hpp"
#include "ebw/version.hpp"

using nlohmann::json;

namespace {

struct LoadedInput {
    ebw::gf2::BinaryMatrix h{1, 1};
    std::optional<ebw::designs::Design> design;
    std::string path;
    std::string fingerprint;
};

LoadedInput load_input(const std::string& path) {
    LoadedInput in;
    in.path = path;
    in.fingerprint = ebw::io::fingerprint_file(path);
    if (ebw::io::detect_format(path) == ebw::io::InputFormat::design_json) {
        auto d = ebw::io::read_design_json_file(path);
        in.h = ebw::designs::incidence_matrix(d);
        in.design = std::move(d);
    } else {
        in.h = ebw::io::read_alist_file(path);
    }
    return in;
}

json envelope(const std::string& command, const LoadedInput* in) {
    json j;
    j["tool"] = "ebw";
    j["version"] = ebw::kVersion;
    j["command"] = command;
    if (in) {
        j["input"] = in->path;
        j["input_fingerprint"] = in->fingerprint;
    }
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json json_pbd(const ebw::designs::PbdReport& r) {
    json j;
    j["structurally_valid"] = r.structurally_valid;
    if (!r.structurally_valid) {
        j["structural_error"] = r.structural_error;
        j["offending_block"] = r.offending_block;
        return j;
    }
    j["is_pbd"] = r.is_pbd;
    if (!r.is_pbd && r.counterexample_pair) {
        j["counterexample_pair"] = {r.counterexample_pair->first, r.counterexample_pair->second};
        j["counterexample_coverage"] = r.counterexample_coverage;
    }
    j["block_sizes"] = r.block_sizes;
    j["equireplicate"] = r.equireplicate;
    if (r.equireplicate) j["replication_number"] = r.replication_number;
    j["odd_replicate"] = r.odd_replicate;
    j["is_steiner"] = r.is_steiner;
    j["is_trivial"] = r.is_trivial;
    return j;
}

json json_cycles(const ebw::tanner::CycleReport& r) {
    json j;
    if (r.girth)
        j["girth"] = *r.girth;
    else
        j["girth"] = nullptr;
    j["four_cycles"] = r.four_cycles;
    j["six_cycles"] = r.six_cycles;
    if (r.predicted_six) j["predicted_six_cycles"] = *r.predicted_six;
    return j;
}

json json_evenfree(const ebw::evenfree::EvenFreeReport& r) {
    json j;
    j["cap"] = r.cap;
    j["max_verified_r"] = r.max_verified_r;
    j["complete"] = r.complete;
    j["nodes"] = r.nodes;
    if (r.witness)
        j["witness"] = *r.witness;
    else
        j["witness"] = nullptr;
    return j;
}

json json_quantum(const ebw::eaqecc::QuantumDistance& q) {
    json j;
    switch (q.status) {
    case ebw::eaqecc::QuantumDistance::Status::value:
        j["status"] = "value";
        j["d"] = q.d;
        break;
    case ebw::eaqecc::QuantumDistance::Status::degenerate:
        j["status"] = "degenerate";
        break;
    case ebw::eaqecc::QuantumDistance::Status::above_cap:
        j["status"] = "above_cap";
        break;
    case ebw::eaqecc::QuantumDistance::Status::infeasible:
        j["status"] = "infeasible";
        break;
    }
    return j;
}

json json_params(const ebw::eaqecc::EaqeccParams& p) {
    json j;
    j["n"] = p.n;
    j["rank"] = p.rank;
    j["classical_k"] = p.classical_k;
    j["c"] = p.c;
    j["quantum_k"] = p.quantum_k;
    j["one_ebit"] = p.one_ebit;
    j["cycles"] = json_cycles(p.cycles);
    j["distance_cap"] = p.distance_cap;
    if (p.classical_d)
        j["classical_d"] = *p.classical_d;
    else
        j["classical_d"] = nullptr;
    if (p.quantum_d) j["quantum_d"] = json_quantum(*p.quantum_d);
    return j;
}

json json_structure(const ebw::eaqecc::OneEbitCheck& c) {
    json j;
    j["ok"] = c.ok;
    if (!c.ok) {
        j["violated_condition"] = c.condition;
        j["detail"] = c.detail;
        if (c.witness_a >= 0) j["witness_a"] = c.witness_a;
        if (c.witness_b >= 0) j["witness_b"] = c.witness_b;
    }
    return j;
}

json json_bounds(const ebw::eaqecc::BoundsReport& b) {
    json j;
    j["n"] = b.n;
    auto put = [&j](const char* key, const std::optional<long long>& v) {
        if (v)
            j[key] = *v;
        else
            j[key] = nullptr;
    };
    put("mu", b.mu);
    put("v", b.v);
    j["odd_replication_admissible"] = b.odd_replication_admissible;
    put("hillebrandt_rank_lower", b.hillebrandt_rank_lower);
    put("k_lower_raw", b.k_lower_raw);
    put("k_lower", b.k_lower);
    put("k_upper", b.k_upper);
    if (b.sts_window) {
        j["sts_k_window"] = {{"k_lower", b.sts_window->k_lower},
                             {"k_upper", b.sts_window->k_upper},
                             {"t", b.sts_window->t},
                             {"u", b.sts_window->u}};
    }
    put("computed_rank", b.computed_rank);
    put("computed_k", b.computed_k);
    json viols = json::array();
    for (const auto& v : b.violations) {
        viols.push_back({{"bound", v.bound},
                         {"predicted_lo", v.predicted_lo},
                         {"predicted_hi", v.predicted_hi},
                         {"computed", v.computed}});
    }
    j["bound_violations"] = viols;
    j["consistent"] = b.consistent;
    return j;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

std::vector<double> parse_p_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        double val = 0.0;
        try {
            val = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw ebw::ParseError("bad probability value '" + item + "'");
        }
        if (pos != item.size()) throw ebw::ParseError("bad probability value '" + item + "'");
        out.push_back(val);
    }
    if (out.empty()) throw ebw::ParseError("empty probability list");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"design-built entanglement-assisted LDPC codes: construction, "
                 "characterization, bounds, decoding"};
    app.set_version_flag("--version", ebw::kVersion);
    app.require_subcommand(1);
    std::string command_echo = join_args(argc, argv);

    // construct
    auto* construct = app.add_subcommand("construct", "build a design and emit design JSON");
    std::string family;
    std::vector<long long> params;
    std::string out_path;
    construct->add_option("family", family, "sts | pg | ag | plane")->required();
    construct->add_option("params", params, "family parameters")->expected(1, 2);
    construct->add_option("-o,--output", out_path, "output file (default: standard output)");

    // verify
    auto* verify = app.add_subcommand("verify", "check a design file for the balance property");
    std::string verify_input;
    verify->add_option("input", verify_input, "design JSON file")->required();

    // characterize
    auto* characterize =
        app.add_subcommand("characterize", "full code report for a design or alist matrix");
    std::string chr_input;
    int chr_distance_cap = 8;
    int chr_evenfree_cap = 8;
    bool chr_quantum = false;
    long long chr_budget = 1'000'000'000;
    characterize->add_option("input", chr_input, "design JSON or alist file")->required();
    characterize->add_option("--distance-cap", chr_distance_cap,
                             "largest distance certified by search");
    characterize->add_option("--evenfree-cap", chr_evenfree_cap,
                             "largest even configuration size searched");
    characterize->add_flag("--quantum-distance", chr_quantum,
                           "also search the quantum minimum distance");
    characterize->add_option("--budget", chr_budget, "search node budget");

    // distance
    auto* distance = app.add_subcommand("distance", "minimum distance search");
    std::string dst_input;
    int dst_cap = 8;
    bool dst_quantum = false;
    distance->add_option("input", dst_input, "design JSON or alist file")->required();
    distance->add_option("--cap", dst_cap, "search cap");
    distance->add_flag("--quantum", dst_quantum, "quantum distance instead of classical");

    // cycles
    auto* cycles = app.add_subcommand("cycles", "girth and short cycle census");
    std::string cyc_input;
    long long cyc_mu = 0;
    cycles->add_option("input", cyc_input, "design JSON or alist file")->required();
    cycles->add_option("--mu", cyc_mu, "column weight for the closed-form six cycle count");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "dimension and rank bounds");
    std::string bnd_input;
    long long bnd_n = 0, bnd_mu = 0;
    bounds->add_option("input", bnd_input, "design JSON or alist file (audit mode)");
    bounds->add_option("--n", bnd_n, "code length (arithmetic mode)");
    bounds->add_option("--mu", bnd_mu, "column weight (arithmetic mode)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "depolarizing channel Monte Carlo");
    std::string sim_input;
    std::string sim_p = "0.01";
    std::uint64_t sim_trials = 10000;
    std::uint64_t sim_seed = 1;
    std::string sim_decoder = "syndrome";
    int sim_tmax = -1;
    int sim_iters = 50;
    int sim_threads = 0;
    simulate->add_option("input", sim_input, "design JSON or alist file")->required();
    simulate->add_option("--p", sim_p, "comma separated depolarizing probabilities");
    simulate->add_option("--trials", sim_trials, "trials per probability");
    simulate->add_option("--seed", sim_seed, "master seed");
    simulate->add_option("--decoder", sim_decoder, "syndrome | bp");
    simulate->add_option("--t-max", sim_tmax, "syndrome table radius (default: from distance)");
    simulate->add_option("--max-iters", sim_iters, "belief propagation iteration cap");
    simulate->add_option("--threads", sim_threads, "worker threads (0: EBW_THREADS or cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) {
            ebw::designs::Design d;
            if (family == "sts") {
                if (params.size() != 1)
                    throw ebw::AdmissibilityError("sts takes one parameter: v");
                d = ebw::designs::construct_sts(static_cast<int>(params[0]));
            } else if (family == "pg") {
                if (params.size() != 1)
                    throw ebw::AdmissibilityError("pg takes one parameter: m");
                d = ebw::designs::construct_pg_lines(static_cast<int>(params[0]));
            } else if (family == "ag") {
                if (params.size() != 2)
                    throw ebw::AdmissibilityError("ag takes two parameters: m q");
                d = ebw::designs::construct_ag_lines(static_cast<int>(params[0]),
                                                     static_cast<int>(params[1]));
            } else if (family == "plane") {
                if (params.size() != 1)
                    throw ebw::AdmissibilityError("plane takes one parameter: q");
                d = ebw::designs::construct_projective_plane(static_cast<int>(params[0]));
            } else {
                throw ebw::AdmissibilityError("unknown family '" + family +
                                              "' (expected sts, pg, ag, plane)");
            }
            if (out_path.empty()) {
                ebw::io::write_design_json(std::cout, d);
            } else {
                ebw::io::write_design_json_file(out_path, d);
            }
            std::cerr << "constructed " << family << " design: " << d.v << " points, "
                      << d.blocks.size() << " blocks\n";
        } else if (verify->parsed()) {
            auto in = load_input(verify_input);
            if (!in.design) throw ebw::ParseError("verify expects a design JSON file");
            auto rep = ebw::designs::verify_pbd(*in.design);
            auto j = envelope(command_echo, &in);
            j["v"] = in.design->v;
            j["blocks"] = in.design->blocks.size();
            j["pbd"] = json_pbd(rep);
            emit(j);
            std::cerr << (rep.is_pbd ? "balanced" : "not balanced") << " ("
                      << in.design->blocks.size() << " blocks on " << in.design->v
                      << " points)\n";
        } else if (characterize->parsed()) {
            auto in = load_input(chr_input);
            auto params_out =
                ebw::eaqecc::characterize(in.h, chr_distance_cap, chr_quantum);
            auto structure = ebw::eaqecc::one_ebit_structure_check(in.h);
            bool equiv = ebw::eaqecc::pbd_equivalence_check(in.h);
            auto audit = ebw::eaqecc::audit_bounds(in.h);

            auto j = envelope(command_echo, &in);
            j["params"] = json_params(params_out);
            j["one_ebit_structure"] = json_structure(structure);
            j["pbd_equivalent"] = equiv;
            j["bounds"] = json_bounds(audit);
            if (in.design) {
                j["pbd"] = json_pbd(ebw::designs::verify_pbd(*in.design));
                auto ef = ebw::evenfree::min_even_configuration(*in.design, chr_evenfree_cap,
                                                                chr_budget);
                j["evenfree"] = json_evenfree(ef);
            }
            emit(j);
            std::cerr << "[[" << params_out.n << "," << params_out.quantum_k << ";"
                      << params_out.c << "]] one_ebit=" << (params_out.one_ebit ? "yes" : "no");
            if (params_out.cycles.girth)
                std::cerr << " girth=" << *params_out.cycles.girth;
            if (params_out.classical_d)
                std::cerr << " d=" << *params_out.classical_d;
            std::cerr << "\n";
        } else if (distance->parsed()) {
            auto in = load_input(dst_input);
            auto j = envelope(command_echo, &in);
            bool infeasible = false;
            if (dst_quantum) {
                auto q = ebw::eaqecc::quantum_min_distance(in.h, dst_cap);
                j["quantum_d"] = json_quantum(q);
                infeasible = q.status == ebw::eaqecc::QuantumDistance::Status::infeasible;
            } else {
                auto d = ebw::evenfree::classical_min_distance(in.h, dst_cap);
                j["cap"] = dst_cap;
                if (d)
                    j["classical_d"] = *d;
                else
                    j["classical_d"] = nullptr;
            }
            emit(j);
            if (infeasible)
                throw ebw::InfeasibleError("distance search exceeded its budget");
        } else if (cycles->parsed()) {
            auto in = load_input(cyc_input);
            std::optional<long long> mu;
            if (cycles->count("--mu")) {
                mu = cyc_mu;
            } else if (in.design) {
                auto rep = ebw::designs::verify_pbd(*in.design);
                if (rep.structurally_valid && rep.block_sizes.size() == 1)
                    mu = *rep.block_sizes.begin();
            }
            auto rep = ebw::tanner::analyze_cycles(in.h, mu);
            auto j = envelope(command_echo, &in);
            j["cycles"] = json_cycles(rep);
            emit(j);
        } else if (bounds->parsed()) {
            json j;
            if (!bnd_input.empty()) {
                auto in = load_input(bnd_input);
                j = envelope(command_echo, &in);
                j["bounds"] = json_bounds(ebw::eaqecc::audit_bounds(in.h));
            } else {
                if (bnd_n <= 0 || bnd_mu <= 0)
                    throw ebw::AdmissibilityError(
                        "bounds needs an input file or both --n and --mu");
                j = envelope(command_echo, nullptr);
                j["bounds"] = json_bounds(ebw::eaqecc::dimension_bounds(bnd_n, bnd_mu));
            }
            emit(j);
        } else if (simulate->parsed()) {
            auto in = load_input(sim_input);
            auto ps = parse_p_list(sim_p);
            ebw::decode::DecoderKind kind;
            if (sim_decoder == "syndrome")
                kind = ebw::decode::DecoderKind::syndrome_table;
            else if (sim_decoder == "bp" || sim_decoder == "sum-product")
                kind = ebw::decode::DecoderKind::sum_product;
            else
                throw ebw::AdmissibilityError("unknown decoder '" + sim_decoder +
                                              "' (expected syndrome or bp)");

            auto rank = ebw::gf2::rank(in.h);
            auto c = ebw::gf2::rank(ebw::gf2::gram(in.h));
            long long quantum_k = static_cast<long long>(in.h.cols()) -
                                  2 * static_cast<long long>(rank) + static_cast<long long>(c);

            ebw::decode::SimOptions opts;
            opts.bp_max_iters = sim_iters;
            opts.threads = sim_threads;
            if (sim_tmax > 0) {
                opts.t_max = sim_tmax;
            } else if (kind == ebw::decode::DecoderKind::syndrome_table) {
                auto d = ebw::evenfree::classical_min_distance(in.h, 8);
                opts.t_max = d ? std::max(1, (*d - 1) / 2) : 1;
            }

            for (double p : ps) {
                auto res = ebw::decode::simulate_depolarizing(in.h, {p}, sim_trials, kind,
                                                              sim_seed, opts);
                json line;
                line["n"] = in.h.cols();
                line["k"] = quantum_k;
                line["c"] = c;
                line["p"] = p;
                line["trials"] = res.trials;
                line["decoder"] = res.decoder;
                line["seed"] = res.seed;
                line["block_errors"] = res.block_errors;
                line["x_failures"] = res.x_failures;
                line["z_failures"] = res.z_failures;
                line["rate"] = res.rate;
                line["ci_lo"] = res.wilson_lo;
                line["ci_hi"] = res.wilson_hi;
                line["rng"] = res.rng;
                if (kind == ebw::decode::DecoderKind::syndrome_table)
                    line["t_max"] = opts.t_max;
                else
                    line["max_iters"] = opts.bp_max_iters;
                line["input_fingerprint"] = in.fingerprint;
                std::cout << line.dump() << "\n";
                std::cerr << "p=" << p << " rate=" << res.rate << " [" << res.wilson_lo << ", "
                          << res.wilson_hi << "]\n";
            }
        }
    } catch (const ebw::AdmissibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ebw::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ebw::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
