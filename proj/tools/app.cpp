// Copyright 2026 The srent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "app.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "srent/acceptance.hpp"
#include "srent/chaos.hpp"
#include "srent/clifford.hpp"
#include "srent/errors.hpp"
#include "srent/io.hpp"
#include "srent/magic.hpp"
#include "srent/parallel.hpp"
#include "srent/power.hpp"
#include "srent/protocol.hpp"

namespace srent::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::uint64_t seed = 1;
    unsigned threads = 0;
    bool force = false;
    int n = 0;
    std::string state = "zero";
    std::string circuit;
    std::string unitary;
    std::string out_path;
    std::string method = "trace";
    std::vector<double> alphas;
    std::size_t samples = 1000;
    std::size_t cliffords = 2000;
    std::uint64_t shots = 0;
    bool exact = false;
    std::string batch_csv;
    double theta = std::numbers::pi / 4.0;
    std::string k_range = "0:8";
    std::string p1;
    std::string p2;
    std::string mode = "exact";
    double m2 = -1.0;
    std::vector<int> only;
};

Json nullable(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

/// Infinity is not valid JSON; report it as the string "inf".
Json number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

void emit(const Json& doc, const Options& opt, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (opt.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out_path);
    if (!file) throw ParseError("cannot write " + opt.out_path);
    file << text;
}

int require_n(const Options& opt) {
    if (opt.n < 1) throw DimensionError("--n is required");
    return opt.n;
}

UnitaryMatrix resolve_unitary(const Options& opt) {
    if (!opt.circuit.empty()) return circuits::to_unitary(io::read_circuit(opt.circuit, opt.n));
    const int n = require_n(opt);
    if (opt.unitary.empty() || opt.unitary == "identity") return UnitaryMatrix::identity(n);
    if (opt.unitary.rfind("haar:", 0) == 0) return states::haar_unitary(n, std::stoull(opt.unitary.substr(5)));
    if (opt.unitary.rfind("clifford:", 0) == 0) {
        return clifford::to_unitary(clifford::random_clifford(n, std::stoull(opt.unitary.substr(9))));
    }
    throw ParseError("unknown unitary spec " + opt.unitary + " (identity, haar:<seed>, clifford:<seed>)");
}

std::optional<double> magic_state_reference(const Options& opt, double alpha) {
    if (opt.state != "hstate") return std::nullopt;
    return magic::magic_state_closed_form(opt.n, alpha);
}

int cmd_entropy(const Options& opt, std::ostream& out) {
    const auto psi = io::resolve_state(opt.state, opt.n);
    const auto xi = magic::xi_distribution(psi);
    std::vector<double> alphas = opt.alphas.empty() ? std::vector<double>{0.5, 1.0, 2.0, 3.0} : opt.alphas;
    Json doc;
    doc["command"] = "entropy";
    doc["state"] = opt.state;
    doc["n"] = psi.num_qubits();
    doc["seed"] = opt.seed;
    doc["alpha"] = alphas;
    doc["M_alpha"] = Json::array();
    doc["analytic_ref"] = Json::array();
    for (double a : alphas) {
        doc["M_alpha"].push_back(magic::renyi_entropy(xi, a));
        doc["analytic_ref"].push_back(nullable(magic_state_reference(opt, a)));
    }
    doc["M_lin"] = magic::linear_entropy(xi);
    doc["nullity"] = magic::stabilizer_nullity(psi);
    doc["stab_norm"] = magic::stabilizer_norm(psi);
    emit(doc, opt, out);
    return 0;
}

int cmd_mixed_entropy(const Options& opt, std::ostream& out) {
    const auto rho = io::resolve_density(opt.state, opt.n);
    const double purity = states::purity(rho);
    Json doc;
    doc["command"] = "mixed-entropy";
    doc["state"] = opt.state;
    doc["n"] = rho.num_qubits();
    doc["seed"] = opt.seed;
    doc["M2_mixed"] = magic::mixed_magic(rho);
    doc["purity"] = purity;
    doc["S2"] = -std::log2(purity);
    emit(doc, opt, out);
    return 0;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
    const auto psi = io::resolve_state(opt.state, opt.n);
    const auto report = opt.alphas.empty() ? magic::bound_report(psi) : magic::bound_report(psi, opt.alphas);
    Json doc;
    doc["command"] = "bounds";
    doc["state"] = opt.state;
    doc["n"] = report.n;
    doc["seed"] = opt.seed;
    doc["alpha"] = report.alphas;
    doc["M_alpha"] = report.m_alpha;
    doc["M_lin"] = report.m_lin;
    doc["M0"] = report.m0;
    doc["nullity"] = report.nullity;
    doc["stab_norm"] = report.stab_norm;
    Json bounds = Json::object();
    for (const auto& b : report.bounds) bounds[b.name] = {{"lhs", b.lhs}, {"rhs", b.rhs}, {"holds", b.holds}};
    doc["bounds"] = bounds;
    doc["all_hold"] = report.all_bounds_hold();
    emit(doc, opt, out);
    return report.all_bounds_hold() ? 0 : 1;
}

Json power_json(const PowerResult& r, const Options& opt, double d) {
    Json doc;
    doc["command"] = "power";
    doc["method"] = r.method;
    doc["n"] = static_cast<int>(std::lround(std::log2(d)));
    doc["M_lin_power"] = r.m_lin;
    doc["M2_lower"] = r.m2_lower;
    doc["M2_power_exact"] = nullable(r.m2_exact);
    doc["commutator_norm2"] = nullable(r.commutator_norm2);
    doc["analytic_ref"] = nullptr;
    doc["stderr"] = nullptr;
    doc["samples"] = nullptr;
    doc["seed"] = opt.seed;
    const auto b = power::tcount_lower_bound(r, d);
    doc["tcount_bound"] = {{"raw", number(b.raw)}, {"clamped", number(b.clamped)}};
    return doc;
}

int cmd_power(const Options& opt, std::ostream& out) {
    const auto u = resolve_unitary(opt);
    PowerResult r;
    if (opt.method == "enumerate") {
        r = power::power_enumerate(u, opt.force);
    } else if (opt.method == "trace") {
        r = power::power_trace(u, opt.force);
    } else if (opt.method == "otoc") {
        r = chaos::power_from_otoc(u, opt.force);
    } else if (opt.method == "commutator") {
        r = power::power_from_commutator(u, opt.force);
    } else {
        throw ParseError("unknown method " + opt.method);
    }
    auto doc = power_json(r, opt, static_cast<double>(u.dim()));
    if (u.num_qubits() <= power::kMaxTraceQubits || opt.force) {
        doc["unitary_nullity"] = power::unitary_stabilizer_nullity(u, opt.force);
    }
    emit(doc, opt, out);
    return 0;
}

Json estimator_json(const EstimatorResult& r) {
    Json doc;
    doc["estimate"] = r.estimate;
    doc["stderr"] = r.std_error;
    doc["analytic_ref"] = nullable(r.analytic);
    doc["z_score"] = r.analytic ? Json(number(r.z_score())) : Json(nullptr);
    doc["spread"] = r.spread;
    doc["samples"] = r.samples;
    doc["seed"] = r.seed;
    return doc;
}

int cmd_haar_average(const Options& opt, std::ostream& out) {
    const int n = require_n(opt);
    const auto r = power::haar_power_experiment(n, opt.samples, opt.seed);
    Json doc;
    doc["command"] = "haar-average";
    doc["method"] = "trace";
    doc["n"] = n;
    doc["M_lin_power"] = r.estimate;
    doc["M2_lower"] = -std::log2(1.0 - r.estimate);
    doc["analytic_ref"] = nullable(r.analytic);
    doc["stderr"] = r.std_error;
    doc["spread"] = r.spread;
    doc["samples"] = r.samples;
    doc["seed"] = r.seed;
    emit(doc, opt, out);
    return 0;
}

std::vector<int> parse_k_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) return {std::stoi(text)};
        const int lo = std::stoi(text.substr(0, colon));
        const int hi = std::stoi(text.substr(colon + 1));
        if (lo < 0 || hi < lo) throw ParseError("bad --k range " + text);
        std::vector<int> ks;
        for (int k = lo; k <= hi; ++k) ks.push_back(k);
        return ks;
    } catch (const std::logic_error&) {
        throw ParseError("bad --k range " + text);
    }
}

int cmd_doped(const Options& opt, std::ostream& out) {
    const int n = require_n(opt);
    if (n > 2 && !opt.force) throw CostGuardError("doped sweeps are limited to n <= 2 without --force");
    std::ostringstream csv;
    csv.precision(17);
    csv << "k,theta,n,samples,mean,stderr,analytic\n";
    for (int k : parse_k_range(opt.k_range)) {
        const auto r =
            chaos::doped_power_experiment(n, k, opt.theta, opt.samples, derive_seed(opt.seed, static_cast<std::uint64_t>(k)));
        csv << k << ',' << opt.theta << ',' << n << ',' << r.samples << ',' << r.estimate << ',' << r.std_error << ','
            << *r.analytic << '\n';
    }
    if (opt.out_path.empty()) {
        out << csv.str();
    } else {
        std::ofstream file(opt.out_path);
        if (!file) throw ParseError("cannot write " + opt.out_path);
        file << csv.str();
    }
    return 0;
}

int cmd_randomized(const Options& opt, std::ostream& out) {
    const auto psi = io::resolve_state(opt.state, opt.n);
    if (opt.exact == (opt.shots > 0)) throw ParseError("pass exactly one of --exact or --shots");
    const auto batch = opt.exact ? protocol::measure_exact(psi, opt.cliffords, opt.seed)
                                 : protocol::measure_shots(psi, opt.cliffords, opt.shots, opt.seed);
    batch.validate();
    auto r = protocol::aggregate(batch);
    r.analytic = magic::renyi_entropy(psi, 2.0);
    Json doc;
    doc["command"] = "randomized";
    doc["state"] = opt.state;
    doc["n"] = psi.num_qubits();
    doc["mode"] = opt.exact ? "exact" : "shots";
    doc["shots"] = opt.shots;
    doc["cliffords"] = opt.cliffords;
    doc["M2_estimate"] = r.estimate;
    doc["stderr"] = r.std_error;
    doc["jackknife_stderr"] = nullable(r.jackknife_error);
    doc["analytic_ref"] = nullable(r.analytic);
    doc["z_score"] = number(r.z_score());
    doc["seed"] = opt.seed;
    if (!opt.batch_csv.empty()) {
        std::ofstream file(opt.batch_csv);
        if (!file) throw ParseError("cannot write " + opt.batch_csv);
        protocol::write_batch_csv(batch, file);
        doc["batch_csv"] = opt.batch_csv;
    }
    emit(doc, opt, out);
    return 0;
}

int cmd_otoc8(const Options& opt, std::ostream& out) {
    Json doc;
    doc["command"] = "otoc8-average";
    doc["seed"] = opt.seed;
    if (opt.p1.empty() != opt.p2.empty()) throw ParseError("--p1 and --p2 go together");
    if (opt.p1.empty()) {
        const int n = require_n(opt);
        const auto report = chaos::haar_otoc8_experiment(n, opt.samples, opt.seed);
        doc["n"] = n;
        doc["mode"] = "haar";
        doc["otoc8"] = estimator_json(report.otoc8);
        doc["M_lin_power"] = estimator_json(report.m_lin);
        doc["relation_gap"] = report.relation_gap;
        emit(doc, opt, out);
        return 0;
    }
    const auto u = resolve_unitary(opt);
    const auto p1 = PauliString::from_label(opt.p1);
    const auto p2 = PauliString::from_label(opt.p2);
    const double reference = std::pow(chaos::otoc2_traced(u, p1, p2).real(), 4);
    doc["n"] = u.num_qubits();
    doc["mode"] = opt.mode;
    doc["p1"] = opt.p1;
    doc["p2"] = opt.p2;
    doc["analytic_ref"] = reference;
    if (opt.mode == "direct") {
        doc["otoc8"] = chaos::otoc8_pauli_average_direct(u, p1, p2, opt.force);
    } else if (opt.mode == "exact") {
        doc["otoc8"] = chaos::otoc8_pauli_average_exact(u, p1, p2);
    } else if (opt.mode == "sampled") {
        doc["otoc8"] = estimator_json(chaos::otoc8_pauli_average_sampled(u, p1, p2, opt.samples, opt.seed));
    } else {
        throw ParseError("unknown --mode " + opt.mode);
    }
    emit(doc, opt, out);
    return 0;
}

int cmd_synthesis_bound(const Options& opt, std::ostream& out) {
    Json doc;
    doc["command"] = "synthesis-bound";
    double m2 = opt.m2;
    if (m2 < 0.0) {
        const auto psi = io::resolve_state(opt.state, opt.n);
        m2 = magic::renyi_entropy(psi, 2.0);
        doc["state"] = opt.state;
        doc["n"] = psi.num_qubits();
    }
    doc["M2"] = m2;
    doc["per_copy"] = magic::magic_state_m2();
    doc["copies"] = magic::synthesis_copy_bound(m2);
    doc["seed"] = opt.seed;
    emit(doc, opt, out);
    return 0;
}

int cmd_partial_trace_scan(const Options& opt, std::ostream& out) {
    const int n = require_n(opt);
    const auto scan = magic::partial_trace_scan(n, opt.samples, opt.seed);
    Json doc;
    doc["command"] = "partial-trace-scan";
    doc["n"] = n;
    doc["samples"] = scan.samples;
    doc["violations"] = scan.violations;
    doc["max_increase"] = number(scan.max_increase);
    doc["mean_M2_full"] = scan.mean_full;
    doc["mean_M2_reduced"] = scan.mean_reduced;
    doc["seed"] = scan.seed;
    emit(doc, opt, out);
    return 0;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
    bool ok = true;
    auto report = [&](const acceptance::CriterionResult& r) {
        ok = ok && r.passed;
        out << acceptance::format(r) << std::endl;
    };
    if (opt.only.empty()) {
        acceptance::run_all(opt.seed, report);
    } else {
        for (int id : opt.only) report(acceptance::run_criterion(id, opt.seed));
    }
    out << (ok ? "selftest: all criteria passed" : "selftest: FAILED") << std::endl;
    return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"srent: stabilizer Renyi entropy laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    opt.seed = acceptance::kDefaultSeed;
    app.add_option("--threads", opt.threads, "Worker threads (default: SRENT_THREADS or hardware concurrency)");
    app.add_flag("--force", opt.force, "Lift cost guards on qubit counts");

    auto add_seed = [&](CLI::App* c) { c->add_option("--seed", opt.seed, "Master RNG seed")->capture_default_str(); };
    auto add_state = [&](CLI::App* c) {
        c->add_option("--state", opt.state, "zero | hstate | haar:<seed> | path to JSON")->capture_default_str();
        c->add_option("--n", opt.n, "Qubit count");
    };
    auto add_out = [&](CLI::App* c) { c->add_option("--out", opt.out_path, "Write the result to a file"); };
    auto add_unitary = [&](CLI::App* c) {
        c->add_option("--circuit", opt.circuit, "Circuit text file");
        c->add_option("--unitary", opt.unitary, "identity | haar:<seed> | clifford:<seed>");
        c->add_option("--n", opt.n, "Qubit count");
    };

    std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>> commands;
    auto command = [&](const char* name, const char* help, auto handler) {
        CLI::App* c = app.add_subcommand(name, help);
        add_out(c);
        commands.emplace_back(c, handler);
        return c;
    };

    auto* entropy = command("entropy", "Stabilizer Renyi entropies of a pure state", cmd_entropy);
    add_state(entropy);
    add_seed(entropy);
    entropy->add_option("--alpha", opt.alphas, "Renyi indices")->delimiter(',');

    auto* mixed = command("mixed-entropy", "Mixed-state magic of a density matrix", cmd_mixed_entropy);
    add_state(mixed);
    add_seed(mixed);

    auto* bounds = command("bounds", "Nullity, stabilizer norm and the bound chain", cmd_bounds);
    add_state(bounds);
    add_seed(bounds);
    bounds->add_option("--alpha", opt.alphas, "Renyi indices")->delimiter(',');

    auto* power = command("power", "Nonstabilizing power of a unitary", cmd_power);
    add_unitary(power);
    add_seed(power);
    power->add_option("--method", opt.method, "enumerate | trace | otoc | commutator")
        ->check(CLI::IsMember({"enumerate", "trace", "otoc", "commutator"}))
        ->capture_default_str();

    auto* haar = command("haar-average", "Monte Carlo Haar average of the power", cmd_haar_average);
    haar->add_option("--n", opt.n, "Qubit count")->required();
    haar->add_option("--samples", opt.samples, "Haar unitaries")->capture_default_str();
    add_seed(haar);

    auto* doped = command("doped", "Power of k-doped Clifford circuits (CSV sweep)", cmd_doped);
    doped->add_option("--n", opt.n, "Qubit count")->required();
    doped->add_option("--theta", opt.theta, "Phase angle in radians")->capture_default_str();
    doped->add_option("--k", opt.k_range, "Doping count or range lo:hi")->capture_default_str();
    doped->add_option("--samples", opt.samples, "Circuits per point")->capture_default_str();
    add_seed(doped);

    auto* randomized = command("randomized", "Randomized-measurement estimate of M_2", cmd_randomized);
    add_state(randomized);
    add_seed(randomized);
    randomized->add_option("--cliffords", opt.cliffords, "Sampled Cliffords")->capture_default_str();
    randomized->add_option("--shots", opt.shots, "Shots per Clifford (>= 4)");
    randomized->add_flag("--exact", opt.exact, "Use exact outcome probabilities");
    randomized->add_option("--batch-csv", opt.batch_csv, "Per-Clifford CSV for offline re-aggregation");

    auto* otoc8 = command("otoc8-average", "8-point OTOC averages", cmd_otoc8);
    add_unitary(otoc8);
    add_seed(otoc8);
    otoc8->add_option("--samples", opt.samples, "Haar unitaries or Pauli samples")->capture_default_str();
    otoc8->add_option("--p1", opt.p1, "First Pauli label (single-pair mode)");
    otoc8->add_option("--p2", opt.p2, "Second Pauli label (single-pair mode)");
    otoc8->add_option("--mode", opt.mode, "direct | exact | sampled")->capture_default_str();

    auto* synth = command("synthesis-bound", "Magic-state copies needed to synthesize a state", cmd_synthesis_bound);
    add_state(synth);
    add_seed(synth);
    synth->add_option("--m2", opt.m2, "Use this M_2 instead of a state");

    auto* scan = command("partial-trace-scan", "Check M~_2 under partial trace on sampled states",
                         cmd_partial_trace_scan);
    scan->add_option("--n", opt.n, "Qubit count")->required();
    scan->add_option("--samples", opt.samples, "Sampled states")->capture_default_str();
    add_seed(scan);

    auto* selftest = command("selftest", "Run the acceptance suite", cmd_selftest);
    add_seed(selftest);
    selftest->add_option("--only", opt.only, "Criterion ids")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    if (opt.threads > 0) set_thread_count(opt.threads);
    try {
        for (const auto& [sub, handler] : commands) {
            if (sub->parsed()) return handler(opt, out);
        }
    } catch (const CostGuardError& e) {
        err << "error: " << e.what() << " (pass --force to override)\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace srent::cli
