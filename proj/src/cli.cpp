#include "rcdkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "rcdkit/errors.hpp"
#include "rcdkit/falsifier.hpp"
#include "rcdkit/instance.hpp"
#include "rcdkit/properties.hpp"
#include "rcdkit/rcd.hpp"

namespace rcdkit {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::usage, "cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

Instance load_instance(const std::string& path, std::istream& in) {
    return parse_instance(slurp(path, in));
}

const Kernel& require_kernel(const Instance& inst) {
    if (!inst.kernel) throw Error(Errc::usage, "this command needs a kernel: add \"R\" to the document");
    return *inst.kernel;
}

int parse_index(std::string_view text) {
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw Error(Errc::usage, "invalid state index '" + std::string(text) + "'");
    return value;
}

// Accepts JSON ([[0],[1,2]]) or the compact form 0/1,2 (blocks split by '/',
// members by ',').
Partition parse_partition_spec(const std::string& spec, int n) {
    std::vector<EventSet> blocks;
    if (!spec.empty() && spec.front() == '[') {
        nlohmann::json j = nlohmann::json::parse(spec, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw Error(Errc::usage, "invalid partition spec '" + spec + "'");
        for (const auto& blk : j) {
            if (!blk.is_array()) throw Error(Errc::usage, "invalid partition spec '" + spec + "'");
            EventSet b(n);
            for (const auto& m : blk) {
                if (!m.is_number_integer())
                    throw Error(Errc::usage, "invalid partition spec '" + spec + "'");
                b.add(m.get<int>());
            }
            blocks.push_back(std::move(b));
        }
    } else {
        size_t pos = 0;
        while (true) {
            size_t cut = spec.find('/', pos);
            std::string part = spec.substr(pos, cut == std::string::npos ? std::string::npos : cut - pos);
            EventSet b(n);
            size_t mpos = 0;
            while (true) {
                size_t mcut = part.find(',', mpos);
                std::string m = part.substr(mpos, mcut == std::string::npos ? std::string::npos : mcut - mpos);
                b.add(parse_index(m));
                if (mcut == std::string::npos) break;
                mpos = mcut + 1;
            }
            blocks.push_back(std::move(b));
            if (cut == std::string::npos) break;
            pos = cut + 1;
        }
    }
    return Partition::from_blocks(n, std::move(blocks));
}

std::string format_set(const EventSet& s) {
    std::string out = "{";
    bool first = true;
    for (int x : s.members()) {
        if (!first) out += ' ';
        out += std::to_string(x);
        first = false;
    }
    return out + "}";
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (const EventSet& b : p.blocks()) {
        if (!out.empty()) out += ' ';
        out += format_set(b);
    }
    return out;
}

std::string format_witness(const Witness& w) {
    std::vector<std::string> parts;
    if (w.x) parts.push_back("x=" + std::to_string(*w.x));
    if (w.y) parts.push_back("y=" + std::to_string(*w.y));
    if (w.z) parts.push_back("z=" + std::to_string(*w.z));
    if (w.A) parts.push_back("A=" + format_set(*w.A));
    if (w.B) parts.push_back("B=" + format_set(*w.B));
    if (w.lhs) parts.push_back("lhs=" + w.lhs->str());
    if (w.rhs) parts.push_back("rhs=" + w.rhs->str());
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) out += ", ";
        out += p;
    }
    return out;
}

std::string format_verdict(const PropertyVerdict& v) {
    if (v.holds) return "holds";
    std::string out = "fails";
    if (v.witness) out += "  (" + format_witness(*v.witness) + ")";
    return out;
}

std::string mode_name(Mode m) { return m == Mode::rational ? "rational" : "float"; }

void print_mode(const Instance& inst, std::ostream& out) {
    out << "mode: " << mode_name(inst.mode);
    if (inst.mode == Mode::floating)
        out << "  epsilon: " << inst.epsilon_text.value_or(kDefaultEpsilonText);
    out << "\n";
}

// Every machine report leads with the numeric mode it was computed under.
nlohmann::ordered_json with_mode(const Instance& inst, const nlohmann::ordered_json& body) {
    nlohmann::ordered_json j;
    j["mode"] = mode_name(inst.mode);
    if (inst.mode == Mode::floating)
        j["epsilon"] = inst.epsilon_text.value_or(kDefaultEpsilonText);
    for (const auto& el : body.items()) j[el.key()] = el.value();
    return j;
}

void emit(const nlohmann::ordered_json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

struct AnalyzeOptions {
    std::string file;
    bool sigma_only = false;
    std::string partition_spec;
    bool json = false;
};

int do_analyze(const AnalyzeOptions& opt, std::istream& in, std::ostream& out) {
    Instance inst = load_instance(opt.file, in);

    Kernel kernel;
    std::string source;
    if (inst.kernel) {
        kernel = *inst.kernel;
        source = "document";
    } else if (inst.partition) {
        kernel = make_rcd(inst.nu, *inst.partition);
        source = "synthesized from the document partition";
    } else {
        kernel = make_rcd(inst.nu, Partition::trivial(inst.n));
        source = "synthesized from the one-block partition";
    }

    std::optional<Partition> conditioning;
    if (!opt.partition_spec.empty())
        conditioning = parse_partition_spec(opt.partition_spec, inst.n);
    else if (!opt.sigma_only && inst.partition)
        conditioning = inst.partition;

    PropertyProfile prof = profile(kernel, inst.nu, conditioning, inst.numeric_mode());

    if (opt.json) {
        nlohmann::ordered_json body = profile_to_json(prof);
        body["kernel_source"] = source;
        emit(with_mode(inst, body), out);
        return 0;
    }

    print_mode(inst, out);
    out << "kernel: " << source << "\n";
    out << "sigma: " << format_partition(prof.sigma) << "\n";
    out << "partition: " << format_partition(prof.conditioning) << "\n";
    out << "S: " << format_verdict(prof.stationary) << "\n";
    out << "R: " << format_verdict(prof.reversible) << "\n";
    out << "SC: " << format_verdict(prof.self_compatible) << "\n";
    out << "SR: " << format_verdict(prof.self_reversible) << "\n";
    out << "P: " << format_verdict(prof.proper) << "\n";
    out << "T: " << format_verdict(prof.total) << "\n";
    out << "trivial: " << format_verdict(prof.trivial) << "\n";
    out << "ac: " << format_verdict(prof.abs_continuous) << "\n";
    return 0;
}

struct CheckOptions {
    std::string property;
    std::string file;
    std::string partition_spec;
    bool restricted = false;
    bool json = false;
};

int do_check(const CheckOptions& opt, std::istream& in, std::ostream& out) {
    Instance inst = load_instance(opt.file, in);
    const Kernel& r = require_kernel(inst);
    NumericMode nm = inst.numeric_mode();

    std::optional<Partition> g;
    if (!opt.partition_spec.empty())
        g = parse_partition_spec(opt.partition_spec, inst.n);
    else if (inst.partition)
        g = inst.partition;

    bool blockwise = opt.property == "P" || opt.property == "T" || opt.property == "trivial";
    bool restrictable = opt.property == "S" || opt.property == "R";
    if (opt.restricted && !restrictable)
        throw Error(Errc::usage, "--restricted applies to S and R only");
    if (g && !blockwise && !(restrictable && opt.restricted))
        throw Error(Errc::usage, "a partition only affects P, T, trivial, or a restricted S/R");

    PropertyVerdict v;
    if (opt.property == "S" || opt.property == "R") {
        RestrictionScope scope;
        if (opt.restricted) scope.partition = g ? *g : sigma_of_kernel(r, nm);
        v = opt.property == "S" ? check_stationary(r, inst.nu, scope, nm)
                                : check_reversible(r, inst.nu, scope, nm);
    } else if (opt.property == "SC") {
        v = check_self_compatible(r, inst.nu, nm);
    } else if (opt.property == "SR") {
        v = check_self_reversible(r, inst.nu, nm);
    } else if (opt.property == "ac") {
        v = check_abs_continuous(r, inst.nu, nm);
    } else {
        Partition scope = g ? *g : sigma_of_kernel(r, nm);
        if (opt.property == "P") v = check_proper(r, inst.nu, scope, nm);
        else if (opt.property == "T") v = check_total(r, inst.nu, scope, nm);
        else v = check_trivial(r, inst.nu, scope, nm);
    }

    if (opt.json) {
        nlohmann::ordered_json body;
        body["property"] = opt.property;
        if (opt.restricted) body["restricted"] = true;
        nlohmann::ordered_json vj = verdict_to_json(v);
        for (const auto& el : vj.items()) body[el.key()] = el.value();
        emit(with_mode(inst, body), out);
    } else {
        print_mode(inst, out);
        out << opt.property << ": " << format_verdict(v) << "\n";
        if (v.certificate) out << "certificate: " << format_set(*v.certificate) << "\n";
    }
    return v.holds ? 0 : 3;
}

int do_make_rcd(const std::string& file, std::istream& in, std::ostream& out) {
    Instance inst = load_instance(file, in);
    if (!inst.partition)
        throw Error(Errc::usage, "make-rcd needs a partition: add \"partition\" to the document");
    Instance result = inst;
    result.kernel = make_rcd(inst.nu, *inst.partition);
    out << serialize_instance(result);
    return 0;
}

const char* failure_label(RcdFailure f) {
    switch (f) {
        case RcdFailure::stationarity: return "stationarity";
        case RcdFailure::totality: return "totality";
        default: return "absolute_continuity";
    }
}

void print_rcd_verdict(const RcdVerdict& v, std::ostream& out) {
    out << "is_rcd: " << (v.is_rcd ? "true" : "false") << "\n";
    if (v.conditioning) out << "conditioning: " << format_partition(*v.conditioning) << "\n";
    if (v.failed_condition) out << "failed_condition: " << failure_label(*v.failed_condition) << "\n";
    if (v.witness) out << "witness: " << format_witness(*v.witness) << "\n";
    if (v.abs_continuous)
        out << "abs_continuous: " << (*v.abs_continuous ? "true" : "false") << "\n";
}

int do_is_rcd(const std::string& file, bool gcp, bool json, std::istream& in, std::ostream& out) {
    Instance inst = load_instance(file, in);
    const Kernel& r = require_kernel(inst);
    RcdVerdict v = gcp ? is_rcd_gcp(r, inst.nu, inst.numeric_mode())
                       : is_rcd(r, inst.nu, inst.numeric_mode());
    if (json) {
        emit(with_mode(inst, rcd_verdict_to_json(v)), out);
    } else {
        print_mode(inst, out);
        print_rcd_verdict(v, out);
    }
    return v.is_rcd ? 0 : 3;
}

int do_stationarize(const std::string& file, bool json, std::istream& in, std::ostream& out) {
    Instance inst = load_instance(file, in);
    const Kernel& r = require_kernel(inst);
    Measure pi = stationarize(r, inst.nu);
    RcdVerdict v = is_rcd(r, pi, inst.numeric_mode());
    if (json) {
        nlohmann::ordered_json body;
        nlohmann::ordered_json weights = nlohmann::ordered_json::array();
        for (const Rat& w : pi.weights()) weights.push_back(w.str());
        body["pi"] = weights;
        body["verdict"] = rcd_verdict_to_json(v);
        emit(with_mode(inst, body), out);
    } else {
        print_mode(inst, out);
        out << "pi:";
        for (const Rat& w : pi.weights()) out << ' ' << w.str();
        out << "\n";
        print_rcd_verdict(v, out);
    }
    return v.is_rcd ? 0 : 3;
}

int do_oracle(const std::string& file, int max_n, bool json, std::istream& in, std::ostream& out) {
    Instance inst = load_instance(file, in);
    const Kernel& r = require_kernel(inst);
    if (inst.mode != Mode::rational)
        throw Error(Errc::float_mode_refused, "the exhaustive scan runs in exact arithmetic only");
    if (inst.n > max_n)
        throw Error(Errc::too_large, "instance has " + std::to_string(inst.n) +
                                         " states, above the --max-n limit of " + std::to_string(max_n));
    OracleResult res = oracle_is_rcd(r, inst.nu);
    if (json) {
        emit(with_mode(inst, oracle_result_to_json(res)), out);
    } else {
        print_mode(inst, out);
        out << "accepted: " << res.accepted.size() << "\n";
        for (const Partition& p : res.accepted) out << "  " << format_partition(p) << "\n";
        out << "partitions_scanned: " << res.partitions_scanned << "\n";
    }
    return res.accepted.empty() ? 3 : 0;
}

struct FalsifyOptions {
    std::string law;
    int trials = 1000;
    std::uint64_t seed = 42;
    int n_min = 2;
    int n_max = 5;
    bool expect_counterexample = false;
    bool do_shrink = false;
    bool json = false;
};

int do_falsify(const FalsifyOptions& opt, std::ostream& out) {
    LawReport rep = run_law(opt.law, opt.trials, opt.seed, {opt.n_min, opt.n_max});
    if (opt.do_shrink)
        for (Counterexample& ce : rep.counterexamples) ce = shrink(ce, opt.law);

    const Law& law = find_law(opt.law);
    if (opt.json) {
        nlohmann::ordered_json j;
        j["mode"] = "rational";
        nlohmann::ordered_json rj = law_report_to_json(rep);
        for (const auto& el : rj.items()) j[el.key()] = el.value();
        emit(j, out);
    } else {
        out << "law: " << rep.law << "\n";
        out << "statement: " << law.statement << "\n";
        out << "trials: " << rep.trials << "\n";
        out << "premise_hits: " << rep.premise_hits << "\n";
        out << "counterexamples: " << rep.counterexamples.size() << "\n";
        for (const Counterexample& ce : rep.counterexamples)
            out << counterexample_to_json(ce).dump() << "\n";
        out << "seed: " << rep.seed << "\n";
        out << "n_range: [" << rep.n_range.first << ", " << rep.n_range.second << "]\n";
        out << "generator_version: " << rep.generator_version << "\n";
        out << "mode: rational\n";
    }

    bool found = !rep.counterexamples.empty();
    if (opt.expect_counterexample) return found ? 0 : 3;
    return found ? 3 : 0;
}

struct GenOptions {
    std::string kind;
    int n = 0;
    std::uint64_t seed = 42;
    std::string structure = "dense";
    bool structure_given = false;
};

int do_gen(const GenOptions& opt, std::ostream& out) {
    if (opt.structure_given && opt.kind != "kernel")
        throw Error(Errc::usage, "--structure only applies to --kind kernel");

    // Fixed substreams per field, so documents differing only in kind share
    // the parts they have in common.
    std::uint64_t nu_seed = stream_seed(opt.seed, 1);
    std::uint64_t partition_seed = stream_seed(opt.seed, 2);
    std::uint64_t kernel_seed = stream_seed(opt.seed, 3);

    Instance inst;
    inst.n = opt.n;
    if (opt.kind == "measure") {
        inst.nu = gen_measure(opt.n, nu_seed, true);
    } else if (opt.kind == "kernel") {
        inst.nu = gen_measure(opt.n, nu_seed, true);
        if (opt.structure == "block") {
            Partition g = gen_partition(opt.n, partition_seed);
            inst.kernel = gen_kernel_block(g, kernel_seed);
            inst.partition = std::move(g);
        } else {
            inst.kernel = gen_kernel_dense(opt.n, kernel_seed);
        }
    } else if (opt.kind == "partition") {
        inst.nu = uniform_measure(opt.n);
        inst.partition = gen_partition(opt.n, partition_seed);
    } else if (opt.kind == "rcd") {
        inst.nu = gen_measure(opt.n, nu_seed, true);
        inst.partition = gen_partition(opt.n, partition_seed);
        inst.kernel = make_rcd(inst.nu, *inst.partition);
    } else {  // near-rcd
        inst.nu = gen_measure(opt.n, nu_seed, true);
        inst.partition = gen_partition(opt.n, partition_seed);
        inst.kernel = gen_kernel_near_rcd(inst.nu, *inst.partition, kernel_seed);
    }
    out << serialize_instance(inst);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact analysis of probability kernels on finite state spaces"};
    app.require_subcommand(1);

    int rc = 0;

    AnalyzeOptions an;
    auto* analyze = app.add_subcommand("analyze", "property profile of an instance document");
    analyze->add_option("file", an.file, "instance document, or - for stdin")->required();
    auto* an_sigma = analyze->add_flag("--sigma", an.sigma_only,
                                       "profile against the kernel's row partition");
    analyze->add_option("--partition", an.partition_spec,
                        "profile against this partition ([[0],[1,2]] or 0/1,2)")
        ->excludes(an_sigma);
    analyze->add_flag("--json", an.json, "machine output");
    analyze->callback([&] { rc = do_analyze(an, in, out); });

    CheckOptions ck;
    auto* check = app.add_subcommand("check", "check one property");
    check->add_option("property", ck.property, "one of S R SC SR P T trivial ac")
        ->required()
        ->check(CLI::IsMember({"S", "R", "SC", "SR", "P", "T", "trivial", "ac"}));
    check->add_option("file", ck.file, "instance document, or - for stdin")->required();
    check->add_option("--partition", ck.partition_spec,
                      "partition for P/T/trivial or a restricted S/R");
    check->add_flag("--restricted", ck.restricted,
                    "restrict S/R to sets measurable w.r.t. the row partition");
    check->add_flag("--json", ck.json, "machine output");
    check->callback([&] { rc = do_check(ck, in, out); });

    std::string mk_file;
    auto* mk = app.add_subcommand("make-rcd", "synthesize the conditional kernel of nu given the partition");
    mk->add_option("file", mk_file, "instance document with nu and partition, or - for stdin")
        ->required();
    mk->callback([&] { rc = do_make_rcd(mk_file, in, out); });

    std::string ir_file;
    bool ir_gcp = false, ir_json = false;
    auto* ir = app.add_subcommand("is-rcd", "decide whether the kernel conditions nu on some partition");
    ir->add_option("file", ir_file, "instance document, or - for stdin")->required();
    ir->add_flag("--gcp", ir_gcp, "additionally require rows to stay on the support");
    ir->add_flag("--json", ir_json, "machine output");
    ir->callback([&] { rc = do_is_rcd(ir_file, ir_gcp, ir_json, in, out); });

    std::string st_file;
    bool st_json = false;
    auto* st = app.add_subcommand("stationarize", "push nu through the kernel once and re-decide");
    st->add_option("file", st_file, "instance document, or - for stdin")->required();
    st->add_flag("--json", st_json, "machine output");
    st->callback([&] { rc = do_stationarize(st_file, st_json, in, out); });

    std::string or_file;
    int or_max_n = kMaxEnumerationStates;
    bool or_json = false;
    auto* orc = app.add_subcommand("oracle", "scan every partition for the defining identity");
    orc->add_option("file", or_file, "instance document, or - for stdin")->required();
    orc->add_option("--max-n", or_max_n, "refuse instances with more states than this");
    orc->add_flag("--json", or_json, "machine output");
    orc->callback([&] { rc = do_oracle(or_file, or_max_n, or_json, in, out); });

    FalsifyOptions fz;
    auto* fal = app.add_subcommand("falsify", "run randomized trials against a registered law");
    fal->add_option("law", fz.law, "law id (L1..L18, SANITY-1, SANITY-2)")->required();
    fal->add_option("--trials", fz.trials, "number of trials")->check(CLI::NonNegativeNumber);
    fal->add_option("--seed", fz.seed, "campaign seed");
    fal->add_option("--n-min", fz.n_min, "smallest state count");
    fal->add_option("--n-max", fz.n_max, "largest state count");
    fal->add_flag("--expect-counterexample", fz.expect_counterexample,
                  "exit 0 when a counterexample is found, 3 otherwise");
    fal->add_flag("--shrink", fz.do_shrink, "minimize counterexamples before reporting");
    fal->add_flag("--json", fz.json, "machine output");
    fal->callback([&] { rc = do_falsify(fz, out); });

    GenOptions gn;
    auto* gen = app.add_subcommand("gen", "emit a seeded random instance document");
    gen->add_option("--kind", gn.kind, "measure, kernel, partition, rcd, or near-rcd")
        ->required()
        ->check(CLI::IsMember({"measure", "kernel", "partition", "rcd", "near-rcd"}));
    gen->add_option("--n", gn.n, "number of states")->required();
    gen->add_option("--seed", gn.seed, "generator seed");
    gen->add_option("--structure", gn.structure, "kernel shape: dense or block")
        ->check(CLI::IsMember({"dense", "block"}));
    gen->callback([&] {
        gn.structure_given = gen->count("--structure") > 0;
        rc = do_gen(gn, out);
    });

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("rcdkit");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_storage.size());
    for (std::string& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace rcdkit
