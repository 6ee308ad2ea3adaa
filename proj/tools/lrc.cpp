#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lrc/bounds.hpp"
#include "lrc/construct_lr.hpp"
#include "lrc/construct_mr.hpp"
#include "lrc/construct_seq.hpp"
#include "lrc/error.hpp"
#include "lrc/io.hpp"
#include "lrc/verify.hpp"

using namespace lrc;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kManifestSchema = "lrc-manifest/1";

std::string now_utc() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Run {
    std::vector<std::string> argv;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::string out_path, manifest_path;
    bool csv = false;
    std::string started = now_utc();
    nlohmann::json inputs = nlohmann::json::array();
    nlohmann::json outputs = nlohmann::json::array();

    std::string load(const std::string& path) {
        std::string s = read_file(path);
        inputs.push_back({{"path", path}, {"sha256", sha256_hex(s)}});
        return s;
    }

    void emit(const std::string& text) {
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream(out_path, std::ios::binary) << text;
        }
        outputs.push_back({{"path", out_path.empty() ? "-" : out_path}, {"sha256", sha256_hex(text)}});
    }

    void finish(const std::string& command) const {
        if (manifest_path.empty()) return;
        nlohmann::json m{{"schema", kManifestSchema},
                         {"command", command},
                         {"flags", argv},
                         {"seeds", {{"seed", seed}}},
                         {"jobs", jobs},
                         {"tool_version", kVersion},
                         {"started", started},
                         {"finished", now_utc()},
                         {"inputs", inputs},
                         {"outputs", outputs}};
        std::ofstream(manifest_path) << m.dump(2) << "\n";
    }
};

nlohmann::json provenance(const Run& run, const std::string& kind, const LinearCode& c) {
    return {{"tool", "lrc"}, {"version", kVersion}, {"construction", kind}, {"flags", run.argv},
            {"seed", run.seed}, {"field", field_to_json(c.F)}};
}

// Options shared by the construct subcommands.
struct ConstructArgs {
    int r = 0, t = 0, k = 0, n = 0, m = 0, beta = 1, s = 0, delta = 1, psi = 0, N = 0, D = 0;
    std::uint32_t q = 0, base_q = 16;
    std::string aux = "catalog", variant, name = "ex1", h = "roots";
};

LinearCode build_code(const std::string& kind, const ConstructArgs& a, const Run& run, nlohmann::json& extra) {
    auto field = [&] {
        if (!a.q) throw Error("UsageError", "--q is required");
        return field_of_order(a.q);
    };
    if (kind == "seq") {
        const AuxChoice aux = a.aux == "random" ? AuxChoice::Random : AuxChoice::Catalog;
        if (a.aux != "random" && a.aux != "catalog") throw Error("UsageError", "--aux is catalog or random");
        const SeqBuild b = seq_general_build(a.r, a.t, aux, run.seed);
        extra["profile"] = profile_to_json(b.profile);
        extra["route"] = b.route;
        return b.code;
    }
    if (kind == "t2") {
        if (a.variant == "near-regular") return t2_near_regular_code(a.k, a.r);
        if (a.variant == "turan") return t2_turan_code(a.r, a.beta);
        if (a.variant == "dim-optimal") return t2_dim_optimal_code(a.m, a.r);
        throw Error("UsageError", "--variant is near-regular, turan or dim-optimal");
    }
    if (kind == "t3") return t3_catalog(a.name);
    if (kind == "moore") return moore_code(a.r, a.t);
    if (kind == "pyramid") return pyramid_code(a.n, a.k, a.r, field());
    if (kind == "tamobarg") return tamo_barg_code(a.n, a.k, a.r, field());
    if (kind == "product") return product_avail_code(a.r, a.t);
    if (kind == "wang") return wang_avail_code(a.r, a.t);
    if (kind == "pgplane") return pg_plane_sa_code(a.s);
    if (kind == "steiner") return steiner_sa_code(a.s);
    if (kind == "pmr") {
        if (a.variant.empty() || a.variant == "split") return pmr_parity_split(a.m, a.r, a.delta, field());
        if (a.variant == "a1") {
            if (a.h != "roots" && a.h != "random") throw Error("UsageError", "--shifts is roots or random");
            auto res = pmr_general_a1(a.m, a.r, a.delta, a.base_q, a.h == "roots" ? HChoice::RootsOfUnity : HChoice::Random,
                                      run.seed);
            extra["verdict"] = res.verdict.to_json();
            extra["h_logs"] = res.h;
            return res.code;
        }
        throw Error("UsageError", "--variant is split or a1");
    }
    if (kind == "mr-r12") return mr_r12(a.m, a.r);
    if (kind == "mr-rd2") return mr_rdelta2(a.m, a.r, a.delta, a.psi);
    if (kind == "mr-coset") return mr_r2_coset_search(a.N, a.D, field());
    throw Error("UsageError", "unknown construction " + kind);
}

BoundReport report(std::string name, nlohmann::json inputs, nlohmann::json value, std::string citation) {
    return BoundReport{std::move(name), std::move(inputs), std::move(value), std::move(citation)};
}

struct BoundArgs {
    int n = 0, k = 0, r = 0, t = 0, d = 0, w = 0;
    std::uint32_t q = 2;
    std::string mode = "msr-dn1";
};

BoundReport compute_bound(const std::string& which, const BoundArgs& a) {
    if (which == "seq-rate")
        return report(which, {{"r", a.r}, {"t", a.t}}, to_string(seq_rate_bound(a.r, a.t)), "rate <= staircase bound");
    if (which == "lr-singleton")
        return report(which, {{"n", a.n}, {"k", a.k}, {"r", a.r}}, lr_singleton_bound(a.n, a.k, a.r),
                      "d <= n - k - ceil(k/r) + 2");
    if (which == "hamming-type")
        return report(which, {{"n", a.n}, {"r", a.r}, {"q", a.q}}, hamming_type_bound(a.n, a.r, a.q),
                      "sphere packing with locality");
    if (which == "seq-blocklength") {
        const auto b = seq_blocklength_bounds(a.k, a.r, a.t);
        nlohmann::json v{{"prior", b.prior}};
        if (b.improved) v["improved"] = *b.improved;
        return report(which, {{"k", a.k}, {"r", a.r}, {"t", a.t}}, v, "minimum block length");
    }
    if (which == "avail-rate") {
        const auto b = avail_rate_bounds(a.r, a.t);
        nlohmann::json v{{"tamo_barg", to_string(b.tamo_barg)}};
        if (b.transpose_new) v["transpose_new"] = to_string(*b.transpose_new);
        return report(which, {{"r", a.r}, {"t", a.t}}, v, "rate of availability codes");
    }
    if (which == "avail-dmin") {
        const auto b = avail_dmin_bounds(a.n, a.k, a.r, a.t);
        nlohmann::json v{{"wang", b.wang}, {"tamo_barg", b.tamo_barg}, {"kruglik_frolov", b.kruglik_frolov}};
        if (b.msw_new) v["msw_new"] = *b.msw_new;
        return report(which, {{"n", a.n}, {"k", a.k}, {"r", a.r}, {"t", a.t}}, v, "minimum distance with availability");
    }
    if (which == "sa-blocklength")
        return report(which, {{"r", a.r}, {"t", a.t}}, sa_blocklength_bound(a.r, a.t), "strict availability length");
    if (which == "moore")
        return report(which, {{"r", a.r}, {"t", a.t}}, moore_bound(a.r, a.t).str(), "nodes of an (r+1)-regular graph of girth t+1");
    if (which == "msr-subpkt")
        return report(which, {{"n", a.n}, {"k", a.k}, {"d", a.d}, {"w", a.w}, {"mode", a.mode}},
                      msr_subpkt_bounds(a.n, a.k, a.d, a.w, parse_msr_mode(a.mode)).str(), "sub-packetization");
    if (which == "lr-alphabet") {
        auto b = lr_alphabet_bounds(a.n, a.k, a.r, a.q, AlphabetMode::Distance);
        return b;
    }
    throw Error("UsageError", "unknown bound " + which);
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    return s + "\n";
}

std::string make_report(const std::string& which, bool csv) {
    if (which == "table-3.1") {
        nlohmann::json rows = nlohmann::json::array();
        std::string text = csv_line({"k", "r", "prior_bound", "new_bound", "n_constructed"});
        for (auto [k, r, fixture] : {std::tuple{5, 3, "ex1"}, std::tuple{8, 4, "ex2"}}) {
            const auto b = seq_blocklength_bounds(k, r, 3);
            const LinearCode c = t3_catalog(fixture);
            const bool ok = seq_recovery_check(c, r, 3, {VerifyMode::Exhaustive}).pass;
            rows.push_back({{"k", k}, {"r", r}, {"prior", b.prior}, {"new", *b.improved}, {"n", c.n},
                            {"n_source", ok ? "construction, verified" : "construction, verification failed"}});
            text += csv_line({std::to_string(k), std::to_string(r), std::to_string(b.prior),
                              std::to_string(*b.improved), std::to_string(c.n)});
        }
        return csv ? text : nlohmann::json{{"report", which}, {"rows", rows}}.dump(2) + "\n";
    }
    if (which == "bound-compare") {
        std::string text = csv_line({"n", "r", "hamming_type", "source"});
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 2; r <= 6; ++r) {
            const int v = hamming_type_bound(31, r, 2);
            rows.push_back({{"n", 31}, {"r", r}, {"hamming_type", v}, {"source", "closed form"}});
            text += csv_line({"31", std::to_string(r), std::to_string(v), "closed form"});
        }
        return csv ? text : nlohmann::json{{"report", which}, {"rows", rows}}.dump(2) + "\n";
    }
    if (which == "fig-rate-4") {
        std::string text = csv_line({"r", "tamo_barg", "transpose_new"});
        for (int r = 3; r <= 20; ++r) {
            const auto b = avail_rate_bounds(r, 4);
            text += csv_line({std::to_string(r), to_string(b.tamo_barg), b.transpose_new ? to_string(*b.transpose_new) : ""});
        }
        return text;
    }
    if (which == "fig-dmin-t3") {
        std::string text = csv_line({"r", "n", "k", "wang", "tamo_barg", "kruglik_frolov", "msw_new"});
        for (int r = 3; r <= 10; ++r) {
            const int n = static_cast<int>(binom(r + 3, 3));
            const int k = static_cast<int>(floor(Rational(n) * avail_rho(r, 3)));
            const auto b = avail_dmin_bounds(n, k, r, 3);
            text += csv_line({std::to_string(r), std::to_string(n), std::to_string(k), std::to_string(b.wang),
                              std::to_string(b.tamo_barg), std::to_string(b.kruglik_frolov),
                              b.msw_new ? std::to_string(*b.msw_new) : ""});
        }
        return text;
    }
    if (which == "fig-min-len-3") {
        std::string text = csv_line({"k", "r", "prior", "new"});
        for (int r = 2; r <= 20; ++r) {
            if (20 > std::pow(r, 1.8) - 1) continue;
            const auto b = seq_blocklength_bounds(20, r, 3);
            text += csv_line({"20", std::to_string(r), std::to_string(b.prior), b.improved ? std::to_string(*b.improved) : ""});
        }
        return text;
    }
    throw Error("UsageError", "unknown report " + which);
}

int fail_json(const std::string& kind, const std::string& detail, int code) {
    std::cerr << nlohmann::json{{"error", kind}, {"detail", detail}}.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    Run run;
    for (int i = 1; i < argc; ++i) run.argv.emplace_back(argv[i]);

    CLI::App app{"Locally recoverable code constructions, bounds and verifiers"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", run.seed, "Seed for every randomized step")->capture_default_str();
    app.add_option("--jobs", run.jobs, "Worker threads for verification")->capture_default_str();
    app.add_option("-o,--out", run.out_path, "Write output to a file instead of stdout");
    app.add_option("--manifest", run.manifest_path, "Write a run manifest JSON");

    ConstructArgs ca;
    std::string kind;
    auto* construct = app.add_subcommand("construct", "Build a code and print it as JSON");
    construct->add_option("kind", kind, "seq|t2|t3|moore|pyramid|tamobarg|product|wang|pgplane|steiner|pmr|mr-r12|mr-rd2|mr-coset")
        ->required()
        ->check(CLI::IsMember({"seq", "t2", "t3", "moore", "pyramid", "tamobarg", "product", "wang", "pgplane", "steiner",
                               "pmr", "mr-r12", "mr-rd2", "mr-coset"}));
    construct->add_option("--r", ca.r);
    construct->add_option("--t", ca.t);
    construct->add_option("--k", ca.k);
    construct->add_option("--n", ca.n);
    construct->add_option("--m", ca.m);
    construct->add_option("--q", ca.q, "Field order");
    construct->add_option("--beta", ca.beta);
    construct->add_option("--s", ca.s);
    construct->add_option("--delta", ca.delta, "Local distance minus one, or Delta for pmr");
    construct->add_option("--psi", ca.psi);
    construct->add_option("--N", ca.N);
    construct->add_option("--D", ca.D);
    construct->add_option("--base-q", ca.base_q);
    construct->add_option("--aux", ca.aux, "catalog|random");
    construct->add_option("--variant", ca.variant);
    construct->add_option("--name", ca.name, "t3 fixture name");
    construct->add_option("--shifts", ca.h, "roots|random");

    BoundArgs ba;
    std::string bound_name;
    auto* bound = app.add_subcommand("bound", "Evaluate a bound");
    bound->add_option("name", bound_name)->required();
    bound->add_option("--n", ba.n);
    bound->add_option("--k", ba.k);
    bound->add_option("--r", ba.r);
    bound->add_option("--t", ba.t);
    bound->add_option("--d", ba.d);
    bound->add_option("--w", ba.w);
    bound->add_option("--q", ba.q);
    bound->add_option("--mode", ba.mode);
    bound->add_flag("--csv", run.csv);

    std::string property, code_path, mode = "auto";
    std::uint64_t samples = 100000;
    int vr = -1, vt = -1, vdelta = -1, vs = -1;
    auto* verify = app.add_subcommand("verify", "Check a property of a code file");
    verify->add_option("property", property)
        ->required()
        ->check(CLI::IsMember({"seq-recovery", "availability", "sa", "pmds", "pmr", "staircase", "rate-optimal-t2"}));
    verify->add_option("--code", code_path)->required();
    verify->add_option("--mode", mode)->check(CLI::IsMember({"auto", "exhaustive", "sampled", "certificate"}));
    verify->add_option("--samples", samples);
    verify->add_option("--r", vr);
    verify->add_option("--t", vt);
    verify->add_option("--delta", vdelta);
    verify->add_option("--s", vs, "Extra erasures for pmds");

    std::string report_name;
    auto* rep = app.add_subcommand("report", "Re-derive a comparison table or figure CSV");
    rep->add_option("name", report_name)
        ->required()
        ->check(CLI::IsMember({"table-3.1", "bound-compare", "fig-rate-4", "fig-dmin-t3", "fig-min-len-3"}));
    rep->add_flag("--csv", run.csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail_json("UsageError", e.what(), 2);
    }

    try {
        if (*construct) {
            nlohmann::json extra = nlohmann::json::object();
            const LinearCode c = build_code(kind, ca, run, extra);
            nlohmann::json j = code_to_json(c);
            j["provenance"] = provenance(run, kind, c);
            for (auto& [key, v] : extra.items()) j["provenance"][key] = v;
            run.emit(j.dump(2) + "\n");
            run.finish("construct");
            return 0;
        }
        if (*bound) {
            const BoundReport b = compute_bound(bound_name, ba);
            if (run.csv) {
                run.emit(csv_line({"name", "inputs", "value"}) +
                         csv_line({b.name, "\"" + b.inputs.dump() + "\"", "\"" + b.value.dump() + "\""}));
            } else {
                run.emit(b.to_json().dump(2) + "\n");
            }
            run.finish("bound");
            return 0;
        }
        if (*verify) {
            const LinearCode c = code_from_json(nlohmann::json::parse(run.load(code_path)));
            SampleOptions so{parse_verify_mode(mode), samples, run.seed, run.jobs};
            const int r = vr >= 0 ? vr : c.params.r;
            const int t = vt >= 0 ? vt : c.params.t;
            auto need_structure = [&]() -> const LocalStructure& {
                if (!c.structure) throw Error("UsageError", "code file has no structure block");
                return *c.structure;
            };
            VerifyReport vrep;
            if (property == "seq-recovery") vrep = seq_recovery_check(c, r, t, so);
            else if (property == "availability") vrep = availability_check(c, r, t);
            else if (property == "sa") vrep = sa_check(c.H, r, t);
            else if (property == "staircase") vrep = staircase_check(c.H, r, t);
            else if (property == "rate-optimal-t2") vrep = classify_rate_optimal_t2(c, r);
            else if (property == "pmr") vrep = pmr_check(c, need_structure());
            else {
                const auto& ls = need_structure();
                const int delta = vdelta >= 0 ? vdelta : ls.delta;
                const int s = vs >= 0 ? vs : c.n - c.k - static_cast<int>(ls.groups.size()) * delta;
                vrep = pmds_check(c, ls, delta, s, so);
            }
            run.emit(vrep.to_json().dump(2) + "\n");
            run.finish("verify");
            return vrep.pass ? 0 : 1;
        }
        run.emit(make_report(report_name, run.csv));
        run.finish("report");
        return 0;
    } catch (const Error& e) {
        const std::string what = e.what();
        return fail_json(e.kind(), what.substr(std::min(what.size(), std::string(e.kind()).size() + 2)), 2);
    } catch (const nlohmann::json::exception& e) {
        return fail_json("ParseError", e.what(), 2);
    } catch (const std::exception& e) {
        return fail_json("Error", e.what(), 2);
    }
}
