#include "plumbing/cli.hpp"

#include "plumbing/errors.hpp"
#include "plumbing/report.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace plumbing {

namespace {

struct Options {
    std::string input;
    bool json = false;
    std::string binding;
    std::optional<long long> scale;
    bool certificate = false;
    long long s = 3;
    std::optional<long long> t;
    std::optional<long long> n;
    std::string sweep;
    std::optional<long long> chi;
    std::optional<long long> sigma;
    std::optional<long long> mu;
    std::optional<long long> milnor_sigma;
    std::string description;
};

long long to_int(std::string_view text, const std::string& what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ValidationError("invalid integer for " + what + ": '" + std::string(text) + "'");
    }
    return value;
}

PlumbingGraph load_graph(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw ValidationError("cannot open graph file '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return parse_graph(text);
}

// "a=3,b=57" -> binding vector in vertex order; every vertex must appear once.
BindingVector parse_binding(const std::string& text, const PlumbingGraph& g) {
    std::vector<std::optional<BigInt>> slots(g.size());
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("--n entry '" + item + "' is not of the form id=int");
        std::size_t idx = g.index_of(item.substr(0, eq));
        if (slots[idx]) throw ValidationError("--n assigns vertex '" + g.vertex(idx).id + "' twice");
        slots[idx] = BigInt(to_int(std::string_view(item).substr(eq + 1), "--n " + item.substr(0, eq)));
    }
    BindingVector n;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (!slots[v]) throw ValidationError("--n is missing vertex '" + g.vertex(v).id + "'");
        n.entries.push_back(*slots[v]);
    }
    return n;
}

FamilyParams family_params(const Options& o) {
    if (!o.n) throw ValidationError("--N is required");
    FamilyParams p{o.s, 0, *o.n};
    if (o.t) {
        p.t = *o.t;
    } else if (o.s == 3) {
        p.t = 30 * *o.n - 33;
    } else {
        throw ValidationError("--t is required when --s is not 3");
    }
    return p;
}

class Runner {
  public:
    Runner(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

    void emit(const report::Json& j) { out_ << (o_.json ? report::render_json(j) : report::render_text(j)); }

    int check() {
        PlumbingGraph g = load_graph(o_.input, in_);
        emit(report::summary_json(g, validate(g)));
        return kExitOk;
    }

    int canonical() {
        PlumbingGraph g = load_graph(o_.input, in_);
        validate(g);
        emit(report::canonical_json(g, canonical_cycle(g)));
        return kExitOk;
    }

    int divisor() {
        PlumbingGraph g = load_graph(o_.input, in_);
        validate(g);
        CanonicalCycle k = canonical_cycle(g);
        DivisorResult d = minimal_cnp_divisor(g, k);
        report::Json j = report::divisor_json(g, d, cnp_condition(g, k, d.divisor));
        if (o_.scale) {
            Cycle scaled = scale_divisor(g, k, d.divisor, *o_.scale);
            j["scaled"] = report::scaled_divisor_json(*o_.scale, scaled, cnp_condition(g, k, scaled));
        }
        emit(j);
        return kExitOk;
    }

    int openbook() {
        PlumbingGraph g = load_graph(o_.input, in_);
        validate(g);
        if (o_.certificate) {
            EquivalenceCertificate cert = equivalence_certificate(g);
            emit(report::certificate_json(g, cert));
            return cert.verdict ? kExitOk : kExitConsistency;
        }
        BindingVector n;
        if (o_.binding.empty()) {
            n = minimal_cnp_divisor(g, canonical_cycle(g)).binding;
        } else {
            n = parse_binding(o_.binding, g);
        }
        std::optional<BigInt> k;
        if (o_.scale) k = BigInt(*o_.scale);
        OpenBookDescription ob = build_open_book(g, n, k);
        emit(report::openbook_json(g, ob, verify_gluing(ob)));
        return kExitOk;
    }

    int family() {
        if (o_.sweep.empty()) {
            FamilyReport r = evaluate_family(family_params(o_));
            emit(report::family_json(r));
            return (r.has_closed_form && !r.closed_form_match) ? kExitConsistency : kExitOk;
        }
        auto dots = o_.sweep.find("..");
        if (dots == std::string::npos) throw ValidationError("--sweep expects N1..N2");
        long long lo = to_int(std::string_view(o_.sweep).substr(0, dots), "--sweep");
        long long hi = to_int(std::string_view(o_.sweep).substr(dots + 2), "--sweep");
        if (lo > hi) throw ValidationError("--sweep range is empty");
        if (hi - lo > 10000) throw ValidationError("--sweep range is too large");

        std::vector<std::future<std::optional<FamilyReport>>> jobs;
        for (long long n = lo; n <= hi; ++n) {
            Options member = o_;
            member.n = n;
            jobs.push_back(std::async(std::launch::async, [member]() -> std::optional<FamilyReport> {
                try {
                    return evaluate_family(family_params(member));
                } catch (const PreconditionError&) {
                    return std::nullopt;
                }
            }));
        }
        report::Json j;
        j["report"] = "family-sweep";
        report::Json members = report::Json::array();
        report::Json skipped = report::Json::array();
        bool all_match = true;
        for (long long n = lo; n <= hi; ++n) {
            std::optional<FamilyReport> r = jobs[static_cast<std::size_t>(n - lo)].get();
            if (!r) {
                skipped.push_back(n);
                continue;
            }
            all_match = all_match && (!r->has_closed_form || r->closed_form_match);
            members.push_back(report::family_json(*r));
        }
        j["members"] = members;
        j["skipped_N"] = skipped;
        emit(j);
        return all_match ? kExitOk : kExitConsistency;
    }

    int surgery() {
        if (!o_.chi || !o_.sigma) throw ValidationError("--chi and --sigma are required");
        AmbientData ambient{*o_.chi, *o_.sigma, o_.description};
        PlumbingGraph g;
        SmoothingInvariants inv;
        if (o_.n) {
            FamilyReport r = evaluate_family(family_params(o_));
            g = r.graph;
            inv = r.invariants;
        } else {
            if (o_.input.empty()) throw ValidationError("surgery needs either --N or -i with --mu and --milnor-sigma");
            if (!o_.mu || !o_.milnor_sigma) throw ValidationError("--mu and --milnor-sigma are required with -i");
            g = load_graph(o_.input, in_);
            validate(g);
            inv.mu = *o_.mu;
            inv.sigma = *o_.milnor_sigma;
        }
        GraphSummary s = validate(g);
        emit(report::surgery_json(ambient, s, inv, surgery_characteristics(ambient, g, inv)));
        return kExitOk;
    }

  private:
    const Options& o_;
    std::istream& in_;
    std::ostream& out_;
};

} // namespace

int cli_run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plumbing graph invariants, open books and smoothing surgery bookkeeping", "plumbcalc"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&o](CLI::App* sub) { sub->add_option("-i,--input", o.input, "graph file ('-' for stdin)")->required(); };
    auto add_json = [&o](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
    auto add_family = [&o](CLI::App* sub) {
        sub->add_option("--s", o.s, "family parameter s")->capture_default_str();
        sub->add_option("--t", o.t, "family parameter t (defaults to 30N-33 when s = 3)");
        sub->add_option("--N", o.n, "family parameter N");
    };

    auto* check = app.add_subcommand("check", "validate a graph and print its summary");
    add_input(check);
    add_json(check);

    auto* canonical = app.add_subcommand("canonical", "canonical cycle and K^2");
    add_input(canonical);
    add_json(canonical);

    auto* divisor = app.add_subcommand("divisor", "minimal divisor satisfying the open-book condition");
    add_input(divisor);
    add_json(divisor);
    divisor->add_option("--k", o.scale, "also report the divisor scaled by k");

    auto* openbook = app.add_subcommand("openbook", "horizontal open book for a binding vector");
    add_input(openbook);
    add_json(openbook);
    openbook->add_option("--n", o.binding, "binding vector id=int,... (default: from the minimal divisor)");
    openbook->add_option("--k", o.scale, "explicit scale, a multiple of the minimal one");
    openbook->add_flag("--certificate", o.certificate, "emit the equivalence certificate instead");

    auto* family = app.add_subcommand("family", "Milnor fiber invariants of the hypersurface family");
    add_json(family);
    add_family(family);
    family->add_option("--sweep", o.sweep, "evaluate N1..N2 (invalid N are skipped)");

    auto* surgery = app.add_subcommand("surgery", "characteristic numbers after the surgery");
    add_json(surgery);
    add_family(surgery);
    surgery->add_option("-i,--input", o.input, "graph file ('-' for stdin), used without --N");
    surgery->add_option("--chi", o.chi, "Euler characteristic of the ambient manifold");
    surgery->add_option("--sigma", o.sigma, "signature of the ambient manifold");
    surgery->add_option("--mu", o.mu, "Milnor number of the smoothing (with -i)");
    surgery->add_option("--milnor-sigma", o.milnor_sigma, "signature of the Milnor fiber (with -i)");
    surgery->add_option("--description", o.description, "free-text note on the ambient manifold");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    Runner run(o, in, out);
    try {
        if (*check) return run.check();
        if (*canonical) return run.canonical();
        if (*divisor) return run.divisor();
        if (*openbook) return run.openbook();
        if (*family) return run.family();
        if (*surgery) return run.surgery();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ConsistencyError& e) {
        err << "internal consistency error: " << e.what() << '\n';
        return kExitConsistency;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace plumbing
