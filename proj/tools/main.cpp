#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "biqlat/errors.hpp"
#include "biqlat/report.hpp"

namespace {

using namespace biqlat;
using nlohmann::ordered_json;

void emit(const ReportDocument& doc, const std::string& format) {
    if (format == "json")
        std::cout << to_json_string(doc);
    else if (format == "csv")
        std::cout << to_csv(doc);
    else
        std::cout << to_plain(doc);
}

int emit_domain_error(const std::string& command, const DomainError& e) {
    ordered_json err;
    err["schema_version"] = "1";
    err["command"] = command;
    err["error"] = ordered_json{{"kind", e.kind()}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
}

struct Options {
    std::int64_t max = 0;
    std::int64_t q = 0, k = 0, q_max = 0;
    bool has_q = false, has_k = false, has_q_max = false;
    std::string target;
    std::string format = "plain";
    bool search_u = false;
    bool approx = false;
};

ordered_json base_inputs(const Options& o) {
    ordered_json in;
    if (!o.target.empty()) in["target"] = o.target;
    if (o.has_q) in["q"] = std::to_string(o.q);
    if (o.has_k) in["k"] = std::to_string(o.k);
    if (o.has_q_max) in["q_max"] = std::to_string(o.q_max);
    in["search_u"] = o.search_u;
    in["approx"] = o.approx;
    in["format"] = o.format;
    return in;
}

// Resolves --q/--k into a verification request for construct/verify.
VerifyRequest make_request(const Options& o) {
    VerifyRequest req;
    if (o.has_q) req.q = Int(o.q);
    if (o.has_k) req.k = Int(o.k);
    req.target = *parse_target(o.target);
    req.search_u = o.search_u;
    return req;
}

int run_family(const Options& o) {
    ReportDocument doc;
    doc.command = "family";
    doc.inputs = ordered_json{{"max", std::to_string(o.max)}, {"format", o.format}};
    for (const AdmissibleQ& aq : family_scan(Int(o.max))) doc.results.push_back(json_of(aq));
    emit(doc, o.format);
    return 0;
}

int run_construct(const Options& o) {
    ReportDocument doc;
    doc.command = "construct";
    doc.inputs = base_inputs(o);
    try {
        Construction c = construct_basis(make_request(o));
        LatticeReport context;
        context.q = c.aq.q;
        context.j = c.aq.j;
        if (c.member) context.k = c.member->k;
        context.target = *parse_target(o.target);
        context.normalized_gram = c.normalized_gram;
        doc.results.push_back(construct_json(c.basis, c.gram_matrix, &context, o.approx));
    } catch (const DomainError& e) {
        return emit_domain_error("construct", e);
    }
    emit(doc, o.format);
    return 0;
}

int run_verify(const Options& o) {
    ReportDocument doc;
    doc.command = "verify";
    doc.inputs = base_inputs(o);
    TargetLattice target = *parse_target(o.target);
    bool all_match = true;
    try {
        std::vector<LatticeReport> reports;
        if (o.has_q_max) {
            reports = verify_family(Int(o.q_max), target, o.search_u);
        } else {
            reports.push_back(verify_target(make_request(o)));
        }
        for (const LatticeReport& rep : reports) {
            if (rep.verdict != verdict_for(target)) all_match = false;
            doc.results.push_back(json_of(rep, o.approx));
        }
    } catch (const DomainError& e) {
        return emit_domain_error("verify", e);
    }
    emit(doc, o.format);
    return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and certification of D4, D4+D4, D8 and E8 lattices "
                 "from the quadratic towers Q(sqrt2, sqrt(-q)) and Q(sqrt2, sqrtq, i)"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "plain"}))
            ->capture_default_str();
    };

    CLI::App* family = app.add_subcommand("family", "Scan admissible q with canonical j");
    family->add_option("--max", o.max, "Upper bound on q")->required()->check(CLI::NonNegativeNumber);
    add_format(family);

    auto add_construct_opts = [&](CLI::App* cmd, bool with_qmax) {
        cmd->add_option("--target", o.target, "Target lattice")
            ->required()
            ->check(CLI::IsMember({"d4", "d4d4", "d8", "e8"}));
        auto* qopt = cmd->add_option("--q", o.q, "Field parameter q")->check(CLI::NonNegativeNumber);
        auto* kopt = cmd->add_option("--k", o.k, "Explicit family index k")->check(CLI::NonNegativeNumber);
        qopt->excludes(kopt);
        kopt->excludes(qopt);
        if (with_qmax) {
            auto* qmax = cmd->add_option("--q-max", o.q_max, "Verify every admissible q up to this bound")
                             ->check(CLI::NonNegativeNumber);
            qmax->excludes(qopt);
            qmax->excludes(kopt);
            qopt->excludes(qmax);
            kopt->excludes(qmax);
        }
        cmd->add_flag("--search-u", o.search_u,
                      "Search for the unimodular carrier when q is outside the explicit family");
        cmd->add_flag("--approx", o.approx, "Add floating-point columns (marked approximate)");
        add_format(cmd);
    };

    CLI::App* construct = app.add_subcommand("construct", "Build a basis and its exact Gram matrix");
    add_construct_opts(construct, false);

    CLI::App* verify = app.add_subcommand("verify", "Construct and certify against the target lattice");
    add_construct_opts(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage failures exit 2, --help exits 0
    }

    try {
        if (family->parsed()) return run_family(o);
        o.has_q = construct->count("--q") > 0 || verify->count("--q") > 0;
        o.has_k = construct->count("--k") > 0 || verify->count("--k") > 0;
        o.has_q_max = verify->count("--q-max") > 0;
        if (construct->parsed()) {
            if (!o.has_q && !o.has_k) {
                std::cerr << "construct: one of --q, --k is required\n";
                return 2;
            }
            return run_construct(o);
        }
        if (!o.has_q && !o.has_k && !o.has_q_max) {
            std::cerr << "verify: one of --q, --k, --q-max is required\n";
            return 2;
        }
        return run_verify(o);
    } catch (const biqlat::DomainError& e) {
        return emit_domain_error(app.get_subcommands().front()->get_name(), e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
