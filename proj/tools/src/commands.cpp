#include "sphfun/commands.hpp"

#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "spherical/characters.hpp"
#include "spherical/closed_form.hpp"
#include "spherical/eigsum.hpp"
#include "spherical/errors.hpp"
#include "spherical/oracle.hpp"
#include "sphfun/records.hpp"
#include "sphfun/sweeps.hpp"

namespace spherical::cli {

namespace {

BlockTriple parse_blocks(const std::string& text) {
    const auto parts = parse_int_list(text);
    if (parts.size() != 3) throw InvalidInput("--n expects three comma-separated block sizes");
    return BlockTriple(parts[0], parts[1], parts[2]);
}

void require_format(const std::string& format) {
    if (format != "json" && format != "csv") throw InvalidInput("--format must be json or csv");
}

struct ComputeOptions {
    std::string n;
    int k = 0;
    std::string cycle;
    std::string method = "closed";
    std::string format = "json";
    std::uint64_t oracle_bound = OracleLimits{}.max_group_order;
};

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
    const BlockTriple n = parse_blocks(opt.n);
    require_two_row(n, opt.k);
    const BlockSubset A(parse_int_list(opt.cycle));
    require_format(opt.format);

    std::vector<Method> methods;
    if (opt.method == "closed") methods = {Method::closed_form};
    else if (opt.method == "oracle") methods = {Method::character_oracle};
    else if (opt.method == "module") methods = {Method::module_oracle};
    else if (opt.method == "all") methods = {Method::closed_form, Method::character_oracle, Method::module_oracle};
    else throw InvalidInput("--method must be closed, oracle, module or all");

    OracleLimits limits;
    limits.max_group_order = opt.oracle_bound;
    const Permutation g = embed_cycle(A, n);

    std::vector<ResultRecord> records;
    for (Method method : methods) {
        ResultRecord r;
        r.n = {n.n1(), n.n2(), n.n3()};
        r.k = opt.k;
        r.cycle = A.blocks();
        r.method = method;
        r.multiplicity = multiplicity(n, opt.k);
        try {
            switch (method) {
                case Method::closed_form: r.value = phi_closed(n, opt.k, A); break;
                case Method::character_oracle: r.value = phi_character_oracle(n, opt.k, g, limits); break;
                case Method::module_oracle: r.value = phi_module_oracle(n, opt.k, g, limits); break;
            }
        } catch (const ResourceLimitExceeded& e) {
            if (methods.size() == 1) throw;
            err << "skipping " << method_name(method) << ": " << e.what() << "\n";
            continue;
        }
        records.push_back(std::move(r));
    }

    bool agree = true;
    if (records.size() >= 2) {
        for (const ResultRecord& r : records) agree = agree && r.value == records.front().value;
        for (ResultRecord& r : records) r.agreement = agree;
    }

    if (opt.format == "json") {
        for (const ResultRecord& r : records) out << to_json(r).dump() << "\n";
    } else {
        out << csv_header() << "\n";
        for (const ResultRecord& r : records) out << to_csv(r) << "\n";
    }
    if (!agree) {
        err << "methods disagree\n";
        return kInternalError;
    }
    return kSuccess;
}

struct VerifyOptions {
    int max_block = 3;
    std::string suite = "all";
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t oracle_bound = OracleLimits{}.max_group_order;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    std::vector<std::string> suites;
    if (opt.suite == "all") suites = suite_names();
    else suites = {opt.suite};

    OracleLimits limits;
    limits.max_group_order = opt.oracle_bound;

    bool all_passed = true;
    for (const std::string& suite : suites) {
        const SweepReport report = run_suite(suite, opt.max_block, opt.threads, limits);
        out << suite << ": " << report.comparisons << " comparisons, " << report.failures << " failures\n";
        if (report.first_counterexample) out << "  first counterexample: " << *report.first_counterexample << "\n";
        all_passed = all_passed && report.passed();
    }
    out << (all_passed ? "PASS" : "FAIL") << "\n";
    return all_passed ? kSuccess : kInternalError;
}

struct EigsumOptions {
    std::string n;
    int k = 0;
    std::string d;
    std::string kappa = "0";
    int order = 1;
    bool diagnose = false;
    std::string format = "json";
};

int cmd_eigsum(const EigsumOptions& opt, std::ostream& out) {
    const BlockTriple n = parse_blocks(opt.n);
    require_two_row(n, opt.k);
    const auto degrees = parse_int_list(opt.d);
    if (degrees.size() != 3) throw InvalidInput("--d expects three comma-separated degrees");
    const DegreeTriple d(degrees[0], degrees[1], degrees[2], Rational::parse(opt.kappa));
    require_format(opt.format);

    const Rational value = eigenvalue_sum(n, d, opt.k, opt.order);
    const int mult = multiplicity(n, opt.k);
    const BigInt dim = dim_two_row(n.N(), opt.k);
    std::optional<KappaZeroDiagnostic> diag;
    if (opt.diagnose) diag = kappa_zero_diagnostic(n, d, opt.k, opt.order);

    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = {n.n1(), n.n2(), n.n3()};
        j["k"] = opt.k;
        j["d"] = degrees;
        j["kappa"] = d.kappa().str();
        j["order"] = opt.order;
        j["value"] = value.str();
        j["multiplicity"] = mult;
        j["dimension"] = dim.get_str();
        if (diag) {
            j["diagnostic"] = {{"formula_at_kappa0", diag->formula.str()},
                               {"monomial_prediction", diag->monomial_prediction.str()},
                               {"agree", diag->agree}};
        }
        out << j.dump() << "\n";
    } else {
        out << "n1,n2,n3,k,d1,d2,d3,kappa,order,value,multiplicity,dimension";
        if (diag) out << ",formula_at_kappa0,monomial_prediction,agree";
        out << "\n"
            << n.n1() << "," << n.n2() << "," << n.n3() << "," << opt.k << "," << degrees[0] << "," << degrees[1] << ","
            << degrees[2] << "," << d.kappa().str() << "," << opt.order << "," << value.str() << "," << mult << ","
            << dim.get_str();
        if (diag)
            out << "," << diag->formula.str() << "," << diag->monomial_prediction.str() << ","
                << (diag->agree ? "true" : "false");
        out << "\n";
    }
    return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spherical function values for three-block Young subgroups", "sphfun"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* c = app.add_subcommand("compute", "Evaluate Phi^[N-k,k] at a cycle g_A");
    c->add_option("--n", compute.n, "Block sizes n1,n2,n3")->required();
    c->add_option("--k", compute.k, "Two-row parameter k (2k <= N)")->required();
    c->add_option("--cycle", compute.cycle, "Blocks met by the cycle, e.g. 1,2,3")->required();
    c->add_option("--method", compute.method, "closed|oracle|module|all")->capture_default_str();
    c->add_option("--format", compute.format, "json|csv")->capture_default_str();
    c->add_option("--oracle-bound", compute.oracle_bound, "Largest Young subgroup the oracles enumerate")
        ->capture_default_str();

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Exhaustive exact cross-checks");
    v->add_option("--max-block", verify.max_block, "Largest block size in the sweep")->capture_default_str();
    v->add_option("--suite", verify.suite, "twocycle|threecycle|eigen|diffeq|all")->capture_default_str();
    v->add_option("--threads", verify.threads, "Worker threads")->capture_default_str();
    v->add_option("--oracle-bound", verify.oracle_bound, "Largest Young subgroup the oracles enumerate")
        ->capture_default_str();

    EigsumOptions eig;
    auto* e = app.add_subcommand("eigsum", "Eigenvalue sum of the order-p operator over [N-k,k]");
    e->add_option("--n", eig.n, "Block sizes n1,n2,n3")->required();
    e->add_option("--k", eig.k, "Two-row parameter k")->required();
    e->add_option("--d", eig.d, "Degrees d1,d2,d3 with d1>d2>d3>=0")->required();
    e->add_option("--kappa", eig.kappa, "Coupling as p/q")->capture_default_str();
    e->add_option("--order", eig.order, "Operator order p >= 1")->required();
    e->add_flag("--diagnose", eig.diagnose, "Report the kappa=0 consistency diagnostic");
    e->add_option("--format", eig.format, "json|csv")->capture_default_str();

    std::vector<std::string> argv_storage{"sphfun"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kSuccess : kInvalidInput;
    }

    try {
        if (c->parsed()) return cmd_compute(compute, out, err);
        if (v->parsed()) return cmd_verify(verify, out);
        return cmd_eigsum(eig, out);
    } catch (const InvalidInput& ex) {
        err << "invalid input: " << ex.what() << "\n";
        return kInvalidInput;
    } catch (const ResourceLimitExceeded& ex) {
        err << "refused: " << ex.what() << "\n";
        return kResourceRefusal;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << "\n";
        return kInternalError;
    }
}

}  // namespace spherical::cli
