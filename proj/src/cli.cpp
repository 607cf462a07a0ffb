#include "covermonoid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "covermonoid/algebra.hpp"
#include "covermonoid/group.hpp"
#include "covermonoid/io.hpp"
#include "covermonoid/lattice.hpp"
#include "covermonoid/stack.hpp"
#include "covermonoid/two_degree.hpp"
#include "covermonoid/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace covermonoid {

namespace {

// Unusable input (exit code 2), as opposed to a failed computation (exit 1).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void bad_input(const std::string& msg) { throw InputError(msg); }

void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("COVERMONOID_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n > 0) omp_set_num_threads(static_cast<int>(n));
    }
#endif
}

FiniteAbelianGroup parse_group(const std::string& spec) {
    try {
        return FiniteAbelianGroup::parse(spec);
    } catch (const std::exception& e) {
        bad_input(e.what());
    }
}

void validate_datum(long r, long alpha, long N, long qbar) {
    if (N <= 1) bad_input("N must exceed 1");
    if (r <= 0) bad_input("r must be positive");
    if (alpha < 0 || alpha >= N) bad_input("alpha must lie in [0, N)");
    if (r == 1 && alpha <= 1) bad_input("the pair (r, alpha) = (1, 0) or (1, 1) is degenerate");
    std::vector<long> omega = omega_set((N - alpha) % N, N);
    if (std::find(omega.begin(), omega.end(), qbar) == omega.end())
        bad_input("qbar must be a record index for the given (alpha, N)");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string ray_text(const Ray& E) {
    std::string s;
    for (std::size_t i = 0; i < E.e_values().size(); ++i) {
        if (i) s += " ";
        s += rat_str(E.e_values()[i]);
    }
    return s;
}

std::string element_text(const FiniteAbelianGroup& M, long e) {
    std::string s = "(";
    const auto c = M.coords(e);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

std::string do_lattice(const FiniteAbelianGroup& M, const std::string& format) {
    CoverLattice L(M);
    if (format == "text") {
        std::ostringstream out;
        out << "group " << M.spec() << "\n";
        out << "order " << M.size() << "\n";
        out << "ambient rank " << L.ambient_rank() << "\n";
        out << "pairs";
        for (const auto& p : L.pairs()) out << " (" << p.m << "," << p.n << ")";
        out << "\nk-basis\n";
        for (long i = 0; i < L.k_basis().rows; ++i) {
            for (long j = 0; j < L.k_basis().cols; ++j)
                out << (j ? " " : "") << L.k_basis().at(i, j).get_str();
            out << "\n";
        }
        return out.str();
    }
    Json j;
    j["group"] = M.spec();
    j["order"] = std::to_string(M.size());
    j["ambient_rank"] = std::to_string(L.ambient_rank());
    Json pairs = Json::array();
    for (const auto& p : L.pairs())
        pairs.push_back(Json::array({std::to_string(p.m), std::to_string(p.n)}));
    j["pairs"] = pairs;
    j["k_basis"] = matrix_json(L.k_basis());
    return dump(j);
}

std::string do_presentation(const FiniteAbelianGroup& M, const std::string& format) {
    CoverLattice L(M);
    MonoidPresentation P = reduced_presentation(L);
    if (format == "text") return presentation_text(P);
    return dump(presentation_json(P));
}

std::string do_rays(const FiniteAbelianGroup& M, const std::string& format) {
    CoverLattice L(M);
    std::vector<Ray> rays = extremal_rays(L);
    if (format == "text") {
        std::string out;
        for (const Ray& E : rays) out += ray_text(E) + "\n";
        return out;
    }
    Json j = Json::array();
    for (const Ray& E : rays) j.push_back(ray_json(E));
    return dump(j);
}

std::string do_pardini(const FiniteAbelianGroup& M, const std::string& format) {
    CoverLattice L(M);
    if (format == "text") {
        std::ostringstream out;
        for (const auto& eta : cyclic_surjections(M)) {
            out << "Z/" << eta.target.size() << " images";
            for (long img : eta.images) out << " " << img;
            out << " : " << ray_text(pardini_ray(L, eta)) << "\n";
        }
        return out.str();
    }
    Json j = Json::array();
    for (const auto& eta : cyclic_surjections(M)) {
        Json row;
        row["order"] = std::to_string(eta.target.size());
        row["images"] = long_vector_json(eta.images);
        row["ray"] = ray_json(pardini_ray(L, eta));
        j.push_back(row);
    }
    return dump(j);
}

std::string do_smooth_check(const FiniteAbelianGroup& M, const std::string& format) {
    CoverLattice L(M);
    std::vector<Ray> rays = extremal_rays(L);
    if (format == "text") {
        std::ostringstream out;
        for (const Ray& E : rays)
            out << "h=" << h_of_ray(E) << " smooth=" << (is_smooth_ray(E) ? "yes" : "no")
                << " : " << ray_text(E) << "\n";
        return out.str();
    }
    Json j = Json::array();
    for (const Ray& E : rays) {
        Json row;
        row["ray"] = ray_json(E);
        row["h"] = std::to_string(h_of_ray(E));
        row["smooth"] = is_smooth_ray(E);
        j.push_back(row);
    }
    return dump(j);
}

std::string do_omega(long beta, long N, const std::string& format) {
    if (N <= 1) bad_input("N must exceed 1");
    if (beta < 0 || beta >= N) bad_input("beta must lie in [0, N)");
    std::vector<long> omega = omega_set(beta, N);
    if (format == "text") {
        std::ostringstream out;
        for (long q : omega) out << q << " " << d_value(beta, N, q) << "\n";
        return out.str();
    }
    Json j;
    j["beta"] = std::to_string(beta);
    j["N"] = std::to_string(N);
    j["omega"] = long_vector_json(omega);
    std::vector<long> d;
    for (long q : omega) d.push_back(d_value(beta, N, q));
    j["d_values"] = long_vector_json(d);
    return dump(j);
}

std::string do_invariants(long r, long alpha, long N, long qbar, const std::string& format) {
    validate_datum(r, alpha, N, qbar);
    TwoDegreeInvariants I = invariants_for(r, alpha, N, qbar);
    if (format == "text") {
        std::ostringstream out;
        out << "group " << I.presentation.group.spec() << "\n";
        out << "qhat " << I.qhat << "\ndqhat " << I.dqhat << "\nqprime " << I.qprime << "\n";
        out << "z " << I.z << "\nx " << I.x << "\ny " << I.y << "\nw " << I.w << "\n";
        out << "gamma " << I.gamma << "\nf";
        for (long v : I.f) out << " " << v;
        out << "\n";
        return out.str();
    }
    return dump(invariants_json(I));
}

std::string do_lambda_delta(long r, long alpha, long N, long qbar, const std::string& format) {
    validate_datum(r, alpha, N, qbar);
    if (qbar * r == 1 || qbar == N)
        bad_input("the dual pair requires qbar*r != 1 and qbar != N");
    TwoDegreeInvariants I = invariants_for(r, alpha, N, qbar);
    CoverLattice L(I.presentation.group);
    auto [lam, del] = lambda_delta(L, r, alpha, N, qbar);
    if (format == "text")
        return "lambda: " + ray_text(lam) + "\ndelta: " + ray_text(del) + "\n";
    Json j;
    j["lambda"] = ray_json(lam);
    j["delta"] = ray_json(del);
    return dump(j);
}

std::string do_sigma(const FiniteAbelianGroup& M, bool bar, const std::string& format) {
    std::vector<SigmaDatum> sigma = enumerate_sigma(M, bar);
    if (format == "text") {
        std::ostringstream out;
        for (const auto& chi : sigma) {
            out << "r=" << chi.r << " alpha=" << chi.alpha << " N=" << chi.N
                << " qbar=" << chi.qbar << " images";
            for (long img : chi.phi.images) out << " " << element_text(chi.phi.target, img);
            out << "\n";
        }
        return out.str();
    }
    Json j = Json::array();
    for (const auto& chi : sigma) j.push_back(sigma_json(chi));
    return dump(j);
}

std::string do_theta2(const FiniteAbelianGroup& M, const std::string& format) {
    CoverLattice L(M);
    std::vector<std::vector<Ray>> theta = enumerate_theta2(L);
    if (format == "text") {
        std::ostringstream out;
        for (const auto& seq : theta) {
            for (std::size_t i = 0; i < seq.size(); ++i)
                out << (i ? " | " : "") << ray_text(seq[i]);
            out << "\n";
        }
        return out.str();
    }
    Json j = Json::array();
    for (const auto& seq : theta) {
        Json s = Json::array();
        for (const Ray& E : seq) s.push_back(ray_json(E));
        j.push_back(s);
    }
    return dump(j);
}

std::string do_nc_table(const FiniteAbelianGroup& M, const std::string& format) {
    CoverLattice L(M);
    std::vector<NCRow> rows = nc_ray_table(L);
    if (format == "text") {
        std::ostringstream out;
        for (const auto& row : rows) {
            out << row.family << " l=" << row.l << " (r,alpha,N,qbar)=(" << row.r << ","
                << row.alpha << "," << row.N << "," << row.qbar << ") images";
            for (long img : row.phi.images) out << " " << element_text(row.phi.target, img);
            out << " : " << ray_text(row.ray) << "\n";
        }
        return out.str();
    }
    Json j = Json::array();
    for (const auto& row : rows) j.push_back(nc_row_json(row));
    return dump(j);
}

std::string do_classify(long r, long alpha, long N, long qbar, long lambda, long prime,
                        const std::string& format) {
    validate_datum(r, alpha, N, qbar);
    long p = admissible_prime(prime, r * N);
    Field F = Field::prime(p);
    MultiplicationTable psi = universal_multiplication(
        r, alpha, N, qbar, FieldScalar::from_integer(F, lambda), FieldScalar::zero(F));
    if (H_of_table(psi) != std::vector<long>{0})
        bad_input("the universal table has a nontrivial split part; classification needs H = 0");
    TwoDegreeInvariants I = invariants_for(r, alpha, N, qbar);
    TwoDegreeClass c = classify_two_degree_algebra(psi, I.presentation.e1, I.presentation.e2);
    if (format == "text") {
        std::ostringstream out;
        out << "qbar " << c.qbar << "\nlambda " << c.lambda.str() << "\n";
        return out.str();
    }
    Json j;
    j["input"] = {{"r", std::to_string(r)},
                  {"alpha", std::to_string(alpha)},
                  {"N", std::to_string(N)},
                  {"qbar", std::to_string(qbar)},
                  {"lambda", std::to_string(lambda)}};
    j["prime"] = std::to_string(p);
    j["qbar"] = std::to_string(c.qbar);
    j["lambda"] = scalar_json(c.lambda);
    return dump(j);
}

std::string do_h(const FiniteAbelianGroup& M, long level, const std::string& format) {
    CoverLattice L(M);
    std::vector<Ray> rays = extremal_rays(L);
    if (format == "text") {
        std::ostringstream out;
        for (const Ray& E : rays) {
            out << "h=" << h_of_ray(E);
            if (level == 0 || level == 1)
                out << " level1=" << (h_locus_membership(E, 1) ? "yes" : "no");
            if (level == 0 || level == 2)
                out << " level2=" << (h_locus_membership(E, 2) ? "yes" : "no");
            out << " : " << ray_text(E) << "\n";
        }
        return out.str();
    }
    Json j = Json::array();
    for (const Ray& E : rays) {
        Json row;
        row["ray"] = ray_json(E);
        row["h"] = std::to_string(h_of_ray(E));
        if (level == 0 || level == 1) row["level_one"] = h_locus_membership(E, 1);
        if (level == 0 || level == 2) row["level_two"] = h_locus_membership(E, 2);
        j.push_back(row);
    }
    return dump(j);
}

std::string do_reducible(const FiniteAbelianGroup& M, const std::string& format, int& exit_code) {
    IrreducibilityReport rep = irreducibility_report(M);
    if (rep.verdict == Verdict::unknown) exit_code = 1;
    if (format == "text") {
        std::ostringstream out;
        out << "verdict ";
        switch (rep.verdict) {
            case Verdict::reducible: out << "reducible"; break;
            case Verdict::irreducible: out << "irreducible"; break;
            case Verdict::unknown: out << "unknown"; break;
        }
        out << "\n";
        if (rep.certificate) {
            out << "certificate";
            for (long e : *rep.certificate) out << " " << element_text(M, e);
            out << "\n";
        }
        out << "reason " << rep.reason << "\n";
        return out.str();
    }
    return dump(irreducibility_json(M, rep));
}

std::string do_smooth_stack(const FiniteAbelianGroup& M, const std::string& format,
                            int& exit_code) {
    SmoothnessVerdict v = smoothness_verdict(M);
    if (!v.smooth) exit_code = 1;
    if (format == "text") {
        std::ostringstream out;
        out << "smooth " << (v.smooth ? "yes" : "no") << "\n";
        if (v.triple) {
            out << "triple";
            for (long e : *v.triple) out << " " << element_text(M, e);
            out << "\n";
        }
        return out.str();
    }
    return dump(smoothness_json(M, v));
}

std::string do_fan(const FiniteAbelianGroup& M, bool full, const std::string& format) {
    CoverLattice L(M);
    std::vector<std::vector<Ray>> seqs =
        full ? smooth_sequences_from_extremal_rays(L) : enumerate_theta2(L);
    Fan fan = smooth_locus_fan(L, seqs);
    if (format == "text") return fan_text(fan);
    return dump(fan_json(fan));
}

std::string do_verify(long max_order, long prime, const std::string& format, int& exit_code) {
    if (max_order < 1) bad_input("--max-order must be positive");
    if (prime < 2) bad_input("--prime must be at least 2");
    std::vector<PropertyResult> results = run_property_suite(VerifyBounds{max_order, prime});
    long failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    if (failed > 0) exit_code = 1;
    if (format == "text") {
        std::ostringstream out;
        for (const auto& r : results) {
            out << (r.pass ? "pass" : "FAIL") << " " << r.name;
            for (std::size_t i = r.name.size(); i < 40; ++i) out << " ";
            out << " (" << r.detail << ")\n";
        }
        out << "passed " << (results.size() - failed) << " of " << results.size() << "\n";
        return out.str();
    }
    Json j = Json::array();
    for (const auto& r : results) {
        Json row;
        row["name"] = r.name;
        row["pass"] = r.pass;
        row["detail"] = r.detail;
        j.push_back(row);
    }
    return dump(j);
}

}  // namespace

int run_cli(int argc, char** argv) {
    apply_thread_cap();

    CLI::App app{"Combinatorics of ramified abelian covers: cover monoids, ray tables, "
                 "two-generator algebras, and moduli smoothness reports"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    long max_order = 12;
    long prime = 101;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--max-order", max_order, "largest group order for verify");
    app.add_option("--prime", prime, "preferred prime for finite-field runs");

    struct {
        std::string group;
        long beta = 0, N = 0;
        long r = 0, alpha = 0, qbar = 0, lambda = 0;
        long level = 0;
        bool bar = false, full = false;
    } arg;

    auto add_group = [&](CLI::App* sub) {
        sub->add_option("group", arg.group, "group spec, e.g. 4 or 2,2")->required();
        sub->fallthrough();
    };
    auto add_datum = [&](CLI::App* sub) {
        sub->add_option("r", arg.r, "index of <n> in M")->required();
        sub->add_option("alpha", arg.alpha, "r*m = alpha*n")->required();
        sub->add_option("N", arg.N, "order of n")->required();
        sub->add_option("qbar", arg.qbar, "record index")->required();
        sub->fallthrough();
    };

    CLI::App* c_lattice = app.add_subcommand("lattice", "kernel lattice and pair generators");
    add_group(c_lattice);
    CLI::App* c_pres = app.add_subcommand("presentation", "binomial relations of the monoid algebra");
    add_group(c_pres);
    CLI::App* c_rays = app.add_subcommand("rays", "extremal rays of the dual cone");
    add_group(c_rays);
    CLI::App* c_pardini = app.add_subcommand("pardini", "carry rays of all cyclic quotients");
    add_group(c_pardini);
    CLI::App* c_smooth = app.add_subcommand("smooth-check", "smoothness and h of each extremal ray");
    add_group(c_smooth);

    CLI::App* c_omega = app.add_subcommand("omega", "record indices of the step function");
    c_omega->add_option("beta", arg.beta, "residue in [0, N)")->required();
    c_omega->add_option("N", arg.N, "modulus")->required();
    c_omega->fallthrough();

    CLI::App* c_inv = app.add_subcommand("invariants", "numerical invariants of a datum");
    add_datum(c_inv);
    CLI::App* c_ld = app.add_subcommand("lambda-delta", "dual ray pair of a datum");
    add_datum(c_ld);

    CLI::App* c_sigma = app.add_subcommand("sigma", "marked two-generator data on a group");
    add_group(c_sigma);
    c_sigma->add_flag("--bar", arg.bar, "apply only the weak exclusions");

    CLI::App* c_theta = app.add_subcommand("theta2", "ray sequences covering the h <= 2 locus");
    add_group(c_theta);
    CLI::App* c_nc = app.add_subcommand("nc-table", "normal-crossing ray table rows");
    add_group(c_nc);

    CLI::App* c_classify = app.add_subcommand("classify", "recover (qbar, lambda) from the universal table");
    add_datum(c_classify);
    c_classify->add_option("lambda", arg.lambda, "relation scalar")->required();

    CLI::App* c_h = app.add_subcommand("h", "h-locus membership of each extremal ray");
    add_group(c_h);
    c_h->add_option("--level", arg.level, "restrict to one level")->check(CLI::Range(1, 2));

    CLI::App* c_red = app.add_subcommand("reducible", "irreducibility verdict for the moduli scheme");
    add_group(c_red);
    CLI::App* c_stack = app.add_subcommand("smooth-stack", "smoothness verdict for the moduli stack");
    add_group(c_stack);

    CLI::App* c_fan = app.add_subcommand("fan", "fan of the smooth toric locus");
    add_group(c_fan);
    c_fan->add_flag("--full", arg.full, "use all smooth sequences of extremal rays");

    CLI::App* c_verify = app.add_subcommand("verify", "run the documented property suite");
    c_verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    int exit_code = 0;
    std::string payload;
    try {
        if (*c_lattice) payload = do_lattice(parse_group(arg.group), format);
        else if (*c_pres) payload = do_presentation(parse_group(arg.group), format);
        else if (*c_rays) payload = do_rays(parse_group(arg.group), format);
        else if (*c_pardini) payload = do_pardini(parse_group(arg.group), format);
        else if (*c_smooth) payload = do_smooth_check(parse_group(arg.group), format);
        else if (*c_omega) payload = do_omega(arg.beta, arg.N, format);
        else if (*c_inv) payload = do_invariants(arg.r, arg.alpha, arg.N, arg.qbar, format);
        else if (*c_ld) payload = do_lambda_delta(arg.r, arg.alpha, arg.N, arg.qbar, format);
        else if (*c_sigma) payload = do_sigma(parse_group(arg.group), arg.bar, format);
        else if (*c_theta) payload = do_theta2(parse_group(arg.group), format);
        else if (*c_nc) payload = do_nc_table(parse_group(arg.group), format);
        else if (*c_classify)
            payload = do_classify(arg.r, arg.alpha, arg.N, arg.qbar, arg.lambda, prime, format);
        else if (*c_h) payload = do_h(parse_group(arg.group), arg.level, format);
        else if (*c_red) payload = do_reducible(parse_group(arg.group), format, exit_code);
        else if (*c_stack) payload = do_smooth_stack(parse_group(arg.group), format, exit_code);
        else if (*c_fan) payload = do_fan(parse_group(arg.group), arg.full, format);
        else if (*c_verify) payload = do_verify(max_order, prime, format, exit_code);
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::fprintf(stderr, "error: cannot open %s\n", out_path.c_str());
            return 2;
        }
        file << payload;
    } else {
        std::fputs(payload.c_str(), stdout);
    }
    return exit_code;
}

}  // namespace covermonoid
