// Command-line front end: loads algebras, maps, kernels, distributions and
// states from files, runs conversions, weakest-precondition and evolution
// commands, and emits deterministic JSON reports.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 precondition/domain error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <variant>

#include "CLI11.hpp"

#include "gelfand/io.hpp"
#include "gelfand/random.hpp"

namespace gelfand {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;

// The reporting tolerance; GELFAND_TOL overrides it. Construction-time
// tolerances in the library are unaffected.
double reporting_tolerance() {
    const char* env = std::getenv("GELFAND_TOL");
    if (env == nullptr || *env == '\0') {
        return kClassifyTol;
    }
    try {
        std::size_t used = 0;
        const double tol = std::stod(env, &used);
        if (used != std::string(env).size() || !(tol > 0.0)) {
            throw std::invalid_argument("not a positive number");
        }
        return tol;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, std::string("GELFAND_TOL=\"") + env +
                                               "\" is not a positive number");
    }
}

// Loaded artifacts keyed by name. Every load validates the module
// invariants before the artifact becomes visible; invalid files are
// rejected with the violated invariant named.
class Workspace {
  public:
    using Artifact = std::variant<KleisliMap, LinMap, Element, Dist, State, FunctionMap>;

    const KleisliMap& add_kernel(const std::string& name, const std::string& path) {
        return add<KleisliMap>(name, kleisli_from_csv(load_text_file(path)));
    }
    const LinMap& add_map(const std::string& name, const std::string& path) {
        return add<LinMap>(name, linmap_from_json(load_json_file(path)));
    }
    const Element& add_element(const std::string& name, const std::string& path) {
        return add<Element>(name, element_from_json(load_json_file(path)));
    }
    const Dist& add_dist(const std::string& name, const std::string& path) {
        return add<Dist>(name, dist_from_json(load_json_file(path)));
    }
    const FunctionMap& add_function(const std::string& name, const std::string& path) {
        return add<FunctionMap>(name, function_map_from_json(load_json_file(path)));
    }

  private:
    template <typename T>
    const T& add(const std::string& name, T value) {
        const auto [it, inserted] = artifacts_.insert_or_assign(name, Artifact(std::move(value)));
        return std::get<T>(it->second);
    }

    std::map<std::string, Artifact> artifacts_;
};

void emit(const Json& payload, const std::string& out_path) {
    const std::string text = dump_json(payload);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

struct ConvertOptions {
    std::string direction;
    std::string in_path;
    std::string out_path;
};

int run_convert(const ConvertOptions& opt) {
    Workspace workspace;
    const double tol = reporting_tolerance();
    Json sidecar{{"direction", opt.direction}, {"input", opt.in_path}, {"output", opt.out_path}};
    double residual = 0.0;

    if (opt.direction == "kleisli-to-pu") {
        const KleisliMap& kernel = workspace.add_kernel("input", opt.in_path);
        const LinMap pu = to_pu(kernel);
        write_text_file(opt.out_path, dump_json(linmap_to_json(pu)));
        residual = from_pu(pu).max_abs_distance(kernel);
    } else if (opt.direction == "pu-to-kleisli") {
        const LinMap& pu = workspace.add_map("input", opt.in_path);
        const KleisliMap kernel = from_pu(pu);
        write_text_file(opt.out_path, kleisli_to_csv(kernel));
        residual = coeff_distance(to_pu(kernel), pu);
    } else if (opt.direction == "fn-to-miu") {
        const FunctionMap& fn = workspace.add_function("input", opt.in_path);
        const LinMap miu = function_to_miu(fn);
        write_text_file(opt.out_path, dump_json(linmap_to_json(miu)));
        residual = (miu_to_function(miu) == fn) ? 0.0 : 1.0;
    } else if (opt.direction == "miu-to-fn") {
        const LinMap& miu = workspace.add_map("input", opt.in_path);
        const FunctionMap fn = miu_to_function(miu);
        write_text_file(opt.out_path, dump_json(function_map_to_json(fn)));
        residual = coeff_distance(function_to_miu(fn), miu);
    } else {
        throw Error(ErrorKind::ParseError, "unknown direction \"" + opt.direction + "\"");
    }

    sidecar["round_trip_residual"] = residual;
    sidecar["tolerance"] = tol;
    sidecar["pass"] = residual <= tol;
    write_text_file(opt.out_path + ".report.json", dump_json(sidecar));
    return kExitOk;
}

int run_wp(const std::string& kernel_path, const std::string& predicate_path,
           const std::string& out_path) {
    Workspace workspace;
    const KleisliMap& kernel = workspace.add_kernel("kernel", kernel_path);
    const Element& predicate = workspace.add_element("predicate", predicate_path);
    if (!is_effect(predicate)) {
        throw Error(ErrorKind::NotEffect, "predicate is not an effect");
    }
    if (predicate.signature() != AlgebraSignature::commutative(kernel.cod_size())) {
        throw Error(ErrorKind::SignatureMismatch,
                    "predicate lives on " + predicate.signature().to_string() +
                        " but the kernel has " + std::to_string(kernel.cod_size()) +
                        " output states");
    }
    const Element wp = apply_map(to_pu(kernel), predicate);
    emit(element_to_json(wp), out_path);
    return kExitOk;
}

int run_evolve(const std::string& kernel_path, const std::string& dist_path, std::size_t steps,
               const std::string& out_path) {
    Workspace workspace;
    const KleisliMap& kernel = workspace.add_kernel("kernel", kernel_path);
    const Dist& initial = workspace.add_dist("dist", dist_path);
    if (kernel.dom_size() != kernel.cod_size()) {
        throw Error(ErrorKind::SizeMismatch, "iterated evolution needs a square kernel");
    }
    if (initial.size() != kernel.dom_size()) {
        throw Error(ErrorKind::SizeMismatch, "distribution size does not match the kernel");
    }
    Dist current = initial;
    for (std::size_t step = 0; step < steps; ++step) {
        current = kernel.push_forward(current);
    }
    emit(dist_to_json(current), out_path);
    return kExitOk;
}

struct VerifyOptions {
    std::string target;
    std::vector<std::size_t> blocks;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::string out_path;
};

Json check_json(const std::string& name, double residual, double tolerance) {
    return Json{{"name", name},
                {"residual", residual},
                {"tolerance", tolerance},
                {"pass", residual <= tolerance}};
}

int finish_report(Json report, const std::string& out_path) {
    bool all_pass = true;
    for (const Json& check : report["checks"]) {
        all_pass = all_pass && check.at("pass").get<bool>();
    }
    report["pass"] = all_pass;
    emit(report, out_path);
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int run_verify_triangle(const VerifyOptions& opt) {
    const AlgebraSignature sig(opt.blocks.empty() ? std::vector<std::size_t>{1, 1} : opt.blocks);
    const TriangleReport report = verify_triangle(sig, opt.trials, opt.seed);
    Json payload = triangle_report_to_json(report);
    payload["target"] = "triangle";
    payload["trials"] = opt.trials;
    payload["seed"] = opt.seed;
    emit(payload, opt.out_path);
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

int run_verify_equivalence(const VerifyOptions& opt) {
    const double tol = reporting_tolerance();
    const std::size_t n = opt.n == 0 ? 4 : opt.n;
    const std::size_t m = opt.m == 0 ? n : opt.m;
    Rng rng(opt.seed);

    double roundtrip_kleisli = 0.0;
    double roundtrip_pu = 0.0;
    double functor_law = 0.0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const KleisliMap f = random_kleisli_map(n, m, rng);
        roundtrip_kleisli = std::max(roundtrip_kleisli, from_pu(to_pu(f)).max_abs_distance(f));

        // Jitter below the extraction tolerance; the round trip must absorb it.
        ComplexMatrix noisy = to_pu(random_kleisli_map(n, m, rng)).coeffs();
        for (std::size_t r = 0; r < noisy.rows(); ++r) {
            for (std::size_t c = 0; c < noisy.cols(); ++c) {
                noisy(r, c) += rng.complex_in_square(1e-12);
            }
        }
        const LinMap h(AlgebraSignature::commutative(m), AlgebraSignature::commutative(n),
                       std::move(noisy));
        roundtrip_pu = std::max(roundtrip_pu, coeff_distance(to_pu(from_pu(h)), h));

        const KleisliMap a = random_kleisli_map(n, m, rng);
        const KleisliMap b = random_kleisli_map(m, n, rng);
        functor_law = std::max(functor_law,
                               coeff_distance(to_pu(kleisli_compose(b, a)),
                                              compose_maps(to_pu(a), to_pu(b))));
    }

    Json report{{"target", "equivalence"},
                {"n", n},
                {"m", m},
                {"trials", opt.trials},
                {"seed", opt.seed}};
    report["checks"] = Json::array({
        check_json("from_pu_to_pu_roundtrip", roundtrip_kleisli, tol),
        check_json("to_pu_from_pu_roundtrip", roundtrip_pu, tol),
        check_json("contravariant_functor_law", functor_law, tol),
    });
    return finish_report(std::move(report), opt.out_path);
}

int run_verify_monad_laws(const VerifyOptions& opt) {
    const double tol = 1e-12;
    const std::size_t n = opt.n == 0 ? 4 : opt.n;
    Rng rng(opt.seed);

    double unit_left = 0.0;
    double unit_right = 0.0;
    double kleisli_assoc = 0.0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const Dist phi = random_dist(n, rng);
        unit_left = std::max(unit_left,
                             dist_mult(Dist::point(0, 1), {phi}).linf_distance(phi));
        std::vector<Dist> units;
        for (std::size_t x = 0; x < n; ++x) {
            units.push_back(dist_unit(x, n));
        }
        unit_right = std::max(unit_right, dist_mult(phi, units).linf_distance(phi));

        const KleisliMap a = random_kleisli_map(n, n, rng);
        const KleisliMap b = random_kleisli_map(n, n, rng);
        const KleisliMap c = random_kleisli_map(n, n, rng);
        kleisli_assoc = std::max(
            kleisli_assoc, kleisli_compose(kleisli_compose(c, b), a)
                               .max_abs_distance(kleisli_compose(c, kleisli_compose(b, a))));
    }

    Json report{{"target", "monad-laws"}, {"n", n}, {"trials", opt.trials}, {"seed", opt.seed}};
    report["checks"] = Json::array({
        check_json("unit_law_left", unit_left, tol),
        check_json("unit_law_right", unit_right, tol),
        check_json("kleisli_associativity", kleisli_assoc, tol),
    });
    return finish_report(std::move(report), opt.out_path);
}

int run_verify_transpose(const VerifyOptions& opt) {
    const std::size_t n = opt.n == 0 ? 2 : opt.n;
    const LinMap t = transpose_map(n);
    Json report{{"target", "transpose-witness"},
                {"n", n},
                {"seed", opt.seed},
                {"trials", opt.trials}};
    Json checks = Json::array();

    const double self_inverse =
        coeff_distance(compose_maps(t, t), LinMap::identity(AlgebraSignature({n})));
    checks.push_back(check_json("self_inverse", self_inverse, 1e-12));

    if (n >= 2) {
        const EigenDecomposition eig = herm_eig(choi_matrix(t));
        report["min_choi_eigenvalue"] = eig.eigenvalues.front();
        checks.push_back(check_json("min_choi_eigenvalue_is_minus_one",
                                    std::abs(eig.eigenvalues.front() + 1.0), kConstructionTol));

        const MapClass cls = classify_map(t, 1000, opt.seed);
        report["positive"] = positivity_name(cls.positive);
        report["completely_positive"] = complete_positivity_name(cls.completely_positive);
        checks.push_back(check_json("positivity_sampling",
                                    cls.positive == Positivity::SampledYes ? 0.0 : 1.0, 0.5));
        checks.push_back(check_json("not_completely_positive",
                                    cls.completely_positive == CompletePositivity::No ? 0.0 : 1.0,
                                    0.5));

        Rng rng(opt.seed);
        const StateTransformer flip = stat_of_map(t);
        double involution = 0.0;
        for (std::size_t trial = 0; trial < opt.trials; ++trial) {
            const State sigma = random_state(AlgebraSignature({n}), rng);
            involution = std::max(involution, state_distance(flip(flip(sigma)), sigma));
        }
        checks.push_back(check_json("stat_involution", involution, 1e-10));
    } else {
        report["note"] = "n=1 transpose is the identity; no CP counterexample";
    }

    report["checks"] = std::move(checks);
    return finish_report(std::move(report), opt.out_path);
}

int run_verify(const VerifyOptions& opt) {
    if (opt.target == "triangle") {
        return run_verify_triangle(opt);
    }
    if (opt.target == "equivalence") {
        return run_verify_equivalence(opt);
    }
    if (opt.target == "monad-laws") {
        return run_verify_monad_laws(opt);
    }
    if (opt.target == "transpose-witness") {
        return run_verify_transpose(opt);
    }
    throw Error(ErrorKind::ParseError, "unknown verify target \"" + opt.target + "\"");
}

struct ExtremesOptions {
    std::size_t n = 0;
    bool enumerate_miu_given = false;
    std::string out_path;
};

int run_extremes(const ExtremesOptions& opt) {
    if (opt.n == 0) {
        throw Error(ErrorKind::InvalidDimension, "extremes needs n >= 1");
    }
    if (opt.enumerate_miu_given && opt.n > 8) {
        throw Error(ErrorKind::DimensionTooLarge, "MIU enumeration is capped at n = 8");
    }
    const bool enumerate = opt.enumerate_miu_given || opt.n <= 8;

    Json states = Json::array();
    bool all_extreme = true;
    for (std::size_t i = 0; i < opt.n; ++i) {
        const State delta = dirac_state(i, opt.n);
        all_extreme = all_extreme && is_extreme(delta);
        states.push_back(state_to_json(delta));
    }

    Json report{{"n", opt.n}, {"states", std::move(states)}, {"all_extreme", all_extreme}};
    bool pass = all_extreme;
    if (enumerate) {
        const std::size_t count = count_miu_states(opt.n);
        report["miu_state_count"] = count;
        report["miu_count_matches"] = (count == opt.n);
        pass = pass && (count == opt.n);
    }
    emit(report, opt.out_path);
    return pass ? kExitOk : kExitVerifyFailed;
}

struct ClassifyOptions {
    std::string in_path;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::string out_path;
};

int run_classify(const ClassifyOptions& opt) {
    Workspace workspace;
    const LinMap& map = workspace.add_map("input", opt.in_path);
    const MapClass cls = classify_map(map, opt.samples, opt.seed);
    Json report{
        {"input", opt.in_path},
        {"dom", map.dom().blocks()},
        {"cod", map.cod().blocks()},
        {"samples", opt.samples},
        {"seed", opt.seed},
        {"class", map_class_to_json(cls)},
    };
    emit(report, opt.out_path);
    return kExitOk;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"finite-dimensional C*-algebra semantics toolkit"};
    app.require_subcommand(1);

    ConvertOptions convert_opt;
    CLI::App* convert = app.add_subcommand(
        "convert", "convert between stochastic kernels, PU maps and functions");
    convert->add_option("--direction", convert_opt.direction,
                        "kleisli-to-pu | pu-to-kleisli | fn-to-miu | miu-to-fn")
        ->required();
    convert->add_option("--in", convert_opt.in_path, "input artifact")->required();
    convert->add_option("--out", convert_opt.out_path, "output artifact")->required();

    std::string wp_kernel, wp_predicate, wp_out;
    CLI::App* wp = app.add_subcommand("wp", "weakest precondition of an effect along a kernel");
    wp->add_option("kernel", wp_kernel, "row-stochastic CSV matrix")->required();
    wp->add_option("predicate", wp_predicate, "effect JSON")->required();
    wp->add_option("--out", wp_out, "output path (default stdout)");

    std::string evolve_kernel, evolve_dist, evolve_out;
    std::size_t evolve_steps = 1;
    CLI::App* evolve = app.add_subcommand("evolve", "push a distribution through kernel steps");
    evolve->add_option("kernel", evolve_kernel, "row-stochastic CSV matrix")->required();
    evolve->add_option("dist", evolve_dist, "distribution JSON")->required();
    evolve->add_option("--steps", evolve_steps, "number of steps (default 1)");
    evolve->add_option("--out", evolve_out, "output path (default stdout)");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run a structural verification suite");
    verify->add_option("target", verify_opt.target,
                       "triangle | equivalence | monad-laws | transpose-witness")
        ->required();
    verify->add_option("--blocks", verify_opt.blocks, "algebra block dimensions")->delimiter(',');
    verify->add_option("--n", verify_opt.n, "domain size");
    verify->add_option("--m", verify_opt.m, "codomain size");
    verify->add_option("--trials", verify_opt.trials, "number of random trials (default 100)");
    verify->add_option("--seed", verify_opt.seed, "RNG seed (default 0)");
    verify->add_option("--out", verify_opt.out_path, "report path (default stdout)");

    ExtremesOptions extremes_opt;
    CLI::App* extremes = app.add_subcommand("extremes", "Dirac states and the MIU state count");
    extremes->add_option("--n", extremes_opt.n, "number of points")->required();
    CLI::Option* enum_flag =
        extremes->add_flag("--enumerate-miu", "force the exhaustive MIU enumeration");
    extremes->add_option("--out", extremes_opt.out_path, "report path (default stdout)");

    ClassifyOptions classify_opt;
    CLI::App* classify = app.add_subcommand("classify", "classify a linear map (MIU/PU/CP)");
    classify->add_option("--in", classify_opt.in_path, "LinMap JSON")->required();
    classify->add_option("--samples", classify_opt.samples,
                         "rank-one positivity samples (default 1000)");
    classify->add_option("--seed", classify_opt.seed, "RNG seed (default 0)");
    classify->add_option("--out", classify_opt.out_path, "report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParseError;
    }

    if (convert->parsed()) {
        return run_convert(convert_opt);
    }
    if (wp->parsed()) {
        return run_wp(wp_kernel, wp_predicate, wp_out);
    }
    if (evolve->parsed()) {
        return run_evolve(evolve_kernel, evolve_dist, evolve_steps, evolve_out);
    }
    if (verify->parsed()) {
        return run_verify(verify_opt);
    }
    if (extremes->parsed()) {
        extremes_opt.enumerate_miu_given = enum_flag->count() > 0;
        return run_extremes(extremes_opt);
    }
    if (classify->parsed()) {
        return run_classify(classify_opt);
    }
    return kExitParseError;
}

}  // namespace
}  // namespace gelfand

int main(int argc, char** argv) {
    try {
        return gelfand::dispatch(argc, argv);
    } catch (const gelfand::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == gelfand::ErrorKind::ParseError ? gelfand::kExitParseError
                                                          : gelfand::kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gelfand::kExitDomainError;
    }
}
