#include "gelfand/io.hpp"

#include "doctest.h"

#include "gelfand/random.hpp"

using namespace gelfand;

TEST_SUITE_BEGIN("io");

TEST_CASE("emitted artifacts reload identically") {
    Rng rng(233);
    const AlgebraSignature sig({1, 2});

    for (int trial = 0; trial < 10; ++trial) {
        const Element x = random_element(sig, rng);
        const Element back = element_from_json(Json::parse(dump_json(element_to_json(x))));
        CHECK(back.signature() == sig);
        CHECK(cstar_norm(back - x) == doctest::Approx(0.0));

        const State sigma = random_state(sig, rng);
        const State sigma_back = state_from_json(Json::parse(dump_json(state_to_json(sigma))));
        CHECK(state_distance(sigma, sigma_back) == doctest::Approx(0.0));

        const LinMap f = random_pu_map(sig, AlgebraSignature({2}), rng);
        const LinMap f_back = linmap_from_json(Json::parse(dump_json(linmap_to_json(f))));
        CHECK(coeff_distance(f, f_back) == doctest::Approx(0.0));

        const Dist d = random_dist(4, rng);
        CHECK(dist_from_json(Json::parse(dump_json(dist_to_json(d)))).linf_distance(d) == 0.0);

        const KleisliMap kernel = random_kleisli_map(3, 5, rng);
        CHECK(kleisli_from_csv(kleisli_to_csv(kernel)).max_abs_distance(kernel) == 0.0);
    }

    const FinMeasure mu({{0.25, random_state(sig, rng)}, {0.75, random_state(sig, rng)}});
    const FinMeasure mu_back = measure_from_json(Json::parse(dump_json(measure_to_json(mu))));
    CHECK(mu_back.atoms().size() == 2);
    CHECK(mu_back.atoms()[0].first == 0.25);
    CHECK(state_distance(mu_back.atoms()[1].second, mu.atoms()[1].second) == 0.0);

    const FunctionMap fn(3, 5, {4, 0, 2});
    CHECK(function_map_from_json(Json::parse(dump_json(function_map_to_json(fn)))) == fn);
}

TEST_CASE("dump_json is deterministic and round-trip exact on doubles") {
    Rng rng(239);
    for (int trial = 0; trial < 200; ++trial) {
        const double value = rng.uniform(-10.0, 10.0) * std::pow(10.0, rng.uniform(-9.0, 9.0));
        CHECK(std::stod(format_double(value)) == value);
    }
    const Json j = {{"b", 0.1}, {"a", Json::array({1.0 / 3.0, 2})}};
    CHECK(dump_json(j) == dump_json(j));
    CHECK(dump_json(j).find("0.10000000000000001") != std::string::npos);
}

TEST_CASE("structural problems raise ParseError") {
    const auto expect_parse_error = [](const char* text) {
        try {
            element_from_json(Json::parse(text));
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
        }
    };
    expect_parse_error("{}");
    expect_parse_error("{\"blocks\": []}");
    expect_parse_error("{\"blocks\": [[[1,0],[0,0],[0,0]]]}");  // length 3 is not a square
    expect_parse_error("{\"blocks\": [[[1,\"x\"]]]}");

    CHECK_THROWS_AS(kleisli_from_csv(""), Error);
    CHECK_THROWS_AS(kleisli_from_csv("0.5,0.5\n1.0\n"), Error);
    CHECK_THROWS_AS(kleisli_from_csv("0.5,abc\n"), Error);
}

TEST_CASE("domain violations surface as module errors, not parse errors") {
    // Well-formed JSON carrying a non-state: the density is not PSD.
    const char* bad_state = R"({"densities": [[[2,0],[0,0],[0,0],[-1,0]]]})";
    try {
        state_from_json(Json::parse(bad_state));
        FAIL("expected NotPSD");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPsd);
    }

    try {
        kleisli_from_csv("0.5,0.6\n0.0,1.0\n");
        FAIL("expected NotStochastic");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotStochastic);
    }
}

TEST_CASE("file helpers wrap the filesystem") {
    const std::string path = "/tmp/gelfand_io_test.json";
    write_text_file(path, dump_json(Json{{"weights", Json::array({0.5, 0.5})}}));
    const Json loaded = load_json_file(path);
    CHECK(dist_from_json(loaded).size() == 2);
    CHECK_THROWS_AS(load_json_file("/tmp/gelfand_does_not_exist.json"), Error);
}

TEST_SUITE_END();
