#include <doctest.h>

#include <numbers>
#include <string>

#include "cauchy/errors.hpp"
#include "cauchy/grid.hpp"

using cauchy::RectGrid;

TEST_CASE("step sizes follow from extents and node counts") {
    const RectGrid g(2.0 * std::numbers::pi, 0.5, 5, 5);
    CHECK(g.dx() == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-15));
    CHECK(g.dy() == doctest::Approx(0.125).epsilon(1e-15));

    const RectGrid desk(2.0 * std::numbers::pi, 0.5, 65, 9);
    CHECK(desk.dx() == doctest::Approx(2.0 * std::numbers::pi / 64.0).epsilon(1e-15));
    CHECK(desk.dy() == doctest::Approx(0.0625).epsilon(1e-15));
    CHECK(desk.bottom_index() == 0);
    CHECK(desk.top_index() == 8);
}

TEST_CASE("node coordinates") {
    const RectGrid g(1.0, 0.5, 3, 3);
    const auto x = g.x_nodes();
    const auto y = g.y_nodes();
    REQUIRE(x.size() == 3);
    REQUIRE(y.size() == 3);
    CHECK(x[0] == 0.0);
    CHECK(x[1] == 0.5);
    CHECK(x[2] == 1.0);
    CHECK(y[0] == 0.0);
    CHECK(y[1] == 0.25);
    CHECK(y[2] == 0.5);
}

TEST_CASE("last node lands exactly on the far boundary") {
    for (std::size_t n : {3u, 7u, 64u, 65u, 1001u}) {
        const RectGrid g(2.0 * std::numbers::pi, 0.3, n, n);
        CHECK(g.x_nodes().back() == 2.0 * std::numbers::pi);
        CHECK(g.y_nodes().back() == 0.3);
    }
}

TEST_CASE("preconditions") {
    try {
        RectGrid g(1.0, 1.0, 2, 5);
        FAIL("expected a precondition error");
    } catch (const cauchy::PreconditionError& e) {
        CHECK(std::string(e.what()).find("insufficient x nodes") != std::string::npos);
    }
    CHECK_THROWS_AS(RectGrid(1.0, 1.0, 5, 2), cauchy::PreconditionError);
    CHECK_THROWS_AS(RectGrid(0.0, 1.0, 5, 5), cauchy::PreconditionError);
    CHECK_THROWS_AS(RectGrid(1.0, -1.0, 5, 5), cauchy::PreconditionError);
    CHECK_THROWS_AS(cauchy::build_grid(1.0, 1.0, 1, 5), cauchy::PreconditionError);
}
