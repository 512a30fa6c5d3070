#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "twistlat/geometry.hpp"

using namespace twistlat;
using Catch::Approx;

TEST_CASE("commensurate angle formulas") {
    auto sq = commensurate_angle(LatticeKind::square, 2, 1);
    CHECK(sq.theta == Approx(0.6435011087932844).epsilon(1e-12));
    CHECK(sq.degrees() == Approx(36.8698976458).margin(1e-6));

    auto untwisted = commensurate_angle(LatticeKind::square, 1, 1);
    CHECK(untwisted.theta == 0.0);

    auto hc = commensurate_angle(LatticeKind::honeycomb, 2, 1);
    CHECK(hc.theta == Approx(std::acos(13.0 / 14.0)).epsilon(1e-14));
    CHECK(hc.degrees() == Approx(21.7867892983).margin(1e-6));
}

TEST_CASE("commensurate angle input validation") {
    CHECK_THROWS_AS(commensurate_angle(LatticeKind::square, 0, 1), InvalidIndexError);
    CHECK_THROWS_AS(commensurate_angle(LatticeKind::square, 2, -1), InvalidIndexError);
    CHECK_THROWS_AS(commensurate_angle(LatticeKind::square, 1, 2), InvalidIndexError);
    // theta(3,1) = 53.13 deg folds back to theta(2,1); rejected with a hint
    CHECK_THROWS_AS(commensurate_angle(LatticeKind::square, 3, 1), InvalidIndexError);

    auto reduced = commensurate_angle(LatticeKind::square, 4, 2);
    CHECK(reduced.m == 2);
    CHECK(reduced.n == 1);
    CHECK(reduced.reduced_from_gcd);
    CHECK_FALSE(commensurate_angle(LatticeKind::square, 2, 1).reduced_from_gcd);
}

TEST_CASE("enumerate angles") {
    auto sq3 = enumerate_angles(LatticeKind::square, 3);
    REQUIRE(sq3.size() >= 2);
    bool has21 = false, has32 = false;
    for (const auto& a : sq3) {
        if (a.m == 2 && a.n == 1) has21 = true;
        if (a.m == 3 && a.n == 2) has32 = true;
    }
    CHECK(has21);
    CHECK(has32);

    auto sq1 = enumerate_angles(LatticeKind::square, 1);
    REQUIRE(sq1.size() == 1);
    CHECK(sq1[0].theta == 0.0);

    auto hc2 = enumerate_angles(LatticeKind::honeycomb, 2);
    bool has_hc21 = false;
    for (const auto& a : hc2)
        if (a.degrees() == Approx(21.787).margin(1e-3)) has_hc21 = true;
    CHECK(has_hc21);

    // strictly decreasing theta
    auto sq8 = enumerate_angles(LatticeKind::square, 8);
    for (std::size_t i = 1; i < sq8.size(); ++i) CHECK(sq8[i].theta < sq8[i - 1].theta);

    CHECK_THROWS_AS(enumerate_angles(LatticeKind::square, 0), InvalidIndexError);
}

TEST_CASE("square Moire cell structure") {
    auto cell = build_moire_cell(commensurate_angle(LatticeKind::square, 2, 1));
    CHECK(cell.n_sites() == 10);
    CHECK(cell.sites_per_layer() == 5);
    CHECK(cell.cell_area() == Approx(5.0));
    REQUIRE(cell.coincidences.size() == 1);

    // reciprocal duality to 1e-12
    CHECK(cell.B1.dot(cell.T1) == Approx(2 * std::numbers::pi).margin(1e-12));
    CHECK(cell.B1.dot(cell.T2) == Approx(0.0).margin(1e-12));
    CHECK(cell.B2.dot(cell.T1) == Approx(0.0).margin(1e-12));
    CHECK(cell.B2.dot(cell.T2) == Approx(2 * std::numbers::pi).margin(1e-12));

    for (const Site& s : cell.sites) {
        CHECK(s.frac.x() >= 0.0);
        CHECK(s.frac.x() < 1.0);
        CHECK(s.frac.y() >= 0.0);
        CHECK(s.frac.y() < 1.0);
        Vec2 recon = s.frac.x() * cell.T1 + s.frac.y() * cell.T2;
        CHECK((recon - s.position).norm() < 1e-12);
    }
}

TEST_CASE("site count matches closed form for all valid (m,n) up to 8") {
    for (int m = 1; m <= 8; ++m) {
        for (int n = 1; n <= m; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CommensurateAngle angle;
            try {
                angle = commensurate_angle(LatticeKind::square, m, n);
            } catch (const InvalidIndexError&) {
                continue; // beyond pi/4
            }
            auto cell = build_moire_cell(angle);
            CHECK(cell.n_sites() == 2 * (m * m + n * n));
        }
    }
}

TEST_CASE("site counts agree with the brute-force enumeration oracle") {
    for (auto [kind, m, n] : {std::tuple{LatticeKind::square, 2, 1},
                              std::tuple{LatticeKind::square, 3, 2},
                              std::tuple{LatticeKind::honeycomb, 2, 1},
                              std::tuple{LatticeKind::honeycomb, 3, 1}}) {
        auto cell = build_moire_cell(commensurate_angle(kind, m, n));
        CHECK(oracles::brute_force_layer_count(cell, Layer::a) == cell.sites_per_layer());
        CHECK(oracles::brute_force_layer_count(cell, Layer::b) == cell.sites_per_layer());
    }
}

TEST_CASE("honeycomb cell site count") {
    auto cell = build_moire_cell(commensurate_angle(LatticeKind::honeycomb, 2, 1));
    CHECK(cell.n_sites() == 28); // 4 (n^2 + nm + m^2)
    CHECK(cell.coincidences.size() == 1);
}

TEST_CASE("commensurability: unrotating layer b lands on monolayer points") {
    for (auto [kind, m, n] : {std::tuple{LatticeKind::square, 3, 2},
                              std::tuple{LatticeKind::honeycomb, 2, 1}}) {
        auto cell = build_moire_cell(commensurate_angle(kind, m, n));
        Eigen::Matrix2d unrot = oracles::rotation(-cell.angle.theta);
        Eigen::Matrix2d lat = Eigen::Matrix2d::Identity();
        if (kind == LatticeKind::honeycomb) {
            lat.col(0) = Vec2(1.0, 0.0);
            lat.col(1) = Vec2(0.5, std::sqrt(3.0) / 2.0);
        }
        Eigen::Matrix2d lat_inv = lat.inverse();
        for (const Site& s : cell.sites) {
            if (s.layer != Layer::b) continue;
            Vec2 c = lat_inv * (unrot * s.position).eval();
            if (s.basis_index == 1) c -= Vec2(1.0 / 3.0, 1.0 / 3.0);
            CHECK(std::abs(c.x() - std::round(c.x())) < 1e-9);
            CHECK(std::abs(c.y() - std::round(c.y())) < 1e-9);
        }
    }
}

TEST_CASE("coincidence counts verified by brute force") {
    // theta(m+1, m) family: one shared site per supercell
    for (int m = 1; m <= 4; ++m) {
        auto cell = build_moire_cell(commensurate_angle(LatticeKind::square, m + 1, m));
        CHECK(cell.coincidences.size() == 1);
        CHECK(oracles::brute_force_coincidences(cell) == 1);
    }
    // both indices odd: the coincidence lattice is twice as dense
    auto cell53 = build_moire_cell(commensurate_angle(LatticeKind::square, 5, 3));
    CHECK(cell53.coincidences.size() == 2);
    CHECK(oracles::brute_force_coincidences(cell53) == 2);

    // coincidence pairs really are at distance zero
    for (auto [ia, ib] : cell53.coincidences)
        CHECK((cell53.sites[ia].position - cell53.sites[ib].position).norm() < 1e-9);
}

TEST_CASE("cell_index bookkeeping is consistent with positions") {
    auto cell = build_moire_cell(commensurate_angle(LatticeKind::square, 3, 2));
    Eigen::Matrix2d rot = oracles::rotation(cell.angle.theta);
    for (const Site& s : cell.sites) {
        Vec2 lattice_point(s.cell_index[0], s.cell_index[1]);
        Vec2 expect = s.layer == Layer::a ? lattice_point : Vec2(rot * lattice_point);
        CHECK((expect - s.position).norm() < 1e-9);
    }
}

TEST_CASE("tiled lattice sizes and indexing") {
    auto cell = build_moire_cell(commensurate_angle(LatticeKind::square, 2, 1));
    CHECK(tile_lattice(cell, 4).size() == 160);
    CHECK(tile_lattice(cell, 64).size() == 40960);

    auto hc = build_moire_cell(commensurate_angle(LatticeKind::honeycomb, 2, 1));
    CHECK(tile_lattice(hc, 2).size() == 112);

    CHECK_THROWS_AS(tile_lattice(cell, 0), InvalidIndexError);
    CHECK_THROWS_AS(tile_lattice(cell, 1 << 14), CapacityError);

    auto lat = tile_lattice(cell, 4);
    for (std::size_t i = 0; i < lat.size(); ++i) {
        CHECK(lat.index(lat.cell_x(i), lat.cell_y(i), lat.site_in_cell(i)) == i);
    }
    // positions shift by whole supercells
    std::size_t i0 = lat.index(0, 0, 3), i1 = lat.index(2, 1, 3);
    Vec2 shift = lat.position(i1) - lat.position(i0);
    CHECK((shift - (2.0 * cell.T1 + 1.0 * cell.T2)).norm() < 1e-12);
}
