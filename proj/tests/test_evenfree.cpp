#include <doctest.h>

#include "ebw/design.hpp"
#include "ebw/evenfree.hpp"
#include "ebw/gf2.hpp"
#include "fixtures.hpp"

using ebw::designs::Design;

TEST_CASE("smallest even configuration in the seven point plane") {
    auto d = testutil::fano();
    auto rep = ebw::evenfree::min_even_configuration(d, 6);
    CHECK(rep.complete);
    CHECK(rep.max_verified_r == 3);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->size() == 4);
    CHECK(testutil::subset_is_even(d, *rep.witness));

    auto brute = testutil::brute_min_even(d, 6);
    CHECK(brute.size == 4);
    CHECK(brute.count == 7);
    CHECK(*rep.witness == brute.first);
}

TEST_CASE("pasch count equals the quadrilateral scan") {
    auto fano = testutil::fano();
    CHECK(ebw::evenfree::count_pasch(fano) == 7);
    CHECK(testutil::brute_min_even(fano, 4).count == 7);

    auto sts13 = ebw::designs::construct_sts(13);
    CHECK(ebw::evenfree::count_pasch(sts13) == 13);
    auto brute13 = testutil::brute_min_even(sts13, 4);
    CHECK(brute13.count == 13);

    auto rep13 = ebw::evenfree::min_even_configuration(sts13, 4);
    REQUIRE(rep13.witness.has_value());
    CHECK(*rep13.witness == brute13.first);

    auto pg4 = ebw::designs::construct_pg_lines(4);
    CHECK(ebw::evenfree::count_pasch(pg4) == 105);

    auto sts19 = ebw::designs::construct_sts(19);
    CHECK(ebw::evenfree::count_pasch(sts19) == testutil::brute_min_even(sts19, 4).count);
}

TEST_CASE("anti pasch triple systems from the odd cyclic construction") {
    auto bose15 = ebw::designs::construct_sts(15);
    CHECK(ebw::evenfree::count_pasch(bose15) == 0);
    auto rep4 = ebw::evenfree::min_even_configuration(bose15, 4);
    CHECK(rep4.complete);
    CHECK(!rep4.witness.has_value());
    CHECK(rep4.max_verified_r == 4);

    auto bose27 = ebw::designs::construct_sts(27);
    CHECK(ebw::evenfree::count_pasch(bose27) == 0);
}

TEST_CASE("six block configurations in an anti pasch system") {
    auto bose15 = ebw::designs::construct_sts(15);
    auto rep = ebw::evenfree::min_even_configuration(bose15, 8);
    CHECK(rep.complete);
    CHECK(rep.max_verified_r == 5);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->size() == 6);
    CHECK(testutil::subset_is_even(bose15, *rep.witness));
    CHECK(*rep.witness == std::vector<int>{0, 1, 8, 15, 19, 33});
}

TEST_CASE("affine plane of order three is five even free") {
    auto ag = ebw::designs::construct_ag_lines(2, 3);
    auto rep5 = ebw::evenfree::min_even_configuration(ag, 5);
    CHECK(rep5.complete);
    CHECK(rep5.max_verified_r == 5);
    CHECK(!rep5.witness.has_value());

    auto rep6 = ebw::evenfree::min_even_configuration(ag, 6);
    CHECK(rep6.max_verified_r == 5);
    REQUIRE(rep6.witness.has_value());
    CHECK(rep6.witness->size() == 6);
    auto brute = testutil::brute_min_even(ag, 6);
    CHECK(brute.size == 6);
    CHECK(brute.count == 6);
    CHECK(*rep6.witness == brute.first);
    CHECK(*rep6.witness == std::vector<int>{0, 1, 5, 9, 10, 11});
}

TEST_CASE("odd subset sizes are impossible when every block is odd") {
    auto fano = testutil::fano();
    for (int s = 3; s <= 5; s += 2) {
        auto brute = testutil::brute_min_even(fano, s);
        CHECK((brute.size == 0 || brute.size % 2 == 0));
    }
}

TEST_CASE("search respects its node budget") {
    auto bose15 = ebw::designs::construct_sts(15);
    auto rep = ebw::evenfree::min_even_configuration(bose15, 8, 10);
    CHECK(!rep.complete);
    CHECK(rep.max_verified_r < 5);
}

TEST_CASE("column distance search on parity check matrices") {
    auto fano_h = ebw::designs::incidence_matrix(testutil::fano());
    auto d = ebw::evenfree::classical_min_distance(fano_h, 7);
    REQUIRE(d.has_value());
    CHECK(*d == 4);

    auto ag_h = ebw::designs::incidence_matrix(ebw::designs::construct_ag_lines(2, 3));
    CHECK(*ebw::evenfree::classical_min_distance(ag_h, 8) == 6);

    CHECK(!ebw::evenfree::classical_min_distance(ebw::gf2::BinaryMatrix::identity(4), 4)
               .has_value());

    ebw::gf2::BinaryMatrix zero_col(2, 3);
    zero_col.set(0, 0, true);
    zero_col.set(1, 1, true);
    CHECK(*ebw::evenfree::classical_min_distance(zero_col, 3) == 1);

    ebw::gf2::BinaryMatrix dup(3, 4);
    for (int r = 0; r < 3; ++r) {
        dup.set(r, 0, true);
        dup.set(r, 1, true);
    }
    dup.set(0, 2, true);
    dup.set(1, 3, true);
    CHECK(*ebw::evenfree::classical_min_distance(dup, 4) == 2);
}

TEST_CASE("distance equals one more than the even free bound on incidence matrices") {
    for (int v : {7, 13, 15}) {
        CAPTURE(v);
        auto d = ebw::designs::construct_sts(v);
        auto h = ebw::designs::incidence_matrix(d);
        auto cfg = ebw::evenfree::min_even_configuration(d, 8);
        auto dist = ebw::evenfree::classical_min_distance(h, 8);
        REQUIRE(cfg.witness.has_value());
        REQUIRE(dist.has_value());
        CHECK(static_cast<int>(cfg.witness->size()) == *dist);
        CHECK(cfg.max_verified_r + 1 == *dist);
    }
}

TEST_CASE("distance agrees with direct codeword enumeration on the seven point plane") {
    auto h = ebw::designs::incidence_matrix(testutil::fano());
    auto basis = ebw::gf2::nullspace_basis(h);
    REQUIRE(basis.size() == 3);
    std::size_t best = h.cols() + 1;
    for (unsigned mask = 1; mask < 8u; ++mask) {
        ebw::gf2::BitVec acc(h.cols());
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1u) acc.xor_with(basis[i]);
        best = std::min(best, acc.weight());
    }
    CHECK(best == 4);
    CHECK(*ebw::evenfree::classical_min_distance(h, 7) == 4);
}
