#include <catch2/catch_amalgamated.hpp>

#include "hopfkit/groups.hpp"

using namespace hopfkit;

TEST_CASE("infinite dihedral tokens and relations") {
    GroupPtr d = infinite_dihedral();
    CHECK(d->identity() == "e");
    CHECK(d->multiply("s", "s") == "e");
    CHECK(d->multiply("r", "r") == "r^2");
    CHECK(d->multiply(d->multiply("s", "r"), "s") == d->inverse("r"));
    CHECK(d->inverse("r") == "r^-1");
    CHECK(d->multiply("r", "s") == "rs");
    CHECK(d->canon("r^1") == "r");
    CHECK(d->canon("r^0s") == "s");
    CHECK(d->canon(d->canon("r^3s")) == d->canon("r^3s"));
    CHECK_FALSE(d->order());
    CHECK_THROWS_AS(d->canon("q"), std::invalid_argument);
    CHECK_THROWS(d->elements());
    CHECK(spot_check_group(*d, 42, 200, 6).ok());
}

TEST_CASE("free group reduction") {
    GroupPtr f = free_group(2);
    CHECK(f->multiply("ab", "Ba") == "aa");
    CHECK(f->multiply("a", "A") == "e");
    CHECK(f->inverse("ab") == "BA");
    CHECK(f->canon("aAb") == "b");
    CHECK_THROWS_AS(f->canon("c"), std::invalid_argument);
    CHECK(spot_check_group(*f, 7, 100, 6).ok());
    CHECK_THROWS(free_group(26));
}

TEST_CASE("finite oracles and subgroups") {
    GroupPtr s3 = group_oracle("symmetric:3");
    CHECK(s3->order() == 6u);
    CHECK(s3->elements().size() == 6);
    CHECK(spot_check_group(*s3, 1, 50, 4).ok());

    FiniteGroup h = finite_subgroup(*infinite_dihedral(), {"e", "s"});
    CHECK(h.order() == 2);
    CHECK(h.mul(*h.index_of("s"), *h.index_of("s")) == *h.index_of("e"));
    CHECK_THROWS_AS(finite_subgroup(*infinite_dihedral(), {"e", "r"}), VerificationError);

    for (const char* name : {"trivial", "cyclic:4", "dihedral:3", "klein", "infinite-dihedral", "free:3"}) CHECK(group_oracle(name) != nullptr);
    CHECK_THROWS(group_oracle("nonsense"));
}

TEST_CASE("random words are seeded") {
    GroupPtr d = infinite_dihedral();
    std::mt19937_64 a(5), b(5);
    for (int i = 0; i < 20; ++i) CHECK(random_element(*d, a, 6) == random_element(*d, b, 6));
}
