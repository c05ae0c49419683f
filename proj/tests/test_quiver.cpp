#include <doctest.h>

#include "helpers.hpp"
#include "qsi/quiver.hpp"

using namespace qsi;
using test::iv;

TEST_CASE("validate_quiver accepts the Kronecker quiver") {
    const auto q = test::k2();
    CHECK(q->num_vertices() == 2);
    CHECK(q->arrows().size() == 2);
    for (const auto& a : q->arrows()) CHECK(a.tail < a.head);
}

TEST_CASE("validate_quiver rejects bad inputs") {
    CHECK_THROWS_AS(test::make_quiver({"1", "2"}, {{"1", "2"}, {"2", "1"}}), CyclicQuiver);
    CHECK_THROWS_AS(test::make_quiver({"1", "2", "3"}, {{"1", "2"}}), Disconnected);
    CHECK_THROWS_AS(validate_quiver({"1", "1"}, {}), DuplicateId);
    CHECK_THROWS_AS(validate_quiver({"1", "2"},
                                    {{"a", "1", "2"}, {"a", "1", "2"}}),
                    DuplicateId);
    CHECK_THROWS_AS(test::make_quiver({"1"}, {{"1", "1"}}), CyclicQuiver);
}

TEST_CASE("topological reindexing keeps labels") {
    // z listed first, but every arrow must end up tail < head.
    const auto q = test::make_quiver({"z", "a", "b"}, {{"a", "z"}, {"b", "a"}});
    CHECK(q->vertex_labels() == std::vector<std::string>{"b", "a", "z"});
    for (const auto& a : q->arrows()) CHECK(a.tail < a.head);
}

TEST_CASE("euler and quadratic form on the Kronecker quiver") {
    const auto q = test::k2();
    CHECK(euler_form(*q, iv({1, 0}), iv({0, 1})) == -2);
    CHECK(euler_form(*q, iv({1, 1}), iv({1, 1})) == 0);
    CHECK(quadratic_form(*q, iv({1, 2})) == 1);
    CHECK(quadratic_form(*q, iv({1, 1})) == 0);
    CHECK_THROWS_AS(euler_form(*q, iv({1, 0, 0}), iv({0, 1})), IndexMismatch);
}

TEST_CASE("euler form on the D~4 star") {
    const auto q = test::d4();
    const IntVec h = iv({1, 1, 1, 1, 2});
    CHECK(euler_form(*q, h, h) == 0);
    CHECK(quadratic_form(*q, h) == 0);
}

TEST_CASE("weights") {
    const auto q = test::k2();
    CHECK(weight_of_left_form(*q, iv({1, 1})) == iv({1, -1}));
    CHECK(weight_of_left_form(*q, iv({0, 0})) == iv({0, 0}));
    CHECK(apply_weight(iv({1, -1}), iv({3, 3})) == 0);
    CHECK(apply_weight(iv({1, -1}), iv({1, 0})) == 1);

    const auto d4 = test::d4();
    CHECK(weight_of_left_form(*d4, iv({1, 1, 1, 1, 2})) == iv({1, 1, 1, 1, -2}));
    CHECK(apply_weight(iv({1, 1, 1, 1, -2}), iv({2, 2, 1, 1, 3})) == 0);
}

TEST_CASE("form identities on random vectors") {
    const auto quivers = {test::k2(), test::d4(), test::a2t()};
    Rng rng = stream_rng(5, "forms");
    for (const auto& q : quivers) {
        const std::size_t n = q->num_vertices();
        auto rand_vec = [&] {
            IntVec v(n);
            for (auto& x : v) x = rng.uniform(-20, 20);
            return v;
        };
        for (int trial = 0; trial < 50; ++trial) {
            const IntVec a = rand_vec(), a2 = rand_vec(), b = rand_vec();
            CHECK(euler_form(*q, add(a, a2), b) ==
                  euler_form(*q, a, b) + euler_form(*q, a2, b));
            CHECK(quadratic_form(*q, a) == euler_form(*q, a, a));
            CHECK(apply_weight(weight_of_left_form(*q, a), b) == euler_form(*q, a, b));
            CHECK(apply_weight(weight_of_right_form(*q, b), a) == -euler_form(*q, a, b));
        }
        // Euclidean: q_Q is positive semi-definite.
        for (int trial = 0; trial < 1000; ++trial) CHECK(quadratic_form(*q, rand_vec()) >= 0);
    }
}
