#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockcheck/errors.hpp"
#include "blockcheck/perm.hpp"

using namespace blockcheck;

TEST_CASE("identity and composition") {
    Permutation id(5);
    CHECK(id.is_identity());
    Permutation a({1, 0, 2});     // (0 1)
    Permutation b({1, 2, 0});     // (0 1 2)
    CHECK((a * a).is_identity());
    CHECK((b * b * b).is_identity());
    // (a*b)(x) = b[a[x]]
    Permutation ab = a * b;
    CHECK(ab[0] == 2);
    CHECK((a * a.inverse()).is_identity());
    CHECK((b.inverse() * b).is_identity());
}

TEST_CASE("associativity on random triples") {
    // small fixed pseudo-random set
    unsigned long seed = 12345;
    auto next = [&seed]() {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        return seed >> 33;
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> v(7), w(7), u(7);
        for (int i = 0; i < 7; ++i) v[i] = w[i] = u[i] = i;
        for (int i = 6; i > 0; --i) {
            std::swap(v[i], v[next() % (i + 1)]);
            std::swap(w[i], w[next() % (i + 1)]);
            std::swap(u[i], u[next() % (i + 1)]);
        }
        Permutation a(v), b(w), c(u);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("order and powers") {
    Permutation c({1, 2, 3, 4, 5, 0});
    CHECK(c.order() == 6);
    CHECK(c.power(6).is_identity());
    CHECK(c.power(-1) == c.inverse());
    Permutation t({1, 0, 3, 2});
    CHECK(t.order() == 2);
}

TEST_CASE("bad input rejected") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), input_error);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), input_error);
    Permutation a({1, 0});
    Permutation b({1, 2, 0});
    CHECK_THROWS_AS(a * b, input_error);
}

TEST_CASE("conjugation moves cycles") {
    Permutation x({1, 0, 2, 3});          // (0 1)
    Permutation g({1, 2, 3, 0});          // (0 1 2 3)
    Permutation y = x.conjugated_by(g);   // (1 2)
    CHECK(y == Permutation({0, 2, 1, 3}));
    CHECK(x.cycle_string() == "(0,1)");
}
