#include <doctest.h>

#include "support.hpp"
#include "tripext/error.hpp"
#include "tripext/oracle.hpp"

using namespace tripext;

TEST_SUITE("oracle") {
  TEST_CASE("three points into six") {
    Coloring f(3, 10);
    f.add(1, Edge{1, 2, 3});
    const ExtensionInstance inst = make_extension_instance(3, 6, 1, f);
    const oracle::ExtendResult r = oracle::brute_extend(inst);
    REQUIRE(r.status == oracle::Status::Found);
    CHECK(support::is_one_factorization_of_triples(*r.witness, 6, 1));
    CHECK(r.witness->color_class(1).mult(Edge{1, 2, 3}) == 1);
  }

  TEST_CASE("enumeration counts") {
    const auto six = oracle::enumerate_factorizations(6, 1);
    CHECK(six.factorizations.size() == 1);
    CHECK_FALSE(six.truncated);
    for (const Coloring& c : six.factorizations) CHECK(support::is_one_factorization_of_triples(c, 6, 1));

    const auto three = oracle::enumerate_factorizations(3, 1);
    CHECK(three.factorizations.size() == 1);
    const auto three_twice = oracle::enumerate_factorizations(3, 2);
    CHECK(three_twice.factorizations.size() == 1);
    // Each class pairs a triple with its complement, so doubling stays unique.
    CHECK(oracle::enumerate_factorizations(6, 2).factorizations.size() == 1);

    CHECK(oracle::enumerate_factorizations(5, 1).factorizations.empty());
    CHECK(oracle::enumerate_factorizations(4, 2).factorizations.empty());
  }

  TEST_CASE("color permutations are counted when asked") {
    oracle::EnumerateOptions options;
    options.canonical = false;
    const auto all = oracle::enumerate_factorizations(6, 1, options);
    // 10 classes, all distinct: 10! labelled versions of the single one.
    options.limit = 50;
    const auto some = oracle::enumerate_factorizations(6, 1, options);
    CHECK(some.factorizations.size() == 50);
    CHECK(some.truncated);
    CHECK(all.factorizations.size() == 1000);
    CHECK(all.truncated);
  }

  TEST_CASE("every canonical (6,2) witness is a one-factorization") {
    oracle::EnumerateOptions options;
    options.limit = 25;
    const auto r = oracle::enumerate_factorizations(6, 2, options);
    CHECK_FALSE(r.factorizations.empty());
    for (const Coloring& c : r.factorizations) CHECK(support::is_one_factorization_of_triples(c, 6, 2));
  }

  TEST_CASE("caps") {
    CHECK_THROWS_AS(oracle::enumerate_factorizations(9, 1), Error);
    const ExtensionInstance inst = make_extension_instance(6, 9, 1, support::complementary_pairs(28));
    const oracle::ExtendResult r = oracle::brute_extend(inst);
    CHECK(r.status == oracle::Status::CapExceeded);
    Coloring g(3, 20);
    g.add(1, Edge{1, 2, 3});
    g.add(2, Edge{1, 2, 3});
    oracle::Limits tight;
    tight.max_nodes = 3;
    CHECK(oracle::brute_extend(make_extension_instance(3, 6, 2, g), tight).status == oracle::Status::CapExceeded);
  }

  TEST_CASE("six points into nine has no extension") {
    // The ten classes all need the one triple {7,8,9}, so the search dies fast.
    const ExtensionInstance inst = make_extension_instance(6, 9, 1, support::complementary_pairs(28));
    oracle::Limits limits;
    limits.max_edges = 84;
    const oracle::ExtendResult r = oracle::brute_extend(inst, limits);
    CHECK(r.status == oracle::Status::None);
  }
}
