#include <doctest.h>

#include <fstream>
#include <map>
#include <set>

#include "support.hpp"
#include "tripext/cube.hpp"
#include "tripext/error.hpp"
#include "tripext/json_io.hpp"

using namespace tripext;

namespace {

nlohmann::ordered_json load(const std::string& name) {
  std::ifstream in(std::string(TRIPEXT_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  return nlohmann::ordered_json::parse(in);
}

// Multiset of symbols on the cells of an orbit, keyed by the orbit's edge.
std::map<std::vector<int>, std::multiset<int>> orbit_symbols(const LatinCube& cube) {
  std::map<std::vector<int>, std::multiset<int>> out;
  const int n = cube.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l) {
        std::set<int> support{i, j, l};
        out[{support.begin(), support.end()}].insert(cube.at(i, j, l));
      }
  return out;
}

// Direct search for a symmetric layer-rainbow cube of order n, by cell
// orbits, without going through factorizations. Feasible for n <= 4.
class DirectCubeSearch {
 public:
  explicit DirectCubeSearch(int n) : n_(n), cells_(static_cast<std::size_t>(n * n * n), -1) {
    std::set<std::vector<int>> seen;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          std::vector<int> orbit;
          if (i == j && j == l) {
            orbit = {id(i, i, i)};
          } else if (i != j && j != l && i != l) {
            orbit = {id(i, j, l), id(j, l, i), id(l, i, j)};
          } else {
            // Two equal indices a and one b: L_aab=L_bba, L_aba=L_bab, L_baa=L_abb.
            const int a = (i == j) ? i : (j == l ? j : i);
            const int b = (i == j) ? l : (j == l ? i : j);
            if (i == j) orbit = {id(a, a, b), id(b, b, a)};
            else if (i == l) orbit = {id(a, b, a), id(b, a, b)};
            else orbit = {id(b, a, a), id(a, b, b)};
          }
          std::sort(orbit.begin(), orbit.end());
          if (seen.insert(orbit).second) orbits_.push_back(orbit);
        }
  }

  bool exists() { return place(0); }

 private:
  int id(int i, int j, int l) const { return (i * n_ + j) * n_ + l; }

  bool layer_ok(int cell, int symbol) const {
    const int i = cell / (n_ * n_);
    const int j = (cell / n_) % n_;
    const int l = cell % n_;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const int cells[3] = {id(i, a, b), id(a, j, b), id(a, b, l)};
        for (int c : cells)
          if (c != cell && cells_[static_cast<std::size_t>(c)] == symbol) return false;
      }
    return true;
  }

  bool place(std::size_t o) {
    if (o == orbits_.size()) return true;
    const int symbols = n_ * n_;
    for (int s = 0; s < symbols; ++s) {
      // Symbols not used yet are interchangeable: try only the first one.
      if (s > used_) break;
      bool ok = true;
      for (int cell : orbits_[o]) {
        if (!layer_ok(cell, s)) ok = false;
        cells_[static_cast<std::size_t>(cell)] = s;
      }
      // Within one orbit the cells must also not clash with each other.
      if (ok) {
        for (std::size_t x = 0; x < orbits_[o].size() && ok; ++x) {
          cells_[static_cast<std::size_t>(orbits_[o][x])] = -1;
          ok = layer_ok(orbits_[o][x], s);
          cells_[static_cast<std::size_t>(orbits_[o][x])] = s;
        }
      }
      const int saved = used_;
      if (s == used_) ++used_;
      if (ok && place(o + 1)) return true;
      used_ = saved;
      for (int cell : orbits_[o]) cells_[static_cast<std::size_t>(cell)] = -1;
    }
    return false;
  }

  int n_;
  std::vector<int> cells_;
  std::vector<std::vector<int>> orbits_;
  int used_ = 0;
};

}  // namespace

TEST_SUITE("cube") {
  TEST_CASE("displayed order-5 cube") {
    const LatinCube cube = json::cube_from_json(load("order5_cube.json"));
    CHECK(cube.n() == 5);
    CHECK(cube.name_at(1, 1, 1) == "A");
    CHECK(cube.name_at(1, 1, 2) == "F");
    CHECK(cube.name_at(2, 2, 1) == "F");
    CHECK(cube.name_at(1, 2, 3) == "L");
    CHECK(cube.name_at(2, 3, 1) == "L");
    CHECK(cube.name_at(3, 1, 2) == "L");
    const Report r = verify_cube(cube);
    CHECK(r.ok());
    INFO(r.summary());
  }

  TEST_CASE("displayed class list") {
    const MixedFactorization mf = json::mixed_from_json(load("order5_mixed.json"));
    CHECK(mf.classes.size() == 25);
    CHECK(verify_mixed(mf).ok());
    int pair12 = 0;
    int triple345 = 0;
    int instances = 0;
    for (const auto& cls : mf.classes)
      for (const Edge& e : cls) {
        ++instances;
        if (e == Edge{1, 2}) ++pair12;
        if (e == Edge{3, 4, 5}) ++triple345;
      }
    CHECK(pair12 == 3);
    CHECK(triple345 == 2);
    CHECK(instances == 55);
  }

  TEST_CASE("built cube matches the displayed cube orbit by orbit") {
    const MixedFactorization mf = json::mixed_from_json(load("order5_mixed.json"));
    const LatinCube built = build_cube(mf);
    CHECK(verify_cube(built).ok());
    const LatinCube shown = json::cube_from_json(load("order5_cube.json"));
    CHECK(orbit_symbols(built) == orbit_symbols(shown));
  }

  TEST_CASE("pair cells carry each copy color twice") {
    const MixedFactorization mf = json::mixed_from_json(load("order5_mixed.json"));
    const LatinCube cube = build_cube(mf);
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        std::multiset<int> copies;
        for (std::size_t c = 0; c < mf.classes.size(); ++c)
          for (const Edge& e : mf.classes[c])
            if (e == Edge{i, j}) copies.insert(static_cast<int>(c));
        std::multiset<int> twice;
        for (int c : copies) twice.insert({c, c});
        const std::multiset<int> cells{cube.at(i, i, j), cube.at(j, j, i), cube.at(i, j, i),
                                       cube.at(j, i, j), cube.at(j, i, i), cube.at(i, j, j)};
        CHECK(cells == twice);
      }
  }

  TEST_CASE("order one") {
    MixedFactorization mf{1, {{Edge{1}}}};
    const LatinCube cube = build_cube(mf);
    CHECK(cube.n() == 1);
    CHECK(cube.at(1, 1, 1) == 0);
    CHECK(verify_cube(cube).ok());
  }

  TEST_CASE("cube violations") {
    LatinCube cube = json::cube_from_json(load("order5_cube.json"));
    const int a = cube.at(1, 1, 1);
    cube.set(1, 1, 2, a);
    CHECK_FALSE(verify_cube(cube).ok());

    LatinCube shown = json::cube_from_json(load("order5_cube.json"));
    std::swap(shown, cube);
    // Swapping two cells of one layer keeps that layer rainbow but breaks symmetry.
    const int x = cube.at(1, 2, 3);
    const int y = cube.at(1, 2, 4);
    cube.set(1, 2, 3, y);
    cube.set(1, 2, 4, x);
    CHECK_FALSE(verify_cube(cube).ok());
  }

  TEST_CASE("mixed factorization violations") {
    MixedFactorization mf = json::mixed_from_json(load("order5_mixed.json"));
    MixedFactorization extra = mf;
    extra.classes[1] = {Edge{1, 2}, Edge{3, 4, 5}};
    extra.classes[2] = {Edge{1, 2}, Edge{3, 4, 5}};
    CHECK_FALSE(verify_mixed(extra).ok());

    MixedFactorization gap = mf;
    gap.classes[0] = {Edge{1, 2}, Edge{4, 5}};
    CHECK_FALSE(verify_mixed(gap).ok());
    CHECK_THROWS_AS(build_cube(gap), Error);
  }

  TEST_CASE("search finds factorizations whose cubes verify") {
    for (int n : {1, 2, 5, 6}) {
      CAPTURE(n);
      const MixedSearchResult r = find_mixed_factorization(n);
      REQUIRE(r);
      CHECK(r.factorization->classes.size() == static_cast<std::size_t>(n * n));
      CHECK(verify_mixed(*r.factorization).ok());
      const LatinCube cube = build_cube(*r.factorization);
      CHECK(verify_cube(cube).ok());
      const MixedFactorization back = collapse_cube(cube);
      CHECK(verify_mixed(back).ok());
      CHECK(back.classes.size() == static_cast<std::size_t>(n * n));
    }
  }

  TEST_CASE("orders three, four and seven have no mixed factorization") {
    for (int n : {3, 4, 7}) {
      CAPTURE(n);
      const MixedSearchResult r = find_mixed_factorization(n);
      CHECK_FALSE(r);
      CHECK(r.exhausted);
    }
  }

  TEST_CASE("direct cube search agrees for small orders") {
    CHECK(DirectCubeSearch(1).exists());
    CHECK(DirectCubeSearch(2).exists());
    CHECK_FALSE(DirectCubeSearch(3).exists());
  }

  TEST_CASE("round trip on the displayed cube") {
    const LatinCube shown = json::cube_from_json(load("order5_cube.json"));
    const MixedFactorization mf = collapse_cube(shown);
    CHECK(verify_mixed(mf).ok());
    CHECK(verify_cube(build_cube(mf)).ok());
  }

  TEST_CASE("search cap") {
    try {
      find_mixed_factorization(8);
      FAIL("expected CapExceeded");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::CapExceeded);
    }
    MixedSearchOptions options;
    options.max_nodes = 3;
    const MixedSearchResult r = find_mixed_factorization(5, options);
    CHECK_FALSE(r);
    CHECK_FALSE(r.exhausted);
  }
}
