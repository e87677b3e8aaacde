#include <sstream>

#include "doctest.h"
#include "resolvent/io.hpp"
#include "resolvent/resolutions.hpp"
#include "test_util.hpp"

using namespace resolvent;

namespace {

const Backend kVect{BackendKind::VectFp, 1};
const Backend kNilp2{BackendKind::NilpMod, 2};
const Backend kRepA2{BackendKind::RepA2, 1};

Complex text_roundtrip(const Complex& x) {
  std::istringstream in(io::to_text(x, (int)fp::modulus()));
  return io::complex_from_text(in).cx;
}

Complex json_roundtrip(const Complex& x) { return io::complex_from_json(io::to_json(x, (int)fp::modulus())).cx; }

}  // namespace

TEST_CASE("backend tokens round-trip") {
  for (auto b : {kVect, kNilp2, kRepA2, Backend{BackendKind::NilpMod, 4}})
    CHECK(io::parse_backend(backend_name(b)) == b);
  CHECK_THROWS_AS(io::parse_backend("nope"), Error);
  CHECK_THROWS_AS(io::parse_backend("nilp:x"), Error);
  CHECK_THROWS_AS(io::parse_backend("nilp:0"), Error);
}

TEST_CASE("complex literals round-trip in both formats") {
  fp::set_modulus(5);
  std::mt19937_64 rng(41);
  for (auto b : {kVect, kNilp2, kRepA2})
    for (int it = 0; it < 20; ++it) {
      Complex x = testutil::random_complex(b, rng, -2, 2, 3);
      CHECK(complex_eq(text_roundtrip(x), x));
      CHECK(complex_eq(json_roundtrip(x), x));
    }
}

TEST_CASE("parser normalizes the modulus from the p header") {
  fp::set_modulus(5);
  Complex x = stalk(0, vect_obj(2));
  std::string text = io::to_text(x, 3);
  fp::set_modulus(7);
  std::istringstream in(text);
  auto parsed = io::complex_from_text(in);
  CHECK(parsed.p == 3);
  CHECK(fp::modulus() == 3);
  fp::set_modulus(5);
}

TEST_CASE("chain map literals round-trip") {
  fp::set_modulus(5);
  std::mt19937_64 rng(42);
  for (auto b : {kVect, kNilp2, kRepA2})
    for (int it = 0; it < 10; ++it) {
      Complex x = testutil::random_complex(b, rng, -1, 2, 3);
      // A guaranteed chain map: the projection off a direct summand.
      Complex t = testutil::random_complex(b, rng, 0, 1, 2);
      auto sum = direct_sum({x, t});
      std::vector<Mor> cs;
      for (int n = sum.lo; n <= sum.hi(); ++n)
        cs.push_back(biproduct({x.obj_at(n), t.obj_at(n)}).proj[0]);
      ChainMap f = make_chain_map(sum, x, sum.lo, cs);
      std::istringstream in(io::to_text(f, 5));
      ChainMap g = io::chain_map_from_text(in).map;
      CHECK(complex_eq(g.src, f.src));
      CHECK(complex_eq(g.dst, f.dst));
      CHECK(chain_map_is_zero(chain_map_sub(g, f)));
      ChainMap h = io::chain_map_from_json(io::to_json(f, 5)).map;
      CHECK(chain_map_is_zero(chain_map_sub(h, f)));
    }
}

TEST_CASE("complex lists parse with separators") {
  fp::set_modulus(5);
  std::mt19937_64 rng(43);
  Complex a = testutil::random_complex(kNilp2, rng, 0, 2, 3);
  Complex b = testutil::random_complex(kNilp2, rng, -1, 1, 3);
  std::string text = io::to_text(a, 5) + "---\n" + io::to_text(b, 5);
  std::istringstream in(text);
  auto list = io::complex_list_from_text(in);
  REQUIRE(list.size() == 2);
  CHECK(complex_eq(list[0].cx, a));
  CHECK(complex_eq(list[1].cx, b));

  std::string jtext = "[" + io::to_json(a, 5) + "," + io::to_json(b, 5) + "]";
  auto jlist = io::complex_list_from_json(jtext);
  REQUIRE(jlist.size() == 2);
  CHECK(complex_eq(jlist[0].cx, a));
  CHECK(complex_eq(jlist[1].cx, b));
}

TEST_CASE("malformed input is rejected") {
  fp::set_modulus(5);
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(io::complex_from_text(in), Error);
  };
  reject("");
  reject("backend vect\n");                               // missing p
  reject("backend vect\np 5\n");                          // no degree blocks
  reject("backend vect\np 5\ndegree 0: 1\ndegree 2: 1\n");  // gap in degrees
  reject("backend vect\np 5\ndegree 0: 1\nd:\n1 2\ndegree 1: 1\n");  // wrong width
  reject("backend vect\np 5\ndegree 0: 1\nd:\n3\n");      // trailing differential
  CHECK_THROWS_AS(io::complex_from_json("{\"backend\":\"vect\"}"), Error);
  CHECK_THROWS_AS(io::complex_from_json("not json"), Error);
}

TEST_CASE("grid rendering covers every nonzero entry") {
  fp::set_modulus(5);
  auto ce = ce_resolution(stalk(0, nilp_obj(2, Matrix(1, 1))), 2);
  std::string text = io::grid_to_text(ce.grid, 5);
  CHECK(text.find("grid over nilp:2") != std::string::npos);
  for (int c = ce.grid.c0; c <= ce.grid.c1; ++c)
    for (int r = ce.grid.r0; r <= ce.grid.r1; ++r)
      if (!ce.grid.obj_at(r, c).is_zero()) {
        std::string hdr = "(" + std::to_string(r) + "," + std::to_string(c) + "):";
        CHECK(text.find(hdr) != std::string::npos);
      }
}

TEST_CASE("fnv1a is stable") {
  CHECK(io::fnv1a("") == 14695981039346656037ull);
  CHECK(io::fnv1a("a") != io::fnv1a("b"));
  CHECK(io::fnv1a("resolvent") == io::fnv1a("resolvent"));
}
