#include <doctest.h>

#include <random>
#include <string>

#include "gkl/ring.hpp"
#include "../support/naive_rule.hpp"

using gkl::CellState;
using gkl::Ring;

TEST_CASE("parse and render round-trip") {
  for (const char* text : {"<", ">", "><", "<<>>", ">>>><<>>>>",
                           "<<<<<<>><<<<<<<<<"}) {
    CHECK(Ring::parse(text).render() == text);
  }
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(Ring::parse(""), gkl::ParseError);
  try {
    Ring::parse(">a<");
    FAIL("expected ParseError");
  } catch (const gkl::ParseError& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("indexing wraps modulo n") {
  Ring r = Ring::parse("><>");
  CHECK(r.at(0) == CellState::R);
  CHECK(r.at(1) == CellState::L);
  CHECK(r.at(4) == CellState::L);
  CHECK(r.at(-2) == CellState::L);
  CHECK(r.at(-3) == CellState::R);
  CHECK(r.at(300) == CellState::R);
}

TEST_CASE("count and uniform") {
  CHECK(Ring::parse(">><<<").count(CellState::L) == 3);
  CHECK(Ring::parse(">><<<").count(CellState::R) == 2);
  CHECK(Ring::parse(">>>").uniform(CellState::R));
  CHECK_FALSE(Ring::parse(">>>").uniform(CellState::L));
  CHECK(Ring::parse("<<<").uniform(CellState::L));
  CHECK(Ring(70, CellState::L).uniform(CellState::L));
  CHECK(Ring(70, CellState::R).uniform(CellState::R));
  Ring almost(70, CellState::L);
  almost.set(69, CellState::R);
  CHECK_FALSE(almost.uniform(CellState::L));
  CHECK(almost.count(CellState::L) == 69);
}

TEST_CASE("bit packing is LSB-first per 64-bit word") {
  std::string text(130, '>');
  text[0] = '<';
  text[64] = '<';
  text[129] = '<';
  Ring r = Ring::parse(text);
  REQUIRE(r.words().size() == 3);
  CHECK(r.words()[0] == 1ull);
  CHECK(r.words()[1] == 1ull);
  CHECK(r.words()[2] == 2ull);
}

TEST_CASE("set flips single cells") {
  Ring r(5, CellState::R);
  r.set(2, CellState::L);
  CHECK(r.render() == ">><>>");
  r.set(2, CellState::R);
  CHECK(r.render() == ">>>>>");
}

TEST_CASE("rotation matches the reference on random rings") {
  std::mt19937_64 rng(1234);
  for (int it = 0; it < 2000; ++it) {
    std::size_t n = 1 + rng() % 150;
    std::string text = naive::random_text(rng, n);
    std::int64_t r = static_cast<std::int64_t>(rng() % 400) - 200;
    CHECK(Ring::parse(text).rotated(r).render() == naive::rotate(text, r));
  }
}

TEST_CASE("mirror matches the reference") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 500; ++it) {
    std::size_t n = 1 + rng() % 100;
    std::string text = naive::random_text(rng, n);
    CHECK(Ring::parse(text).mirrored().render() == naive::mirror(text));
  }
}

TEST_CASE("step matches the reference exhaustively for n <= 12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      std::string text(n, '>');
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) text[i] = '<';
      }
      CAPTURE(text);
      CHECK(Ring::parse(text).step().render() == naive::step(text));
    }
  }
}

TEST_CASE("step matches the reference on random rings across word sizes") {
  std::mt19937_64 rng(4321);
  int cases = 0;
  for (std::size_t n : {13, 31, 32, 63, 64, 65, 66, 100, 127, 128, 129, 190,
                        255, 256, 257, 400, 511, 512, 513}) {
    for (int it = 0; it < 600; ++it) {
      std::string text = naive::random_text(rng, n);
      CHECK(Ring::parse(text).step().render() == naive::step(text));
      ++cases;
    }
  }
  CHECK(cases >= 10000);
}

TEST_CASE("frozen step examples") {
  CHECK(Ring::parse(">>>><>>>>>").step().render() == ">>>>>>>>>>");
  CHECK(Ring::parse(">>>><<>>>>").step().render() == ">>>>><>>>>");
  CHECK(Ring::parse(">>>><<>>>>").step().step().render() == ">>>>>>>>>>");
}

TEST_CASE("stepping commutes with rotation") {
  std::mt19937_64 rng(777);
  for (int it = 0; it < 3000; ++it) {
    std::size_t n = 1 + rng() % 128;
    std::string text = naive::random_text(rng, n);
    std::int64_t r = static_cast<std::int64_t>(rng() % (2 * n)) -
                     static_cast<std::int64_t>(n);
    Ring ring = Ring::parse(text);
    CHECK(ring.rotated(r).step() == ring.step().rotated(r));
  }
}

TEST_CASE("stepping commutes with mirror-swap") {
  std::mt19937_64 rng(778);
  for (int it = 0; it < 3000; ++it) {
    std::size_t n = 1 + rng() % 128;
    Ring ring = Ring::parse(naive::random_text(rng, n));
    CHECK(ring.mirrored().step() == ring.step().mirrored());
  }
}

TEST_CASE("uniform rings are fixed points") {
  for (std::size_t n : {1, 2, 3, 5, 7, 64, 65, 200}) {
    Ring all_r(n, CellState::R);
    Ring all_l(n, CellState::L);
    CHECK(all_r.step() == all_r);
    CHECK(all_l.step() == all_l);
  }
}

TEST_CASE("equality and hashing") {
  Ring a = Ring::parse("><><>");
  Ring b = Ring::parse("><><>");
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  b.set(0, CellState::L);
  CHECK(a != b);
}
