#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "lrclab/seqcore/csv.hpp"
#include "lrclab/seqcore/error.hpp"
#include "lrclab/seqcore/moments.hpp"
#include "lrclab/seqcore/series.hpp"
#include "lrclab/seqcore/token_sequence.hpp"

using namespace lrc;

TEST_CASE("moments of small series") {
  const std::vector<double> constant{2, 2, 2};
  auto m = moments(constant);
  CHECK(m.mean == 2.0);
  CHECK(m.sd == 0.0);

  const std::vector<double> pair{1, 4};
  m = moments(pair);
  CHECK(m.mean == doctest::Approx(2.5));
  CHECK(m.sd == doctest::Approx(1.5));

  // Romeo/wherefore interval sequence.
  const std::vector<double> romeo{1, 1, 3};
  m = moments(romeo);
  CHECK(m.mean == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  CHECK(m.sd == doctest::Approx(std::sqrt(8.0 / 9.0)).epsilon(1e-12));
}

TEST_CASE("moments rejects empty input") {
  CHECK_THROWS_WITH_AS(moments(std::span<const double>{}), "empty series", DataError);
}

TEST_CASE("moments is permutation invariant") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs(1 + gen() % 300);
    for (auto& x : xs) x = dist(gen);
    const auto before = moments(xs);
    std::shuffle(xs.begin(), xs.end(), gen);
    const auto after = moments(xs);
    CHECK(after.mean == doctest::Approx(before.mean).epsilon(1e-12));
    CHECK(after.sd == doctest::Approx(before.sd).epsilon(1e-12));
  }
}

TEST_CASE("token sequence invariants") {
  CHECK_THROWS_AS(TokenSequence({}, 0), DataError);
  CHECK_THROWS_AS(TokenSequence({0, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(TokenSequence({0, 1}, 2, {"a"}), std::invalid_argument);

  const TokenSequence seq({0, 1, 0}, 2, {"a", "b"});
  CHECK(seq.size() == 3);
  CHECK(seq.surface(1) == "b");
  SymbolId id = 99;
  CHECK(seq.find_symbol("a", id));
  CHECK(id == 0);
  CHECK_FALSE(seq.find_symbol("c", id));
  CHECK(TokenSequence({3}, 4).surface(3) == "w3");
}

TEST_CASE("relabeling follows first occurrence") {
  const std::vector<SymbolId> raw{7, 3, 7, 9, 3};
  const std::vector<std::string> symbols{"", "", "", "three", "", "", "", "seven", "", "nine"};
  const auto seq = TokenSequence::relabeled(raw, symbols);
  CHECK(std::vector<SymbolId>(seq.tokens().begin(), seq.tokens().end()) ==
        std::vector<SymbolId>{0, 1, 0, 2, 1});
  CHECK(seq.vocabulary_size() == 3);
  CHECK(seq.surface(0) == "seven");
  CHECK(seq.surface(2) == "nine");
}

TEST_CASE("interval sequence moments are recomputable") {
  IntervalSequence ints({1, 1, 3}, 16);
  CHECK(ints.count() == 3);
  const auto m = moments(ints.as_reals());
  CHECK(std::abs(ints.mean() - m.mean) < 1e-9);
  CHECK(std::abs(ints.sd() - m.sd) < 1e-9);
  CHECK_THROWS_AS(IntervalSequence({1, 0}, 16), std::invalid_argument);
  CHECK_THROWS_AS(IntervalSequence({}, 16), DataError);
}

TEST_CASE("curve CSV files round-trip") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  AcfCurve curve;
  curve.source_length = 12345;
  for (std::size_t s = 1; s <= 123; s += 1 + gen() % 7) curve.points.push_back({s, dist(gen)});
  std::stringstream acf;
  write_csv(acf, curve);
  CHECK(acf.str().rfind("s,c\n", 0) == 0);
  CHECK(read_acf_csv(acf, 12345) == curve);

  RankFrequency rf{{{1, 40}, {2, 7}, {3, 7}, {4, 1}}};
  std::stringstream rfs;
  write_csv(rfs, rf);
  CHECK(rfs.str() == "rank,freq\n1,40\n2,7\n3,7\n4,1\n");
  CHECK(read_rank_frequency_csv(rfs) == rf);

  TypeTokenCurve tt{{{1, 1}, {2, 2}, {10, 6}}};
  std::stringstream tts;
  write_csv(tts, tt);
  CHECK(read_type_token_csv(tts) == tt);
}

TEST_CASE("CSV readers reject bad input") {
  std::stringstream wrong_header("x,y\n1,2\n");
  CHECK_THROWS_AS(read_rank_frequency_csv(wrong_header), DataError);
  std::stringstream bad_number("m,v\n1,abc\n");
  CHECK_THROWS_WITH_AS(read_type_token_csv(bad_number), "line 2: bad number 'abc'", DataError);
}

TEST_CASE("format_real is shortest round-trip") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(0.1) == "0.1");
  CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("token writer renders ids without symbols as w<id>") {
  std::ostringstream out;
  write_tokens(out, TokenSequence({0, 1, 0}, 2));
  CHECK(out.str() == "w0 w1 w0\n");
}
