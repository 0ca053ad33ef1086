#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "finito/canonical.hpp"
#include "finito/cli.hpp"
#include "finito/document.hpp"
#include "finito/enumerate.hpp"
#include "finito/errors.hpp"
#include "finito/models.hpp"
#include "fixtures.hpp"

using namespace finito;

namespace {

std::string data(const std::string& name) { return std::string(FINITO_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args, const std::string& input = {}) {
  args.insert(args.begin(), "finito");
  std::istringstream in(input);
  std::ostringstream out, err;
  cli::Environment env{&in, &out, &err, false, std::nullopt, 2};
  const int code = cli::run(args, env);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(load_poset("x").size(), 1u);
  const auto p = load_poset("d < b\nb < a\nc < a");
  EXPECT_EQ(p.labels(), (std::vector<std::string>{"d", "b", "a", "c"}));
  try {
    parse_poset("a <");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(load_poset("a < b\nb < a"), CycleError);
  EXPECT_THROW(load_poset("# nothing\n"), EmptyError);
}

TEST(Parse, CommentsBaseAndDuplicates) {
  const auto doc = parse_poset("a < b  # cover\na < b\n@base b\nc\n");
  EXPECT_EQ(doc.labels.size(), 3u);
  EXPECT_EQ(doc.covers.size(), 1u);
  EXPECT_EQ(doc.warnings.size(), 1u);
  ASSERT_TRUE(doc.base.has_value());
  EXPECT_EQ(doc.labels[*doc.base], "b");
  EXPECT_THROW(parse_poset("a-b"), ParseError);
}

TEST(Emit, SingletonAndFormats) {
  EXPECT_EQ(emit(load_poset("x"), Format::poset), "x\n");
  EXPECT_EQ(emit(sphere_model(1), Format::dot), slurp(data("suspension_s0.dot")));
  EXPECT_EQ(emit(FinitePoset::chain(2), Format::faces), "0\n1\n0 1\n");
  const auto json = emit(FinitePoset::chain(2), Format::json);
  EXPECT_TRUE(is_homeomorphic(load_poset(json), FinitePoset::chain(2)));
  EXPECT_THROW(parse_format("svg"), Error);
}

TEST(Emit, RoundTripEveryPosetUpToSix) {
  PosetCatalog catalog;
  for (std::size_t k = 1; k <= 6; ++k) {
    for (const auto& raw : catalog.level(k)) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < k; ++i) labels.push_back("p" + std::to_string(i));
      const auto p = raw.with_labels(labels);
      const auto q = load_poset(emit(p, Format::poset));
      ASSERT_TRUE(is_homeomorphic(p, q));
      // Labels and the order between labelled points survive.
      for (Element a = 0; a < q.size(); ++a) {
        for (Element b = 0; b < q.size(); ++b) {
          const Element pa = finito::testing::index_of(p, q.label(a));
          const Element pb = finito::testing::index_of(p, q.label(b));
          ASSERT_EQ(q.leq(a, b), p.leq(pa, pb));
        }
      }
      const auto r = load_poset(emit(p, Format::json));
      ASSERT_TRUE(r.same_order(p));
      ASSERT_EQ(r.labels(), p.labels());
    }
  }
}

TEST(MapFile, Parse) {
  const auto x = finito::testing::osaki_x();
  const auto y = finito::testing::osaki_y();
  const auto f = parse_map(slurp(data("osaki_f.map")), x, y);
  EXPECT_EQ(f.size(), 6u);
  EXPECT_THROW(parse_map("a1 -> zz\n", x, y), ParseError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"info", data("cyclic.poset")}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"info", data("does_not_exist.poset")}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"info", "-"}, "a <\n").code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"bogus"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"info", data("osaki_x.poset")}).code, cli::kExitOk);
  EXPECT_EQ(run_cli({"mccord", data("osaki_x.poset"), data("osaki_y.poset"), data("osaki_f.map")})
                .code,
            cli::kExitOk);
  EXPECT_EQ(run_cli({"sphere", "1"}).out, slurp(data("suspension_s0.poset")));
  EXPECT_EQ(run_cli({"enumerate", "9"}).code, cli::kExitInputError);
}

TEST(Cli, InfoOnCounterexample) {
  const auto r = run_cli({"info", "--json", data("osaki_x.poset")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"euler\":-1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"b1\":2"), std::string::npos) << r.out;
}

TEST(Cli, SpherePipeline) {
  const auto s = run_cli({"sphere", "1"});
  const auto r = run_cli({"info", "--json"}, s.out);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"points\":4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"height\":2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"euler\":0"), std::string::npos) << r.out;
}

TEST(Cli, VerifyWedgesSmall) {
  const auto r = run_cli({"verify", "wedges", "--max-n", "3", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"models\":3"), std::string::npos) << r.out;
}
