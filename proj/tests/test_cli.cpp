#include "catch_amalgamated.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "hopfcomb/cli.hpp"

using namespace hopfcomb;

namespace {
  struct Run {
    int                      status;
    std::vector<std::string> lines;
    std::string              err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          status = cli::execute(args, out, err);
    Run                r{status, {}, err.str()};
    std::istringstream in(out.str());
    for (std::string line; std::getline(in, line);) {
      r.lines.push_back(line);
    }
    return r;
  }

  std::string only_line(std::vector<std::string> args) {
    auto const r = run(std::move(args));
    INFO(r.err);
    REQUIRE(r.status == 0);
    REQUIRE(r.lines.size() == 1);
    return r.lines.front();
  }

  // Runs the installed binary through the shell; stdout only.
  std::pair<int, std::string> shell(std::string const& args, std::string const& env = "") {
    std::string const cmd = env + " " + HOPFCOMB_CLI_PATH + " " + args + " 2>/dev/null";
    FILE*             p   = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string             out;
    std::array<char, 4096>  buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) {
      out.append(buf.data(), n);
    }
    int const status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }
}  // namespace

TEST_CASE("insert prints both symbols", "[cli]") {
  auto const r = run({"insert", "--word", "45142234212"});
  REQUIRE(r.status == 0);
  REQUIRE(r.lines.size() == 2);
  CHECK(r.lines[0] == "(2:4 (1:2 . .) (4:3 (3:1 . .) (5:1 . .)))");
  CHECK(r.lines[1] == "([5,6,9,11] ([3,10] . .) ([1,4,8] ([7] . .) ([2] . .)))");
}

TEST_CASE("single-line commands", "[cli]") {
  CHECK(only_line({"hook", "--tree", "(2 (1 . .) (2 . .))"}) == "12");
  CHECK(only_line({"series", "--btm", "--order", "7"}) == "1, 1, 3, 10, 36, 137, 543, 2219");
  CHECK(only_line({"phi", "--phi", "std", "--word", "7,2,14,2"}) == "3142");
  CHECK(only_line({"phi", "--word", "7,2,14,2"}) == "2131");
  CHECK(only_line({"canon", "-c", "taiga", "-w", "13322"}) == "12332");
  CHECK(only_line({"btm", "--size", "6", "--count"}) == "543");
  CHECK(only_line({"series", "--exp", "--order", "3"}) == "1 + z + 3/2*z^2 + 13/6*z^3");
  CHECK(only_line({"series", "--tree", "(1 (1) .)"}) == "1/2*z^2");
  CHECK(only_line({"product", "-a", "fqsym", "-l", "21", "-r", "1"})
        == "G_213 + G_312 + G_321");
  CHECK(only_line({"coproduct", "-a", "wqsym", "-e", "212"})
        == "1 ⊗ M_212 + M_1 ⊗ M_11 + M_212 ⊗ 1");
  CHECK(only_line({"product", "-a", "pbtm", "-l", "(1)", "-r", "(1)"})
        == "Q^m_(1 . (1 . .)) + Q^m_(1 (1 . .) .) + Q^m_(2 . .)");
  // a packed word operand stands for its tree
  CHECK(only_line({"product", "-a", "pbtm", "-l", "1", "-r", "1"})
        == only_line({"product", "-a", "pbtm", "-l", "(1)", "-r", "(1)"}));
}

TEST_CASE("class and fiber list one result per line", "[cli]") {
  auto const cls = run({"class", "--congruence", "taiga", "--word", "13322"});
  REQUIRE(cls.status == 0);
  CHECK(cls.lines.size() == 12);
  CHECK(std::is_sorted(cls.lines.begin(), cls.lines.end()));

  auto const fib = run({"fiber", "--tree", "(2 (1 . .) (2 . .))"});
  REQUIRE(fib.status == 0);
  CHECK(fib.lines.size() == 12);
  for (auto const& l : fib.lines) {
    CHECK(to_string(btm_of_word(parse_word(l))) == "(2 (1 . .) (2 . .))");
  }
}

TEST_CASE("printed literals re-parse", "[cli][property]") {
  auto const trees = run({"btm", "--size", "4"});
  REQUIRE(trees.status == 0);
  CHECK(trees.lines.size() == 36);
  for (auto const& l : trees.lines) {
    CHECK(to_string(parse_btm(l)) == l);
  }
  for (auto const* w : {"45142234212", "541214", "1", "3312"}) {
    auto const r = run({"insert", "-w", w});
    REQUIRE(r.lines.size() == 2);
    CHECK(to_string(parse_bstm(r.lines[0])) == r.lines[0]);
    CHECK(to_string(parse_qsymbol(r.lines[1])) == r.lines[1]);
    CHECK(rs_inverse(parse_bstm(r.lines[0]), parse_qsymbol(r.lines[1])) == parse_word(w));
  }
  auto const cls = run({"class", "-c", "sylv", "-w", "3312"});
  for (auto const& l : cls.lines) {
    CHECK(to_string(parse_word(l)) == l);
  }
  CHECK(only_line({"phi", "--phi", "std", "-w", "3,3,3,3,2,2,2,1,1,1"}) == "7,8,9,10,4,5,6,1,2,3");
  CHECK(only_line({"canon", "-c", "sylv", "-w", "11,1,10"}) == "1,11,10");
  CHECK(run({"class", "-c", "sylv", "-w", "11,1,10"}).lines
        == std::vector<std::string>{"1,11,10", "11,1,10"});
}

TEST_CASE("goodness certification exit codes", "[cli]") {
  auto const good = run({"check-good", "--congruence", "taiga", "--phi", "pack", "--maxlen", "5"});
  CHECK(good.status == 0);
  REQUIRE(good.lines.size() == 1);
  CHECK(good.lines[0].starts_with("good"));

  auto const bad = run({"check-good", "--congruence", "stal", "--phi", "std", "--maxlen", "5"});
  CHECK(bad.status == 1);
  REQUIRE(bad.lines.size() == 2);
  CHECK(bad.lines[0].starts_with("not good"));
  CHECK(bad.lines[1].starts_with("counterexample: "));

  auto const j = run({"--json", "check-good", "-c", "stal", "--phi", "std", "--maxlen", "4"});
  CHECK(j.status == 1);
  auto const doc = json::parse(j.lines.at(0));
  CHECK(doc["good"] == false);
  REQUIRE(doc["counterexample"].is_array());
  CHECK(doc["counterexample"].size() == 2);
}

TEST_CASE("check-hopf", "[cli]") {
  auto const r = run({"check-hopf", "--algebra", "pbtm", "--degree", "3"});
  CHECK(r.status == 0);
  REQUIRE_FALSE(r.lines.empty());
  CHECK(r.lines[0].starts_with("ok: PBTm"));
  auto const j = run({"check-hopf", "-a", "quotient", "-c", "sylv", "--phi", "std", "-n", "3", "--json"});
  CHECK(j.status == 0);
  CHECK(json::parse(j.lines.at(0))["ok"] == true);
}

TEST_CASE("json output", "[cli]") {
  auto const prod = json::parse(only_line({"--json", "product", "-a", "wqsym", "-l", "1", "-r", "1"}));
  REQUIRE(prod.is_array());
  CHECK(prod.size() == 3);
  for (auto const& term : prod) {
    CHECK(term["coeff"] == 1);
    CHECK(term["index"]["family"] == "packed_word");
  }
  auto const dual = json::parse(only_line({"product", "-a", "pbtm-dual", "-l", "(1)", "-r", "(1)", "--json"}));
  CHECK(dual.at(0)["index"]["family"] == "dual_btm");
  auto const series = json::parse(only_line({"series", "--exp", "-n", "2", "--json"}));
  CHECK(series == json::parse("[[1,1],[1,1],[3,2]]"));
}

TEST_CASE("errors and usage", "[cli]") {
  auto const unknown = run({"canon", "-c", "plactic", "-w", "12"});
  CHECK(unknown.status == 1);
  CHECK(unknown.err.starts_with("error: parse-error"));

  auto const malformed = run({"hook", "--tree", "(2 (1 . .)"});
  CHECK(malformed.status == 1);
  CHECK(malformed.err.starts_with("error: parse-error"));

  auto const big = run({"check-good", "-c", "sylv", "--phi", "std", "--maxlen", "8"});
  CHECK(big.status == 1);
  CHECK(big.err.starts_with("error: bound-exceeded"));

  auto const fiber_cap = run({"fiber", "--tree", "(9)", "--limit", "10"});
  CHECK(fiber_cap.status == 1);
  CHECK(fiber_cap.err.starts_with("error: bound-exceeded"));

  auto const order = run({"series", "--btm", "--order", "65"});
  CHECK(order.status == 1);
  CHECK(run({"series", "--btm", "--order", "65", "--limit", "65"}).status == 0);

  auto const algebra = run({"product", "-a", "nsym", "-l", "1", "-r", "1"});
  CHECK(algebra.status == 1);
  CHECK(algebra.err.find("unknown algebra") != std::string::npos);

  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"hook"}).status == 2);
  CHECK(run({"btm"}).status == 2);
  CHECK(run({"series", "--btm", "--exp"}).status == 2);
  CHECK(run({"product", "-a", "quotient", "-l", "1", "-r", "1"}).status == 2);
  CHECK(run({"insert", "--word", "1", "--extra"}).status == 2);
}

TEST_CASE("the installed binary", "[cli]") {
  auto const [status, out] = shell("hook --tree '(2 (1 . .) (2 . .))'");
  CHECK(status == 0);
  CHECK(out == "12\n");
  CHECK(shell("check-good --congruence stal --phi std --maxlen 4").first == 1);
  CHECK(shell("check-good --congruence taiga --phi pack --maxlen 4").first == 0);
  CHECK(shell("--no-such-flag").first == 2);
  // the environment bound is still subject to the hard ceiling
  CHECK(shell("check-good -c sylv --phi std", "HOPFCOMB_MAX_LEN=9").first == 1);
  CHECK(shell("check-good -c sylv --phi std", "HOPFCOMB_MAX_LEN=3").second
        == "good: sylv with std up to length 3\n");
  CHECK(shell("check-good -c sylv --phi std", "HOPFCOMB_MAX_LEN=x").first == 2);
  CHECK(shell("--help").first == 0);
}
