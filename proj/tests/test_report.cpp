#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "wiseowl/error.hpp"
#include "wiseowl/report.hpp"

using namespace wiseowl;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kData = WISEOWL_TEST_DATA;
const fs::path kGolden = kData / "golden.ttl";

// Golden fixture values: three saturated metrics and the local-embedder
// Define score.
constexpr double kGoldenDefine = 7.933203144678991;
constexpr std::uint64_t kGoldenHtmlChecksum = 13709065716819173476ULL;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string &name) {
  auto dir = fs::temp_directory_path() / ("wiseowl-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

RunConfig local_config() {
  RunConfig c;
  c.inputs = {kGolden};
  return c;
}

OntologyReport named(const std::string &name, double describe, double average) {
  OntologyReport r;
  r.name = name;
  r.describe.score = describe;
  r.average = average;
  return r;
}

int run_cli(const std::string &args, const fs::path &err = {}) {
  std::string cmd = std::string(WISEOWL_CLI) + " " + args + " >/dev/null";
  cmd += err.empty() ? " 2>/dev/null" : " 2>" + err.string();
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Checks every report invariant that can be recomputed from the JSON alone.
void check_report_json(const json &j) {
  CHECK(j.at("schema_version") == "1");
  const auto &m = j.at("metrics");
  std::vector<double> scores = {m.at("describe").at("score"), m.at("connection").at("score"),
                                m.at("hierarchy").at("score")};
  if (!m.at("define").at("skipped").get<bool>()) scores.push_back(m.at("define").at("score"));
  double sum = 0.0;
  for (double s : scores) {
    CHECK(s >= 0.0);
    CHECK(s <= 10.0);
    sum += s;
  }
  CHECK(std::abs(sum / scores.size() - j.at("average").get<double>()) <= 0.005);
  const auto &c = m.at("connection");
  double recomposed = 10 * (kCoverageWeight * c.at("coverage").get<double>() +
                            kDiversityWeight * c.at("diversity").get<double>() +
                            kRichnessWeight * c.at("richness").get<double>());
  CHECK(std::abs(recomposed - c.at("score_exact").get<double>()) <= 1e-9);
  const auto &h = m.at("hierarchy");
  CHECK(h.at("score").get<int>() ==
        hierarchy_score(h.at("depth_norm").get<double>(), h.at("breadth_norm").get<double>()));
  const auto &d = m.at("describe");
  if (d.at("entities").get<int>() > 0) {
    CHECK(d.at("score_exact").get<double>() ==
          doctest::Approx(10.0 * d.at("described").get<double>() / d.at("entities").get<double>()));
  }
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("golden fixture") {
    auto r = evaluate(kGolden, local_config());
    CHECK(r.name == "golden");
    CHECK(r.describe.score == 10.0);
    CHECK(r.connection.score == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(r.hierarchy.score == 10);
    CHECK(r.hierarchy.max_depth == 5);
    CHECK(r.hierarchy.mean_breadth == 3.0);
    CHECK(r.define.score == doctest::Approx(kGoldenDefine).epsilon(1e-9));
    for (const auto &row : r.define.per_entity) CHECK(row.adequacy == 1.0);
    CHECK(r.define.score == doctest::Approx(6.0 + 4.0 * [&] {
                                              double s = 0;
                                              for (const auto &row : r.define.per_entity)
                                                s += row.relevance;
                                              return s / r.define.per_entity.size();
                                            }()));
    CHECK(r.average == doctest::Approx((30.0 + r.define.score) / 4.0).epsilon(1e-12));
    CHECK(r.triple_count > 0);
    CHECK(r.file_size == fs::file_size(kGolden));
  }

  TEST_CASE("average invariant") {
    auto r = evaluate(kGolden, local_config());
    CHECK(std::abs(overall_average(r) - (r.describe.score + r.define.score + r.connection.score +
                                         r.hierarchy.score) / 4.0) <= 1e-9);
    auto cfg = local_config();
    cfg.no_embed = true;
    auto s = evaluate(kGolden, cfg);
    CHECK(s.define_skipped);
    CHECK(s.define.score == 0.0);
    CHECK(std::abs(s.average - (s.describe.score + s.connection.score + s.hierarchy.score) / 3.0) <=
          1e-9);
  }

  TEST_CASE("empty file") {
    auto path = scratch("empty.ttl");
    std::ofstream(path).close();
    auto r = evaluate(path, local_config());
    CHECK(r.triple_count == 0);
    CHECK(r.describe.score == 0.0);
    CHECK(r.define.score == 0.0);
    CHECK(r.connection.score == 0.0);
    CHECK(r.hierarchy.score == 0);
    CHECK(r.average == 0.0);
  }

  TEST_CASE("stage errors") {
    try {
      evaluate(kData / "does-not-exist.ttl", local_config());
      FAIL("expected an error");
    } catch (const StageError &e) {
      CHECK(e.stage() == "parse");
      CHECK(e.exit_code() == kExitParse);
      CHECK(std::string(e.what()).find("does-not-exist.ttl") != std::string::npos);
    }
    auto bad = scratch("bad.ttl");
    std::ofstream(bad) << "@prefix : <http://e/> .\n:a :b .\n";
    CHECK_THROWS_AS(evaluate(bad, local_config()), StageError);

    class Down : public Embedder {
     public:
      std::vector<EmbeddingVector> embed(std::span<const std::string>) override {
        throw RemoteUnavailable("down");
      }
      std::string name() const override { return "down"; }
    } down;
    try {
      evaluate(kGolden, local_config(), &down);
      FAIL("expected an error");
    } catch (const StageError &e) {
      CHECK(e.stage() == "define");
      CHECK(e.exit_code() == kExitEmbed);
    }
  }

  TEST_CASE("run config validation") {
    RunConfig c;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.inputs = {"a.ttl"};
    CHECK_NOTHROW(c.validate());
    c.json_path = "out/x";
    c.csv_path = "out/./x";
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.csv_path = "out/y";
    CHECK_NOTHROW(c.validate());
  }

  TEST_CASE("compare") {
    auto ranked = compare({named("dc", 9.17, 5.22), named("go", 10.0, 8.43)});
    CHECK(ranked[0].name == "go");
    CHECK(ranked[1].name == "dc");
    auto ties = compare({named("b", 5, 5), named("a", 5, 5), named("c", 6, 5)});
    CHECK(ties[0].name == "c");
    CHECK(ties[1].name == "a");
    CHECK(ties[2].name == "b");
    CHECK_THROWS_AS(compare({named("x", 1, 1)}), std::invalid_argument);
  }

  TEST_CASE("csv") {
    OntologyReport go = named("go", 10.0, 8.4275);
    go.define.score = 6.29;
    go.connection.score = 7.45;
    go.hierarchy.score = 10;
    CHECK(render_csv({go}) ==
          "ontology,describe,define,connection,hierarchy,average\ngo,10.00,6.29,7.45,10.00,8.43\n");
    OntologyReport odd = named("a,\"b\"", 1.0, 1.0);
    odd.define_skipped = true;
    CHECK(render_csv({odd}) ==
          "ontology,describe,define,connection,hierarchy,average\n\"a,\"\"b\"\"\",1.00,,0.00,0.00,1.00\n");
    CHECK(format_score(0.005) == "0.01");
    CHECK(format_score(0.125) == "0.13");
    CHECK(format_score(0.0) == "0.00");
  }

  TEST_CASE("json round trip") {
    auto r = evaluate(kGolden, local_config());
    auto j = json::parse(render_json(r));
    check_report_json(j);
    CHECK(j.at("metrics").at("define").at("score_exact").get<double>() == r.define.score);
    CHECK_FALSE(j.contains("timings_seconds"));
    CHECK(json::parse(render_json(r, true)).contains("timings_seconds"));
    CHECK(render_json(r) == render_json(evaluate(kGolden, local_config())));

    auto dc = evaluate(kData / "dcterms.nq", [] {
      RunConfig c;
      c.inputs = {kData / "dcterms.nq"};
      c.no_embed = true;
      return c;
    }());
    auto both = json::parse(render_json(compare({dc, r})));
    CHECK(both.at("ranking").size() == 2);
    CHECK(both.at("ranking")[0] == "golden");
    for (const auto &rep : both.at("reports")) check_report_json(rep);
  }

  TEST_CASE("html") {
    auto r = evaluate(kGolden, local_config());
    r.source = "golden.ttl";
    auto html = render_html(r);
    CHECK(html.rfind("<!DOCTYPE html>", 0) == 0);
    CHECK(html.find("<svg") != std::string::npos);
    CHECK(html.find("<details") != std::string::npos);
    std::regex external(R"((src|href)\s*=\s*["']?(https?:)?//)", std::regex::icase);
    CHECK_FALSE(std::regex_search(html, external));
    CHECK(html.find("<script") == std::string::npos);
    CHECK(html.find("<link") == std::string::npos);
    CHECK(html.find("@import") == std::string::npos);
    CHECK(fnv1a(html) == kGoldenHtmlChecksum);
    CHECK(render_html(r) == html);

    OntologyReport zero = named("zero", 0.0, 0.0);
    auto z = render_html(zero);
    CHECK(z.find("stroke-dasharray=\"0.00 100.00\"") != std::string::npos);
    CHECK(render_html(std::vector<OntologyReport>{r, zero}).find("<table") != std::string::npos);
  }

  TEST_CASE("details csv") {
    auto r = evaluate(kGolden, local_config());
    auto defined = render_defined_csv(r);
    CHECK(defined.rfind("entity_iri,label,has_definition,relevance,adequacy,entity_score\n", 0) == 0);
    CHECK(std::count(defined.begin(), defined.end(), '\n') == 17);
    CHECK(render_connection_csv(r).rfind("entity_iri,distinct_predicates,total_connections\n", 0) ==
          0);
    auto dir = scratch("details");
    write_details(dir, {r});
    CHECK(fs::exists(dir / "described.csv"));
    CHECK(fs::exists(dir / "defined.csv"));
    CHECK(fs::exists(dir / "connection.csv"));
  }
}

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(run_cli("score " + kGolden.string()) == kExitOk);
    auto err = scratch("stderr.txt");
    CHECK(run_cli("score " + (kData / "missing.ttl").string(), err) == kExitParse);
    CHECK(slurp(err).find("missing.ttl") != std::string::npos);
    CHECK(run_cli("score --bogus " + kGolden.string()) == kExitUsage);
    CHECK(run_cli("score") == kExitUsage);
    CHECK(run_cli("score --embed-max-tokens 4 " + kGolden.string()) == kExitUsage);
    CHECK(run_cli("score --embedder remote " + kGolden.string()) == kExitUsage);
    CHECK(run_cli("score --embedder remote --embed-url http://127.0.0.1:1/embed " +
                  kGolden.string()) == kExitEmbed);
  }

  TEST_CASE("json output and determinism") {
    auto a = scratch("a.json"), b = scratch("b.json");
    auto ca = scratch("a.csv"), cb = scratch("b.csv");
    REQUIRE(run_cli("score " + kGolden.string() + " --json " + a.string() + " --csv " +
                    ca.string()) == 0);
    REQUIRE(run_cli("score " + kGolden.string() + " --json " + b.string() + " --csv " +
                    cb.string()) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(ca) == slurp(cb));
    check_report_json(json::parse(slurp(a)));
  }

  TEST_CASE("comparison csv") {
    auto csv = scratch("cmp.csv");
    REQUIRE(run_cli("score --no-embed " + kGolden.string() + " " + (kData / "dcterms.nq").string() +
                    " --csv " + csv.string()) == 0);
    auto text = slurp(csv);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    CHECK(text.find("\ngolden,") < text.find("\ndcterms,"));
  }

  TEST_CASE("html and details outputs") {
    auto html = scratch("r.html");
    auto dir = scratch("cli-details");
    REQUIRE(run_cli("score " + kGolden.string() + " --html " + html.string() + " --details " +
                    dir.string()) == 0);
    CHECK(fs::file_size(html) > 0);
    CHECK(fs::exists(dir / "defined.csv"));
  }
}
