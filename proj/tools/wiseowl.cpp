// wiseowl: score OWL/RDF ontologies on four quality metrics.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>

#include "CLI11.hpp"
#include "wiseowl/error.hpp"
#include "wiseowl/report.hpp"

namespace fs = std::filesystem;
using namespace wiseowl;

namespace {

void write_output(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw IoError("cannot write " + path.string());
}

int run_score(const RunConfig &config) {
  std::vector<std::future<OntologyReport>> jobs;
  for (const auto &path : config.inputs) {
    jobs.push_back(std::async(std::launch::async,
                              [&config, path] { return evaluate(path, config); }));
  }
  std::vector<OntologyReport> reports;
  int status = kExitOk;
  for (auto &job : jobs) {
    try {
      reports.push_back(job.get());
    } catch (const StageError &e) {
      std::cerr << "wiseowl: " << e.what() << '\n';
      if (status == kExitOk) status = e.exit_code();
    }
  }
  if (status != kExitOk) return status;
  if (reports.size() >= 2) reports = compare(std::move(reports));

  std::cout << render_summary(reports);
  try {
    if (config.json_path) {
      write_output(*config.json_path, render_json(reports, config.include_timings));
    }
    if (config.csv_path) write_output(*config.csv_path, render_csv(reports));
    if (config.html_path) write_output(*config.html_path, render_html(reports));
    if (config.details_dir) write_details(*config.details_dir, reports);
  } catch (const Error &e) {
    std::cerr << "wiseowl: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Score OWL/RDF ontologies on description, definition, "
               "connection and hierarchy quality."};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> inputs;
  std::string syntax = "auto";
  std::string json, csv, html, details, embedder = "local", embed_url;
  std::size_t embed_batch = config.embed.batch_size;
  std::size_t embed_max_tokens = config.embed.max_tokens;

  auto *score = app.add_subcommand("score", "Score one or more ontology files");
  score->add_option("files", inputs, "Turtle or N-Triples files")->required();
  score->add_option("--syntax", syntax, "Input syntax")
      ->check(CLI::IsMember({"auto", "turtle", "ntriples"}))
      ->capture_default_str();
  score->add_option("--json", json, "Write the JSON report here");
  score->add_option("--csv", csv, "Write the score table as CSV here");
  score->add_option("--html", html, "Write a self-contained HTML report here");
  score->add_option("--details", details, "Directory for per-entity CSV files");
  score->add_option("--embedder", embedder, "Embedding provider")
      ->check(CLI::IsMember({"local", "remote"}))
      ->capture_default_str();
  score->add_option("--embed-url", embed_url,
                    "Remote embedding endpoint (or WISEOWL_EMBED_URL)");
  score->add_option("--embed-batch", embed_batch, "Texts per embedding request")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  score->add_option("--embed-max-tokens", embed_max_tokens,
                    "Truncate texts to this many tokens before embedding")
      ->check(CLI::Range(std::size_t{8}, std::size_t{1} << 20))
      ->capture_default_str();
  score->add_flag("--no-embed", config.no_embed,
                  "Skip Well-Defined; average the other three metrics");
  score->add_flag("--strict-describe", config.strict_describe,
                  "Count only literal-valued annotations as descriptions");
  score->add_flag("--timings", config.include_timings,
                  "Include per-stage timings in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  for (const auto &in : inputs) config.inputs.emplace_back(in);
  if (syntax != "auto") config.syntax = rdf::syntax_from_name(syntax);
  if (!json.empty()) config.json_path = json;
  if (!csv.empty()) config.csv_path = csv;
  if (!html.empty()) config.html_path = html;
  if (!details.empty()) config.details_dir = details;
  config.embed.provider =
      embedder == "remote" ? EmbedProvider::kRemote : EmbedProvider::kLocal;
  if (!embed_url.empty()) config.embed.endpoint = embed_url;
  config.embed.batch_size = embed_batch;
  config.embed.max_tokens = embed_max_tokens;
  if (config.embed.provider == EmbedProvider::kRemote) {
    config.embed = with_environment(config.embed);
  }

  try {
    config.validate();
  } catch (const std::invalid_argument &e) {
    std::cerr << "wiseowl: " << e.what() << '\n';
    return kExitUsage;
  }
  return run_score(config);
}
