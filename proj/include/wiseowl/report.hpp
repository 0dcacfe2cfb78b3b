#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wiseowl/defined.hpp"
#include "wiseowl/described.hpp"
#include "wiseowl/parser.hpp"
#include "wiseowl/structure.hpp"

namespace wiseowl {

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  std::optional<rdf::Syntax> syntax;  // nullopt: detect per file
  std::optional<std::filesystem::path> json_path;
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> html_path;
  std::optional<std::filesystem::path> details_dir;
  EmbedConfig embed;
  bool strict_describe = false;
  bool no_embed = false;
  bool include_timings = false;

  // Throws std::invalid_argument: no input, or two outputs share a path.
  void validate() const;
};

struct StageTimings {
  std::chrono::duration<double> parse{};
  std::chrono::duration<double> extract{};
  std::chrono::duration<double> describe{};
  std::chrono::duration<double> define{};
  std::chrono::duration<double> connection{};
  std::chrono::duration<double> hierarchy{};
};

struct CatalogSummary {
  std::size_t classes = 0;
  std::size_t individuals = 0;
  std::size_t entities = 0;
  std::size_t object_properties = 0;
  std::size_t annotation_properties = 0;
};

struct OntologyReport {
  std::filesystem::path source;
  std::string name;  // file stem
  std::uintmax_t file_size = 0;
  std::size_t triple_count = 0;
  CatalogSummary catalog;
  DescribedResult describe;
  DefinedResult define;
  bool define_skipped = false;
  std::string embedder;  // provider name, empty when skipped
  ConnectionResult connection;
  HierarchyResult hierarchy;
  double average = 0.0;
  StageTimings timings;
  EmbedConfig embed_config;
  bool strict_describe = false;
};

// Unweighted mean of the metric scores; Define is left out when skipped.
double overall_average(const OntologyReport &report);

// A pipeline failure tagged with the stage that raised it.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, std::filesystem::path source,
             const std::string &message, int exit_code);
  const std::string &stage() const { return stage_; }
  const std::filesystem::path &source() const { return source_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string stage_;
  std::filesystem::path source_;
  int exit_code_;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitEmbed = 3;
inline constexpr int kExitUsage = 64;

// Parse, extract, score. Uses `embedder` for Define when given, otherwise
// one built from config.embed. Throws StageError.
OntologyReport evaluate(const std::filesystem::path &path,
                        const RunConfig &config,
                        Embedder *embedder = nullptr);

// Same pipeline on an already parsed graph.
OntologyReport evaluate_graph(const TripleGraph &graph, const RunConfig &config,
                              Embedder *embedder = nullptr);

// Sorted by average descending, then describe score descending, then name.
// Throws std::invalid_argument for fewer than two reports.
std::vector<OntologyReport> compare(std::vector<OntologyReport> reports);

// Fixed two-decimal formatting used in every output.
std::string format_score(double value);

std::string render_json(const OntologyReport &report, bool include_timings = false);
std::string render_json(const std::vector<OntologyReport> &reports,
                        bool include_timings = false);
std::string render_csv(const std::vector<OntologyReport> &reports);
std::string render_html(const OntologyReport &report);
std::string render_html(const std::vector<OntologyReport> &reports);
// Plain-text table for the terminal.
std::string render_summary(const std::vector<OntologyReport> &reports);

// described.csv, defined.csv and connection.csv, one set per report (file
// names are prefixed with the report name when there are several).
void write_details(const std::filesystem::path &dir,
                   const std::vector<OntologyReport> &reports);
std::string render_described_csv(const OntologyReport &report);
std::string render_defined_csv(const OntologyReport &report);
std::string render_connection_csv(const OntologyReport &report);

}  // namespace wiseowl
