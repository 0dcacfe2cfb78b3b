#include "wiseowl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wiseowl/error.hpp"

namespace wiseowl {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using ordered_json = nlohmann::ordered_json;

namespace {

double round2(double x) { return std::round(x * 100.0) / 100.0; }

template <typename F>
auto timed(std::chrono::duration<double> &slot, F &&f) {
  auto start = Clock::now();
  if constexpr (std::is_void_v<decltype(f())>) {
    f();
    slot = Clock::now() - start;
  } else {
    auto result = f();
    slot = Clock::now() - start;
    return result;
  }
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string html_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string term_text(const Term &t) {
  return t.is_blank() ? "_:" + t.value : t.value;
}

void write_file(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("cannot write " + path.string());
}

std::string provider_name(EmbedProvider p) {
  return p == EmbedProvider::kLocal ? "local" : "remote";
}

}  // namespace

void RunConfig::validate() const {
  if (inputs.empty()) throw std::invalid_argument("no input file given");
  std::vector<fs::path> outputs;
  for (const auto &p : {json_path, csv_path, html_path, details_dir}) {
    if (p) outputs.push_back(p->lexically_normal());
  }
  std::sort(outputs.begin(), outputs.end());
  if (std::adjacent_find(outputs.begin(), outputs.end()) != outputs.end()) {
    throw std::invalid_argument("output paths must be distinct");
  }
  if (!no_embed) embed.validate();
}

StageError::StageError(std::string stage, fs::path source,
                       const std::string &message, int exit_code)
    : std::runtime_error(source.string() + ": " + stage + ": " + message),
      stage_(std::move(stage)),
      source_(std::move(source)),
      exit_code_(exit_code) {}

double overall_average(const OntologyReport &r) {
  double sum = r.describe.score + r.connection.score + r.hierarchy.score;
  if (r.define_skipped) return sum / 3.0;
  return (sum + r.define.score) / 4.0;
}

OntologyReport evaluate_graph(const TripleGraph &graph, const RunConfig &config,
                              Embedder *embedder) {
  OntologyReport r;
  r.triple_count = graph.size();
  r.embed_config = config.embed;
  r.strict_describe = config.strict_describe;

  EntityCatalog catalog =
      timed(r.timings.extract, [&] { return extract_catalog(graph); });
  r.catalog = {catalog.classes.size(), catalog.individuals.size(),
               catalog.entities.size(), catalog.object_properties.size(),
               catalog.annotation_properties.size()};

  // The structural metrics only read the graph, so they run beside the
  // annotation-based ones.
  auto connection = std::async(std::launch::async, [&] {
    std::chrono::duration<double> t{};
    auto res = timed(t, [&] { return score_connection(graph, catalog); });
    return std::make_pair(std::move(res), t);
  });
  auto hierarchy = std::async(std::launch::async, [&] {
    std::chrono::duration<double> t{};
    auto res = timed(t, [&] { return score_hierarchy(graph, catalog); });
    return std::make_pair(res, t);
  });

  DescribeOptions dopts{config.strict_describe};
  r.describe = timed(r.timings.describe,
                     [&] { return score_described(graph, catalog, dopts); });

  std::exception_ptr define_error;
  if (config.no_embed) {
    r.define_skipped = true;
  } else {
    try {
      std::unique_ptr<Embedder> owned;
      if (!embedder) {
        owned = make_embedder(config.embed);
        embedder = owned.get();
      }
      r.embedder = embedder->name();
      r.define = timed(r.timings.define, [&] {
        return score_defined(graph, catalog, *embedder, config.embed);
      });
    } catch (...) {
      define_error = std::current_exception();
    }
  }

  auto [conn, conn_t] = connection.get();
  r.connection = std::move(conn);
  r.timings.connection = conn_t;
  auto [hier, hier_t] = hierarchy.get();
  r.hierarchy = hier;
  r.timings.hierarchy = hier_t;

  if (define_error) std::rethrow_exception(define_error);
  r.average = overall_average(r);
  return r;
}

OntologyReport evaluate(const fs::path &path, const RunConfig &config,
                        Embedder *embedder) {
  std::chrono::duration<double> parse_time{};
  TripleGraph graph;
  std::uintmax_t size = 0;
  try {
    graph = timed(parse_time, [&] { return rdf::parse_file(path, config.syntax); });
    std::error_code ec;
    size = fs::file_size(path, ec);
    if (ec) size = 0;
  } catch (const Error &e) {
    throw StageError("parse", path, e.what(), kExitParse);
  } catch (const std::bad_alloc &) {
    throw StageError("parse", path, "out of memory", kExitParse);
  }
  OntologyReport r;
  try {
    r = evaluate_graph(graph, config, embedder);
  } catch (const RemoteUnavailable &e) {
    throw StageError("define", path, e.what(), kExitEmbed);
  } catch (const DimensionMismatch &e) {
    throw StageError("define", path, e.what(), kExitEmbed);
  } catch (const EmptyInput &e) {
    throw StageError("define", path, e.what(), kExitEmbed);
  } catch (const std::invalid_argument &e) {
    throw StageError("define", path, e.what(), kExitEmbed);
  }
  r.source = path;
  r.name = path.stem().string();
  r.file_size = size;
  r.timings.parse = parse_time;
  return r;
}

std::vector<OntologyReport> compare(std::vector<OntologyReport> reports) {
  if (reports.size() < 2) {
    throw std::invalid_argument("compare needs at least two reports");
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const OntologyReport &a, const OntologyReport &b) {
                     if (a.average != b.average) return a.average > b.average;
                     if (a.describe.score != b.describe.score) {
                       return a.describe.score > b.describe.score;
                     }
                     return a.name < b.name;
                   });
  return reports;
}

std::string format_score(double value) {
  char buf[32];
  double v = round2(value);
  if (v == 0.0) v = 0.0;  // no "-0.00"
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

ordered_json report_json(const OntologyReport &r, bool include_timings) {
  ordered_json j;
  j["schema_version"] = "1";
  j["source"] = {{"path", r.source.generic_string()},
                 {"name", r.name},
                 {"size_bytes", r.file_size},
                 {"triples", r.triple_count}};
  j["catalog"] = {{"classes", r.catalog.classes},
                  {"individuals", r.catalog.individuals},
                  {"entities", r.catalog.entities},
                  {"object_properties", r.catalog.object_properties},
                  {"annotation_properties", r.catalog.annotation_properties}};

  ordered_json define = {{"score", round2(r.define.score)},
                         {"score_exact", r.define.score},
                         {"skipped", r.define_skipped}};
  if (!r.define_skipped) {
    define["embedder"] = r.embedder;
    define["defined"] = r.define.defined_count;
    define["entities"] = r.define.per_entity.size();
    define["batch"] = {{"count", r.define.batch_stats.count},
                       {"mean", r.define.batch_stats.mean},
                       {"stddev", r.define.batch_stats.stddev}};
  }

  j["metrics"] = {
      {"describe",
       {{"score", round2(r.describe.score)},
        {"score_exact", r.describe.score},
        {"described", r.describe.described_count},
        {"entities", r.describe.entity_count}}},
      {"define", define},
      {"connection",
       {{"score", round2(r.connection.score)},
        {"score_exact", r.connection.score},
        {"coverage", r.connection.coverage},
        {"diversity", r.connection.diversity},
        {"richness", r.connection.richness}}},
      {"hierarchy",
       {{"score", r.hierarchy.score},
        {"max_depth", r.hierarchy.max_depth},
        {"mean_breadth", r.hierarchy.mean_breadth},
        {"depth_norm", r.hierarchy.depth_norm},
        {"breadth_norm", r.hierarchy.breadth_norm},
        {"root_count", r.hierarchy.root_count},
        {"edge_count", r.hierarchy.edge_count},
        {"node_count", r.hierarchy.node_count},
        {"named_equivalences", r.hierarchy.named_equivalence_count}}},
  };
  j["average"] = round2(r.average);
  j["average_exact"] = r.average;

  ordered_json cfg = {{"strict_describe", r.strict_describe},
                      {"no_embed", r.define_skipped}};
  if (!r.define_skipped) {
    cfg["embedder"] = provider_name(r.embed_config.provider);
    if (r.embed_config.endpoint) cfg["embed_url"] = *r.embed_config.endpoint;
    cfg["embed_batch"] = r.embed_config.batch_size;
    cfg["embed_max_tokens"] = r.embed_config.max_tokens;
  }
  j["config"] = cfg;

  if (include_timings) {
    const auto &t = r.timings;
    j["timings_seconds"] = {{"parse", t.parse.count()},
                            {"extract", t.extract.count()},
                            {"describe", t.describe.count()},
                            {"define", t.define.count()},
                            {"connection", t.connection.count()},
                            {"hierarchy", t.hierarchy.count()}};
  }
  return j;
}

}  // namespace

std::string render_json(const OntologyReport &report, bool include_timings) {
  return report_json(report, include_timings).dump(2) + "\n";
}

std::string render_json(const std::vector<OntologyReport> &reports,
                        bool include_timings) {
  if (reports.size() == 1) return render_json(reports.front(), include_timings);
  ordered_json j;
  j["schema_version"] = "1";
  ordered_json ranking = ordered_json::array();
  ordered_json all = ordered_json::array();
  for (const auto &r : reports) {
    ranking.push_back(r.name);
    all.push_back(report_json(r, include_timings));
  }
  j["ranking"] = ranking;
  j["reports"] = all;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// CSV

std::string render_csv(const std::vector<OntologyReport> &reports) {
  std::string out = "ontology,describe,define,connection,hierarchy,average\n";
  for (const auto &r : reports) {
    out += csv_field(r.name);
    out += ',' + format_score(r.describe.score);
    out += ',';
    if (!r.define_skipped) out += format_score(r.define.score);
    out += ',' + format_score(r.connection.score);
    out += ',' + format_score(r.hierarchy.score);
    out += ',' + format_score(r.average);
    out += '\n';
  }
  return out;
}

std::string render_described_csv(const OntologyReport &r) {
  std::string out = "entity_iri,described,witness_predicate\n";
  for (const auto &row : r.describe.per_entity) {
    out += csv_field(term_text(row.entity));
    out += row.described ? ",true," : ",false,";
    if (row.witness) out += csv_field(row.witness->value);
    out += '\n';
  }
  return out;
}

std::string render_defined_csv(const OntologyReport &r) {
  std::string out =
      "entity_iri,label,has_definition,relevance,adequacy,entity_score\n";
  char buf[64];
  for (const auto &row : r.define.per_entity) {
    out += csv_field(term_text(row.entity));
    out += ',' + csv_field(row.label);
    out += row.definition ? ",true" : ",false";
    std::snprintf(buf, sizeof buf, ",%.6f,%.6f,%.6f\n", row.relevance,
                  row.adequacy, row.entity_score);
    out += buf;
  }
  return out;
}

std::string render_connection_csv(const OntologyReport &r) {
  std::string out = "entity_iri,distinct_predicates,total_connections\n";
  for (const auto &row : r.connection.per_entity) {
    out += csv_field(term_text(row.entity));
    out += ',' + std::to_string(row.distinct_predicates);
    out += ',' + std::to_string(row.total_connections);
    out += '\n';
  }
  return out;
}

void write_details(const fs::path &dir,
                   const std::vector<OntologyReport> &reports) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto &r : reports) {
    std::string prefix = reports.size() > 1 ? r.name + "." : "";
    write_file(dir / (prefix + "described.csv"), render_described_csv(r));
    if (!r.define_skipped) {
      write_file(dir / (prefix + "defined.csv"), render_defined_csv(r));
    }
    write_file(dir / (prefix + "connection.csv"), render_connection_csv(r));
  }
}

// ---------------------------------------------------------------------------
// Terminal summary

std::string render_summary(const std::vector<OntologyReport> &reports) {
  std::size_t width = std::string_view("ontology").size();
  for (const auto &r : reports) width = std::max(width, r.name.size());
  std::ostringstream out;
  auto cell = [&](std::string_view s, std::size_t w) {
    out << s << std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  cell("ontology", width + 2);
  for (auto h : {"describe", "define", "connection", "hierarchy"}) cell(h, 12);
  out << "average\n";
  for (const auto &r : reports) {
    cell(r.name, width + 2);
    cell(format_score(r.describe.score), 12);
    cell(r.define_skipped ? "-" : format_score(r.define.score), 12);
    cell(format_score(r.connection.score), 12);
    cell(format_score(r.hierarchy.score), 12);
    out << format_score(r.average) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// HTML

namespace {

// Ring whose circumference is 100 user units, so the dash length is the
// fill percentage.
std::string donut(std::string_view title, double score, bool skipped) {
  const double fill = skipped ? 0.0 : std::clamp(score / 10.0, 0.0, 1.0) * 100.0;
  char dash[64];
  std::snprintf(dash, sizeof dash, "%.2f %.2f", fill, 100.0 - fill);
  std::string label = skipped ? "n/a" : format_score(score);
  std::string out;
  out += "<figure class=\"metric\">\n";
  out += "<svg viewBox=\"0 0 42 42\" width=\"160\" height=\"160\" role=\"img\" "
         "aria-label=\"" + html_escape(title) + " " + label + " of 10\">\n";
  out += "<circle cx=\"21\" cy=\"21\" r=\"15.91549430918954\" fill=\"none\" "
         "stroke=\"#e6e6e6\" stroke-width=\"4\"/>\n";
  out += "<circle class=\"fill\" cx=\"21\" cy=\"21\" r=\"15.91549430918954\" "
         "fill=\"none\" stroke=\"#2f7ebc\" stroke-width=\"4\" "
         "stroke-dasharray=\"" + std::string(dash) +
         "\" stroke-dashoffset=\"25\"/>\n";
  out += "<text x=\"21\" y=\"23\" text-anchor=\"middle\" font-size=\"7\">" +
         label + "</text>\n";
  out += "</svg>\n<figcaption>" + html_escape(title) + "</figcaption>\n";
  out += "</figure>\n";
  return out;
}

template <typename Rows, typename Header, typename Row>
std::string detail_table(std::string_view title, const Rows &rows,
                         Header header, Row row) {
  std::string out = "<details><summary>" + html_escape(title) + " (" +
                    std::to_string(rows.size()) + " entities)</summary>\n";
  out += "<table>\n<thead><tr>";
  for (std::string_view h : header) out += "<th>" + html_escape(h) + "</th>";
  out += "</tr></thead>\n<tbody>\n";
  for (const auto &r : rows) {
    out += "<tr>";
    for (const auto &c : row(r)) out += "<td>" + html_escape(c) + "</td>";
    out += "</tr>\n";
  }
  out += "</tbody>\n</table>\n</details>\n";
  return out;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string report_section(const OntologyReport &r) {
  std::string out = "<section>\n<h2>" + html_escape(r.name) + "</h2>\n";
  out += "<p class=\"meta\">" + html_escape(r.source.generic_string()) + " &middot; " +
         std::to_string(r.triple_count) + " triples &middot; " +
         std::to_string(r.catalog.classes) + " classes &middot; " +
         std::to_string(r.catalog.individuals) + " individuals &middot; " +
         std::to_string(r.catalog.object_properties) +
         " object properties</p>\n";
  out += "<div class=\"charts\">\n";
  out += donut("Well-Described", r.describe.score, false);
  out += donut("Well-Defined", r.define.score, r.define_skipped);
  out += donut("Connection", r.connection.score, false);
  out += donut("Hierarchical Breadth", r.hierarchy.score, false);
  out += "</div>\n";
  out += "<p class=\"average\">Overall average: <strong>" +
         format_score(r.average) + "</strong>" +
         (r.define_skipped ? " (Well-Defined skipped)" : "") + "</p>\n";

  out += detail_table(
      "Well-Described", r.describe.per_entity,
      std::array<std::string_view, 3>{"entity", "described", "witness"},
      [](const DescribedRow &row) {
        return std::array<std::string, 3>{
            term_text(row.entity), row.described ? "yes" : "no",
            row.witness ? row.witness->value : std::string()};
      });
  if (!r.define_skipped) {
    out += detail_table(
        "Well-Defined", r.define.per_entity,
        std::array<std::string_view, 6>{"entity", "label", "definition",
                                        "relevance", "adequacy", "score"},
        [](const DefinedRow &row) {
          return std::array<std::string, 6>{
              term_text(row.entity), row.label, row.definition ? "yes" : "no",
              fixed(row.relevance, 4), fixed(row.adequacy, 4),
              fixed(row.entity_score, 4)};
        });
  }
  out += detail_table(
      "Connection", r.connection.per_entity,
      std::array<std::string_view, 3>{"entity", "distinct predicates",
                                      "connections"},
      [](const ConnectionRow &row) {
        return std::array<std::string, 3>{term_text(row.entity),
                                          std::to_string(row.distinct_predicates),
                                          std::to_string(row.total_connections)};
      });
  out += "<p class=\"meta\">Hierarchy: max depth " +
         std::to_string(r.hierarchy.max_depth) + ", mean breadth " +
         fixed(r.hierarchy.mean_breadth, 2) + ", " +
         std::to_string(r.hierarchy.root_count) + " roots, " +
         std::to_string(r.hierarchy.edge_count) + " edges</p>\n";
  out += "</section>\n";
  return out;
}

constexpr std::string_view kStyle = R"(body{font-family:sans-serif;margin:2em;color:#222}
.charts{display:flex;flex-wrap:wrap;gap:1.5em}
.metric{margin:0;text-align:center}
.meta{color:#666;font-size:.9em}
.average{font-size:1.2em}
table{border-collapse:collapse;font-size:.85em}
td,th{border:1px solid #ccc;padding:2px 6px;text-align:left}
details{margin:.5em 0}
)";

}  // namespace

std::string render_html(const std::vector<OntologyReport> &reports) {
  std::string out =
      "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
      "<title>Ontology quality report</title>\n<style>\n";
  out += kStyle;
  out += "</style>\n</head>\n<body>\n<h1>Ontology quality report</h1>\n";
  if (reports.size() > 1) {
    out += "<table>\n<thead><tr><th>rank</th><th>ontology</th><th>describe</th>"
           "<th>define</th><th>connection</th><th>hierarchy</th>"
           "<th>average</th></tr></thead>\n<tbody>\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto &r = reports[i];
      out += "<tr><td>" + std::to_string(i + 1) + "</td><td>" +
             html_escape(r.name) + "</td><td>" + format_score(r.describe.score) +
             "</td><td>" + (r.define_skipped ? "-" : format_score(r.define.score)) +
             "</td><td>" + format_score(r.connection.score) + "</td><td>" +
             format_score(r.hierarchy.score) + "</td><td>" +
             format_score(r.average) + "</td></tr>\n";
    }
    out += "</tbody>\n</table>\n";
  }
  for (const auto &r : reports) out += report_section(r);
  out += "</body>\n</html>\n";
  return out;
}

std::string render_html(const OntologyReport &report) {
  return render_html(std::vector<OntologyReport>{report});
}

}  // namespace wiseowl
