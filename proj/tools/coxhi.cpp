// coxhi: command-line front end for the hypergraph index engine.
//
// Exit codes: 0 ok, 1 input error, 2 rank cap exceeded or unsupported size,
// 3 relative hyperbolicity check failed.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxhi/classify.hpp"
#include "coxhi/core.hpp"
#include "coxhi/cxs.hpp"
#include "coxhi/families.hpp"
#include "coxhi/hindex.hpp"
#include "coxhi/report.hpp"

namespace fs = std::filesystem;
using namespace coxhi;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitRh = 3;

struct Globals {
  bool json = false;
  bool trace = false;
  int max_rank = kDefaultMaxRank;
  std::uint64_t seed = 1;

  AnalysisOptions analysis() const { return {max_rank}; }
};

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json envelope() {
  ordered_json j;
  j["schema"] = kSchema;
  return j;
}

void emit_system(const Globals& g, const CoxeterSystem& sys, const std::string& out) {
  const std::string text = g.json ? system_to_json(sys).dump(2) + "\n" : to_cxs(sys, preferred_default(sys));
  if (out.empty()) std::cout << text;
  else write_text_file(out, text);
}

Label parse_label_option(const std::string& s, const char* what) {
  try {
    return Label::parse(s);
  } catch (const InputError&) {
    throw InputError(std::string("invalid ") + what + " '" + s + "'");
  }
}

std::vector<Label> parse_alphabet(const std::string& text) {
  std::vector<Label> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_label_option(tok, "alphabet entry"));
  return out;
}

std::vector<GenSubset> parse_peripherals(const CoxeterSystem& sys, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid peripherals JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("peripherals must be a JSON array of arrays");
  std::vector<GenSubset> out;
  for (const auto& p : doc) {
    if (!p.is_array()) throw InputError("each peripheral must be an array of generator names or 1-based indices");
    GenSubset t;
    for (const auto& e : p) {
      int idx = -1;
      if (e.is_string()) {
        auto i = sys.index_of(e.get<std::string>());
        if (!i) throw InputError("unknown generator '" + e.get<std::string>() + "'");
        idx = *i;
      } else if (e.is_number_integer()) {
        const auto v = e.get<std::int64_t>();
        if (v < 1 || v > sys.rank()) throw InputError("generator index out of range: " + std::to_string(v));
        idx = static_cast<int>(v - 1);
      } else {
        throw InputError("peripheral members must be names or 1-based indices");
      }
      t = t.with(idx);
    }
    out.push_back(t);
  }
  return out;
}

int cmd_analyze(const Globals& g, const std::string& file, bool timing, bool class_t) {
  const CoxeterSystem sys = read_system_file(file);
  const auto start = std::chrono::steady_clock::now();
  const AnalysisReport r = analyze(sys, {g.analysis(), g.trace, class_t});
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (g.json) {
    ordered_json j = to_json(r, g.trace);
    if (timing) j["timing_ms"] = ms;
    print_json(j);
  } else {
    std::cout << to_text(r);
    if (g.trace) {
      for (std::size_t i = 1; i < r.lambda.levels.size(); ++i) {
        const auto& lv = r.lambda.levels[i];
        for (std::size_t k = 0; k < lv.sets.size(); ++k) {
          std::cout << "  Lambda_" << i << " " << format_subset(sys, lv.sets[k]) << " <= classes";
          for (int c : lv.origin_classes[k]) std::cout << " " << c;
          std::cout << " of Lambda_" << i - 1 << "\n";
        }
      }
    }
    if (timing) std::cout << "time: " << ms << " ms\n";
  }
  return kExitOk;
}

int cmd_classify(const Globals& g, const std::string& file, const std::string& subset_text) {
  const CoxeterSystem sys = read_system_file(file);
  Classifier cls(sys);
  const GenSubset t = subset_text.empty() ? sys.all() : parse_subset(sys, subset_text);
  const SubsystemClass c = cls.classify(t);
  if (g.json) {
    ordered_json j = envelope();
    j["subset"] = subset_names(sys, t);
    ordered_json comps = ordered_json::array();
    for (const auto& comp : c.components)
      comps.push_back({{"subset", subset_names(sys, comp.members)}, {"type", comp.type.name()}});
    j["components"] = comps;
    j["spherical"] = c.spherical;
    j["irreducible_affine"] = c.irreducible_affine;
    j["minimal_nonspherical"] = c.minimal_nonspherical;
    print_json(j);
  } else {
    std::cout << format_subset(sys, t) << "\n";
    for (const auto& comp : c.components) std::cout << "  " << format_subset(sys, comp.members) << ": " << comp.type.name() << "\n";
    std::cout << "spherical: " << (c.spherical ? "yes" : "no") << "\n";
    std::cout << "irreducible affine: " << (c.irreducible_affine ? "yes" : "no") << "\n";
    std::cout << "minimal nonspherical: " << (c.minimal_nonspherical ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_hindex(const Globals& g, const std::string& file) {
  const CoxeterSystem sys = read_system_file(file);
  Classifier cls(sys);
  const LambdaAnalysis la = lambda_sequence(cls, g.analysis());
  if (g.json) {
    ordered_json j = envelope();
    j["h"] = json_out::h_value(la.h);
    j["stabilized_at"] = la.stabilized_at ? ordered_json(*la.stabilized_at) : ordered_json(nullptr);
    if (g.trace) j["lambda"] = json_out::lambda_levels(sys, la, true);
    print_json(j);
  } else {
    if (g.trace) std::cout << format_lambda(sys, la);
    std::cout << la.h.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_ends(const Globals& g, const std::string& file) {
  const CoxeterSystem sys = read_system_file(file);
  Classifier cls(sys);
  const Ends e = ends(cls, g.max_rank);
  if (g.json) {
    ordered_json j = envelope();
    j["ends"] = json_out::ends_value(e);
    print_json(j);
  } else {
    std::cout << to_string(e) << "\n";
  }
  return kExitOk;
}

int cmd_betti(const Globals& g, const std::string& file) {
  const CoxeterSystem sys = read_system_file(file);
  if (g.json) {
    ordered_json j = envelope();
    j["betti"] = betti(sys);
    print_json(j);
  } else {
    std::cout << betti(sys) << "\n";
  }
  return kExitOk;
}

int cmd_duplex(const Globals& g, const std::string& file, const std::string& m, const std::string& n,
               const std::string& out, bool verify) {
  const CoxeterSystem sys = read_system_file(file);
  const DuplexParams p{parse_label_option(m, "m"), parse_label_option(n, "n")};
  const CoxeterSystem d = duplex(sys, p);
  if (!out.empty() || !verify) emit_system(g, d, out);
  if (verify) {
    const HIndex h0 = hypergraph_index(sys, g.analysis());
    const HIndex h1 = hypergraph_index(d, g.analysis());
    if (g.json) {
      ordered_json j = envelope();
      j["h_input"] = json_out::h_value(h0);
      j["h_duplex"] = json_out::h_value(h1);
      j["equal"] = h0 == h1;
      print_json(j);
    } else {
      std::cout << "h(input) = " << h0.to_string() << "\nh(duplex) = " << h1.to_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_collapse(const Globals& g, const std::string& file, int threshold, const std::string& out) {
  emit_system(g, collapse_labels(read_system_file(file), threshold), out);
  return kExitOk;
}

int cmd_rh_check(const Globals& g, const std::string& file, const std::string& peripherals, bool extracted) {
  const CoxeterSystem sys = read_system_file(file);
  Classifier cls(sys);
  std::vector<GenSubset> family;
  if (extracted) {
    if (!peripherals.empty()) throw InputError("--peripherals and --extracted are exclusive");
    const auto p = peripheral_structure(lambda_sequence(cls, g.analysis()));
    if (!p) throw InputError("hypergraph index is finite; there is no peripheral structure to extract");
    family = *p;
  } else {
    family = parse_peripherals(sys, peripherals.empty() ? "[]" : peripherals);
  }
  const RhVerdict v = check_rh(cls, family, g.analysis());
  if (g.json) {
    ordered_json j = envelope();
    j["peripherals"] = json_out::subsets(sys, family);
    j["pass"] = v.pass();
    j["rh1"] = v.rh1;
    j["rh2"] = v.rh2;
    j["rh3"] = v.rh3;
    ordered_json viol = ordered_json::array();
    for (const auto& x : v.violations)
      viol.push_back({{"condition", x.condition}, {"witness", json_out::subsets(sys, x.witness)}, {"message", x.message}});
    j["violations"] = viol;
    print_json(j);
  } else {
    std::cout << (v.pass() ? "pass" : "fail") << "\n";
    for (const auto& x : v.violations) std::cout << "  " << x.condition << ": " << x.message << "\n";
  }
  return v.pass() ? kExitOk : kExitRh;
}

struct BatchRow {
  std::string file;
  std::optional<AnalysisReport> report;
  std::string error;
  int exit_code = 0;
};

int cmd_batch(const Globals& g, const std::string& dir, int jobs, const std::string& reports_dir) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: '" + dir + "'");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto ext = e.path().extension();
    if (e.is_regular_file() && (ext == ".cxs" || ext == ".json")) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  std::vector<BatchRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      BatchRow& row = rows[i];
      row.file = files[i].filename().string();
      try {
        row.report = analyze(read_system_file(files[i].string()), {g.analysis(), g.trace, false});
      } catch (const InputError& e) {
        row.error = e.what();
        row.exit_code = kExitInput;
      } catch (const RankCapError& e) {
        row.error = e.what();
        row.exit_code = kExitCap;
      } catch (const std::exception& e) {
        row.error = e.what();
        row.exit_code = kExitInput;
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (!reports_dir.empty()) {
    fs::create_directories(reports_dir);
    for (const auto& row : rows)
      if (row.report) write_text_file((fs::path(reports_dir) / (row.file + ".report.json")).string(), to_json(*row.report, g.trace).dump(2) + "\n");
  }

  if (g.json) {
    ordered_json j = envelope();
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r;
      r["file"] = row.file;
      if (row.report) {
        r["rank"] = row.report->system.rank();
        r["betti"] = row.report->betti;
        r["h"] = json_out::h_value(row.report->lambda.h);
        r["ends"] = json_out::ends_value(row.report->ends);
        r["classification"] = to_string(row.report->divergence.classification);
        r["error"] = nullptr;
      } else {
        r["error"] = row.error;
      }
      arr.push_back(r);
    }
    j["rows"] = arr;
    print_json(j);
  } else {
    std::cout << "file,rank,betti,h,ends,classification,error\n";
    for (const auto& row : rows) {
      std::cout << row.file << ",";
      if (row.report) {
        std::cout << row.report->system.rank() << "," << row.report->betti << "," << row.report->lambda.h.to_string() << ","
                  << to_string(row.report->ends) << "," << to_string(row.report->divergence.classification) << ",\n";
      } else {
        std::string msg = row.error;
        std::replace(msg.begin(), msg.end(), ',', ';');
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        std::cout << ",,,,," << msg << "\n";
      }
    }
  }
  const bool all_failed = !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const BatchRow& r) { return !r.report; });
  return all_failed ? rows.front().exit_code : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph index and related invariants of Coxeter systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON (schema coxhi/1)");
  app.add_flag("--trace", g.trace, "Include per-level class detail");
  app.add_option("--max-rank", g.max_rank, "Cap for exhaustive subset enumeration")->check(CLI::Range(0, kMaxRank));
  app.add_option("--seed", g.seed, "Seed for random families");

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report");
  bool timing = false;
  bool class_t = false;
  analyze_cmd->add_option("file", file, "CXS or JSON system")->required();
  analyze_cmd->add_flag("--timing", timing, "Append wall-clock time (breaks byte-identical output)");
  analyze_cmd->add_flag("--class-t", class_t, "Decide membership in class T (rank <= 12)");

  std::string subset_text;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a subset (default: all generators)");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--subset", subset_text, "Comma-separated names or 1-based indices");

  auto* hindex_cmd = app.add_subcommand("hindex", "Hypergraph index");
  hindex_cmd->add_option("file", file)->required();
  auto* ends_cmd = app.add_subcommand("ends", "Number of ends");
  ends_cmd->add_option("file", file)->required();
  auto* betti_cmd = app.add_subcommand("betti", "First Betti number of the Dynkin diagram");
  betti_cmd->add_option("file", file)->required();

  std::string out;
  std::string m_text = "2";
  std::string n_text = "inf";
  bool verify = false;
  auto* duplex_cmd = app.add_subcommand("duplex", "Duplex of a right-angled system");
  duplex_cmd->add_option("file", file)->required();
  duplex_cmd->add_option("--m", m_text, "Label between the two copies of a generator (>= 2)");
  duplex_cmd->add_option("--n", n_text, "Label replacing inf (>= 5 or inf)");
  duplex_cmd->add_option("-o,--output", out, "Output file (default stdout)");
  duplex_cmd->add_flag("--verify", verify, "Print the hypergraph index of input and output");

  int threshold = 7;
  auto* collapse_cmd = app.add_subcommand("collapse", "Cap finite labels at a threshold >= 7");
  collapse_cmd->add_option("file", file)->required();
  collapse_cmd->add_option("--threshold", threshold);
  collapse_cmd->add_option("-o,--output", out);

  auto* family_cmd = app.add_subcommand("family", "Emit a named or random system");
  family_cmd->require_subcommand(1);
  family_cmd->add_option("-o,--output", out);
  int d = 1;
  int n = 2;
  int rank = 5;
  double p = 0.5;
  std::string alphabet = "2,3,4,5,6,inf";
  std::string cat_name;
  auto* gamma_cmd = family_cmd->add_subcommand("gamma", "Right-angled family Gamma_d");
  gamma_cmd->add_option("--d", d)->required();
  auto* path_cmd = family_cmd->add_subcommand("path4", "Path with all labels 4");
  path_cmd->add_option("--n", n)->required();
  auto* cat_cmd = family_cmd->add_subcommand("catalog", "Built-in example");
  cat_cmd->add_option("name", cat_name)->required()->check(CLI::IsMember(catalog_names()));
  auto* random_cmd = family_cmd->add_subcommand("random", "Uniform labels from an alphabet");
  random_cmd->add_option("--rank", rank)->required();
  random_cmd->add_option("--alphabet", alphabet);
  auto* racg_cmd = family_cmd->add_subcommand("racg", "Random right-angled system");
  racg_cmd->add_option("--rank", rank)->required();
  racg_cmd->add_option("--p", p, "Probability that a pair commutes");
  auto* tree_cmd = family_cmd->add_subcommand("tree", "Random tree diagram");
  tree_cmd->add_option("--rank", rank)->required();
  tree_cmd->add_option("--alphabet", alphabet);

  std::string peripherals;
  bool extracted = false;
  auto* rh_cmd = app.add_subcommand("rh-check", "Check a peripheral family for relative hyperbolicity");
  rh_cmd->add_option("file", file)->required();
  rh_cmd->add_option("--peripherals", peripherals, "JSON array of arrays of names or 1-based indices");
  rh_cmd->add_flag("--extracted", extracted, "Use the peripheral structure read off the Lambda sequence");

  std::string dir;
  int jobs = 1;
  std::string reports_dir;
  auto* batch_cmd = app.add_subcommand("batch", "Analyze every .cxs/.json file in a directory");
  batch_cmd->add_option("dir", dir)->required();
  batch_cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 1024));
  batch_cmd->add_option("--reports", reports_dir, "Write one JSON report per file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(g, file, timing, class_t);
    if (*classify_cmd) return cmd_classify(g, file, subset_text);
    if (*hindex_cmd) return cmd_hindex(g, file);
    if (*ends_cmd) return cmd_ends(g, file);
    if (*betti_cmd) return cmd_betti(g, file);
    if (*duplex_cmd) return cmd_duplex(g, file, m_text, n_text, out, verify);
    if (*collapse_cmd) return cmd_collapse(g, file, threshold, out);
    if (*family_cmd) {
      CoxeterSystem sys = [&] {
        if (*gamma_cmd) return gamma_d(d);
        if (*path_cmd) return path4(n);
        if (*cat_cmd) return catalog(cat_name);
        if (*random_cmd) return random_system(rank, parse_alphabet(alphabet), g.seed);
        if (*racg_cmd) return random_racg(rank, p, g.seed);
        return random_tree(rank, parse_alphabet(alphabet), g.seed);
      }();
      emit_system(g, sys, out);
      return kExitOk;
    }
    if (*rh_cmd) return cmd_rh_check(g, file, peripherals, extracted);
    if (*batch_cmd) return cmd_batch(g, dir, jobs, reports_dir);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const RankCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
