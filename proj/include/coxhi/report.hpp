#pragma once

// Analysis report assembly, JSON serialization (schema "coxhi/1"), JSON system
// input and the plain-text Lambda layout.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxhi/classify.hpp"
#include "coxhi/core.hpp"
#include "coxhi/cxs.hpp"
#include "coxhi/hindex.hpp"

namespace coxhi {

inline constexpr const char* kSchema = "coxhi/1";

struct ReportOptions {
  AnalysisOptions analysis;
  bool trace = false;
  bool class_t = false;
};

struct AnalysisReport {
  CoxeterSystem system;
  Ends ends = Ends::Zero;
  int betti = 0;
  bool hyperbolic = false;
  LambdaAnalysis lambda;
  std::optional<CertificateNode> certificate;
  std::optional<std::vector<GenSubset>> peripherals;
  DivergenceReport divergence;
  std::optional<ClassTResult> class_t;
};

inline AnalysisReport analyze(const CoxeterSystem& sys, const ReportOptions& opt = {}) {
  require_rank_at_most(sys.rank(), opt.analysis.max_rank, "analysis");
  Classifier cls(sys);
  AnalysisReport r{sys, ends(cls, opt.analysis.max_rank), betti(sys), is_hyperbolic(cls, opt.analysis), {}, {}, {}, {}, {}};
  r.lambda = lambda_sequence(cls, opt.analysis);
  r.certificate = thickness_certificate(r.lambda);
  r.peripherals = peripheral_structure(r.lambda);
  r.divergence = divergence_report(r.lambda.h, r.ends);
  if (opt.class_t) r.class_t = in_class_T(cls);
  return r;
}

namespace json_out {

using nlohmann::ordered_json;

inline ordered_json subset(const CoxeterSystem& sys, GenSubset t) { return subset_names(sys, t); }

inline ordered_json subsets(const CoxeterSystem& sys, const std::vector<GenSubset>& ts) {
  ordered_json a = ordered_json::array();
  for (GenSubset t : ts) a.push_back(subset(sys, t));
  return a;
}

inline ordered_json h_value(HIndex h) { return h.is_finite() ? ordered_json(h.value()) : ordered_json("infinity"); }

inline ordered_json ends_value(Ends e) {
  switch (e) {
    case Ends::Zero: return 0;
    case Ends::One: return 1;
    case Ends::Two: return 2;
    case Ends::Infinite: return "infinity";
  }
  return nullptr;
}

inline ordered_json label_histogram(const CoxeterSystem& sys) {
  std::map<Label, int> counts;
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j) ++counts[sys.label(i, j)];
  ordered_json h = ordered_json::object();
  for (auto [l, c] : counts) h[l.to_string()] = c;
  return h;
}

inline ordered_json system_summary(const CoxeterSystem& sys) {
  ordered_json j;
  j["rank"] = sys.rank();
  j["names"] = sys.names();
  j["label_histogram"] = label_histogram(sys);
  return j;
}

inline std::string to_string(WideCase c) {
  return c == WideCase::BothNonspherical ? "both-nonspherical" : "affine-times-spherical";
}

inline ordered_json certificate(const CoxeterSystem& sys, const CertificateNode& n) {
  ordered_json j;
  j["level"] = n.level;
  j["set"] = subset(sys, n.set);
  j["children"] = ordered_json::array();
  for (const auto& c : n.children) j["children"].push_back(certificate(sys, c));
  return j;
}

inline ordered_json divergence(const DivergenceReport& d) {
  auto opt_int = [](const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  ordered_json j;
  j["one_ended"] = d.one_ended;
  j["classification"] = coxhi::to_string(d.classification);
  j["polynomial_degree_upper_bound"] = opt_int(d.polynomial_degree_bound);
  j["strongly_thick_order_at_most"] = opt_int(d.thickness_order_upper_bound);
  j["conjectural_exact_degree"] = opt_int(d.conjectural_exact_degree);
  j["relatively_hyperbolic"] = d.relatively_hyperbolic;
  return j;
}

inline ordered_json lambda_levels(const CoxeterSystem& sys, const LambdaAnalysis& la, bool trace) {
  ordered_json levels = ordered_json::array();
  for (std::size_t i = 0; i < la.levels.size(); ++i) {
    const LambdaLevel& lv = la.levels[i];
    ordered_json j;
    j["level"] = i;
    j["sets"] = subsets(sys, lv.sets);
    if (trace) {
      j["classes"] = lv.classes;
      if (i > 0) {
        ordered_json feeds = ordered_json::array();
        for (std::size_t k = 0; k < lv.sets.size(); ++k) feeds.push_back(la.parents(static_cast<int>(i), static_cast<int>(k)));
        j["fed_by"] = feeds;
      }
    }
    levels.push_back(j);
  }
  return levels;
}

inline ordered_json class_t(const CoxeterSystem& sys, const ClassTResult& r) {
  ordered_json j;
  j["member"] = r.member;
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.derivation) {
    ordered_json st;
    st["set"] = subset(sys, s.set);
    st["rule"] = coxhi::to_string(s.rule);
    if (s.rule == ClassTRule::AddVertex) {
      st["from"] = subset(sys, s.first);
      st["vertex"] = sys.name(s.vertex);
    } else if (s.rule != ClassTRule::IrreducibleAffine) {
      st["first"] = subset(sys, s.first);
      st["second"] = subset(sys, s.second);
    }
    steps.push_back(st);
  }
  j["derivation"] = steps;
  return j;
}

}  // namespace json_out

inline nlohmann::ordered_json to_json(const AnalysisReport& r, bool trace = false) {
  using json_out::ordered_json;
  const CoxeterSystem& sys = r.system;
  ordered_json j;
  j["schema"] = kSchema;
  j["system"] = json_out::system_summary(sys);
  j["ends"] = json_out::ends_value(r.ends);
  j["betti"] = r.betti;
  j["hyperbolic"] = r.hyperbolic;
  ordered_json omega = ordered_json::array();
  for (const auto& w : r.lambda.omega) {
    omega.push_back({{"subset", json_out::subset(sys, w.subset)},
                     {"a", json_out::subset(sys, w.a)},
                     {"b", json_out::subset(sys, w.b)},
                     {"case", json_out::to_string(w.kind)}});
  }
  j["omega"] = omega;
  ordered_json psi = ordered_json::array();
  for (const auto& s : r.lambda.psi) {
    psi.push_back({{"subset", json_out::subset(sys, s.subset)},
                   {"a", json_out::subset(sys, s.a)},
                   {"k", json_out::subset(sys, s.k)}});
  }
  j["psi"] = psi;
  j["lambda"] = json_out::lambda_levels(sys, r.lambda, trace);
  j["h"] = json_out::h_value(r.lambda.h);
  j["stabilized_at"] = r.lambda.stabilized_at ? ordered_json(*r.lambda.stabilized_at) : ordered_json(nullptr);
  j["thickness_certificate"] = r.certificate ? json_out::certificate(sys, *r.certificate) : ordered_json(nullptr);
  j["peripherals"] = r.peripherals ? json_out::subsets(sys, *r.peripherals) : ordered_json(nullptr);
  j["divergence"] = json_out::divergence(r.divergence);
  if (r.class_t) j["class_t"] = json_out::class_t(sys, *r.class_t);
  return j;
}

/// {"names": [...], "matrix": [[1, 3, "inf"], ...]}; names are optional.
inline CoxeterSystem parse_json_system(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw InputError("JSON system needs a \"matrix\" array");
  }
  const auto& rows = doc["matrix"];
  if (static_cast<int>(rows.size()) > kMaxRank) throw RankCapError(static_cast<int>(rows.size()), kMaxRank, "JSON input");
  std::vector<std::vector<Label>> mat;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<Label> r;
    for (const auto& e : row) {
      if (e.is_number_unsigned() && e.get<std::uint64_t>() <= 1000000) {
        r.emplace_back(static_cast<std::uint32_t>(e.get<std::uint64_t>()));
      } else if (e.is_string()) {
        r.push_back(Label::parse(e.get<std::string>()));
      } else {
        throw InputError("matrix entries must be positive integers or \"inf\"");
      }
    }
    mat.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    if (!doc["names"].is_array()) throw InputError("\"names\" must be an array of strings");
    for (const auto& n : doc["names"]) {
      if (!n.is_string()) throw InputError("\"names\" must be an array of strings");
      names.push_back(n.get<std::string>());
    }
  }
  return CoxeterSystem(std::move(mat), std::move(names));
}

inline nlohmann::ordered_json system_to_json(const CoxeterSystem& sys) {
  nlohmann::ordered_json j;
  j["names"] = sys.names();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < sys.rank(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < sys.rank(); ++k) {
      const Label l = sys.label(i, k);
      if (l.is_infinite()) row.push_back("inf");
      else row.push_back(l.value());
    }
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

/// CXS or JSON, chosen by the first non-blank character.
inline CoxeterSystem parse_system(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') return parse_json_system(text);
  return parse_cxs(text);
}

inline CoxeterSystem read_system_file(const std::string& path) { return parse_system(read_text_file(path)); }

/// Plain-text layout: one block per Lambda level, members named T1, T2, ... in
/// order of first appearance, each level's classes in brackets.
inline std::string format_lambda(const CoxeterSystem& sys, const LambdaAnalysis& la) {
  std::map<GenSubset, int> label;
  std::vector<GenSubset> order;
  auto name = [&](GenSubset t) {
    auto [it, inserted] = label.emplace(t, static_cast<int>(order.size()) + 1);
    if (inserted) order.push_back(t);
    return t == la.whole ? std::string("S") : "T" + std::to_string(it->second);
  };
  std::ostringstream out;
  for (const auto& w : la.omega) name(w.subset);
  for (const auto& s : la.psi) name(s.subset);

  out << "Wide subsets (Omega):\n";
  if (la.omega.empty()) out << "  (none)\n";
  for (const auto& w : la.omega) {
    out << "  " << name(w.subset) << " = " << format_subset(sys, w.a) << " x " << format_subset(sys, w.b) << "\n";
  }
  out << "Slab subsets (Psi):\n";
  if (la.psi.empty()) out << "  (none)\n";
  for (const auto& s : la.psi) {
    out << "  " << name(s.subset) << " = " << format_subset(sys, s.a) << " x " << format_subset(sys, s.k) << "\n";
  }
  for (std::size_t i = 0; i < la.levels.size(); ++i) {
    const LambdaLevel& lv = la.levels[i];
    out << "Lambda_" << i << ":";
    if (lv.sets.empty()) out << " (empty)";
    for (const auto& cls : lv.classes) {
      out << " [";
      for (std::size_t k = 0; k < cls.size(); ++k) out << (k ? " " : "") << name(lv.sets[cls[k]]);
      out << "]";
    }
    out << "\n";
  }
  out << "where\n";
  for (GenSubset t : order)
    if (t != la.whole) out << "  " << name(t) << " = " << format_subset(sys, t) << "\n";
  return out.str();
}

inline std::string format_certificate(const CoxeterSystem& sys, const CertificateNode& n, int depth = 0) {
  std::string out(2 * depth, ' ');
  out += "level " + std::to_string(n.level) + ": " + format_subset(sys, n.set) + "\n";
  for (const auto& c : n.children) out += format_certificate(sys, c, depth + 1);
  return out;
}

inline std::string to_text(const AnalysisReport& r) {
  const CoxeterSystem& sys = r.system;
  std::ostringstream out;
  out << "rank " << sys.rank() << ", betti " << r.betti << ", ends " << to_string(r.ends) << "\n";
  out << "hyperbolic: " << (r.hyperbolic ? "yes" : "no") << "\n";
  out << format_lambda(sys, r.lambda);
  out << "h = " << r.lambda.h.to_string();
  if (r.lambda.stabilized_at) out << " (level " << *r.lambda.stabilized_at << " repeats)";
  out << "\n";
  if (r.peripherals) {
    out << "peripheral subsets:";
    if (r.peripherals->empty()) out << " (none)";
    out << "\n";
    for (GenSubset p : *r.peripherals) out << "  " << format_subset(sys, p) << "\n";
  }
  if (r.certificate) out << "thickness certificate:\n" << format_certificate(sys, *r.certificate, 1);
  const DivergenceReport& d = r.divergence;
  out << "divergence: " << to_string(d.classification);
  if (d.polynomial_degree_bound) out << ", at most r^" << *d.polynomial_degree_bound;
  if (d.thickness_order_upper_bound) out << ", strongly thick of order <= " << *d.thickness_order_upper_bound;
  if (d.conjectural_exact_degree) out << ", conjecturally exactly r^" << *d.conjectural_exact_degree;
  out << "\n";
  if (r.class_t) out << "class T: " << (r.class_t->member ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace coxhi
