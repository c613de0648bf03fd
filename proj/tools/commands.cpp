#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "feec/face.hpp"
#include "feec/form_io.hpp"
#include "feec/verification.hpp"

namespace feec::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

std::string golden_name(Family family, int r, int k) {
  return std::string(family == Family::S ? "s" : "sminus") + "_r" + std::to_string(r) + "_k" + std::to_string(k) +
         ".txt";
}

std::string format_row(const VerificationReport& rep, const std::string& label, bool ok) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-24s %5zu %6zu %6zu %6zu  %-4s %9.1f ms", label.c_str(), rep.card_B, rep.rank_A,
                rep.rank_B, rep.rank_C, ok ? "pass" : "FAIL", rep.elapsed_ms);
  return buf;
}

}  // namespace

nlohmann::json basis_to_json(const AssociatedBasis& basis) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : basis.elements) {
    nlohmann::json constraints = nlohmann::json::array();
    for (const auto& c : e.face.constraints()) constraints.push_back({{"axis", c.axis + 1}, {"value", c.value}});
    elements.push_back({{"face", {{"constraints", constraints}}},
                        {"subspace", to_string(e.source.kind)},
                        {"grade", e.source.grade},
                        {"form", form_to_json(e.form)}});
  }
  return {{"family", to_string(basis.family.family)},
          {"n", basis.family.n},
          {"k", basis.family.k},
          {"r", basis.family.r},
          {"elements", elements}};
}

std::string render_basis(const AssociatedBasis& basis, const std::string& format) {
  std::ostringstream out;
  const int n = basis.family.n;
  const int k = basis.family.k;
  if (format == "text") {
    for (const auto& e : basis.elements) out << render_text(e.form) << "\n";
  } else if (format == "json") {
    out << basis_to_json(basis).dump(2) << "\n";
  } else if (format == "latex") {
    const auto cols = table_columns(n, k);
    out << "\\begin{tabular}{" << std::string(cols.size(), 'l') << "}\n";
    std::string header;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) header += " & ";
      header += "$" + alternator_name(cols[c], n) + "$";
    }
    out << header << " \\\\\n\\hline\n";
    for (const auto& e : basis.elements) out << render_latex_row(e.form) << "\n";
    out << "\\end{tabular}\n";
  } else if (format == "csv") {
    out << "face,subspace,grade";
    for (const auto& sigma : table_columns(n, k)) out << "," << alternator_name(sigma, n);
    out << "\n";
    for (const auto& e : basis.elements)
      out << "\"" << e.face.to_string() << "\"," << to_string(e.source.kind) << "," << e.source.grade << ","
          << render_csv_row(e.form) << "\n";
  } else {
    throw UsageError("unknown format \"" + format + "\" (expected text, json, latex or csv)");
  }
  return out.str();
}

SpanningSet read_candidate(const std::string& text, int n, int k) {
  SpanningSet s{n, k, {}, {}};
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("malformed candidate JSON: ") + e.what());
    }
    if (!doc.contains("elements") || !doc["elements"].is_array())
      throw UsageError("candidate JSON has no \"elements\" array");
    for (const auto& e : doc["elements"]) {
      DifferentialForm w = form_from_json(e.contains("form") ? e["form"] : e);
      if (w.ambient_dim() != n || w.order() != k) throw UsageError("candidate element has the wrong (n, k)");
      s.push(std::move(w), "candidate");
    }
    return s;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    s.push(parse_form(line, n, k), "candidate");
  }
  return s;
}

Face parse_face(const std::string& text, int n) {
  std::vector<FaceConstraint> cs;
  std::istringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ',')) {
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("face constraint \"" + part + "\" lacks '='");
    const std::string var = part.substr(0, eq);
    const std::string val = part.substr(eq + 1);
    int axis = -1;
    for (int i = 0; i < n; ++i)
      if (variable_name(i, n) == var) axis = i;
    if (axis < 0) throw UsageError("unknown variable \"" + var + "\" in face");
    if (val != "1" && val != "+1" && val != "-1") throw UsageError("face values must be 1 or -1");
    cs.push_back({axis, val == "-1" ? -1 : 1});
  }
  try {
    return Face(n, std::move(cs));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string golden_dir(const std::string& fallback) {
  if (const char* env = std::getenv("FEEC_GOLDEN_DIR"); env && *env) return env;
  return fallback;
}

int cmd_basis(const BasisOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    validate(opt.family);
    const std::string text = render_basis(assemble(opt.family), opt.format);
    if (opt.out)
      write_file(*opt.out, text);
    else
      out << text;
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    validate(opt.family);
    const FamilyId& id = opt.family;
    VerificationReport report;
    bool ok = false;
    std::string message;
    if (opt.candidate) {
      const SpanningSet candidate = read_candidate(read_file(*opt.candidate), id.n, id.k);
      report = verify_basis(candidate, standard_span(id));
      ok = report.pass;
      if (!ok) message = "rank test failed";
      for (std::size_t i = 0; ok && i < candidate.size(); ++i) {
        try {
          associate_face(candidate.elements[i]);
        } catch (const std::domain_error& e) {
          ok = false;
          message = "element " + std::to_string(i) + ": " + e.what();
        }
      }
    } else {
      const BasisCheck check = check_computational_basis(assemble(id));
      report = check.report;
      ok = check.ok;
      message = check.message;
    }
    report.family = to_string(id.family);
    report.r = id.r;
    report.pass = ok;
    out << to_json(report).dump() << "\n";
    if (!ok) {
      err << "verification failed for " << to_string(id) << ": " << message << "\n";
      return kVerifyFailed;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
}

int cmd_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.scope != "quick" && opt.scope != "full") {
    err << "error: scope must be quick or full\n";
    return kUsage;
  }
  const bool full = opt.scope == "full";
  int failures = 0;
  int cases = 0;
  out << "case                      card rank_A rank_B rank_C  verdict   elapsed\n";
  for (Family family : {Family::Q_minus, Family::S, Family::S_minus})
    for (int n : {2, 3})
      for (int k = 0; k <= n; ++k) {
        const int max_r = full ? (n == 3 ? 4 : 6) : 2;
        for (int r = 1; r <= max_r; ++r) {
          const FamilyId id{family, r, k, n};
          const BasisCheck check = check_computational_basis(assemble(id));
          ++cases;
          if (!check.ok) ++failures;
          out << format_row(check.report, to_string(id), check.ok) << "\n";
          if (!check.ok) out << "    " << check.message << "\n";
        }
      }
  out << cases << " verifications, " << failures << " failed\n";

  if (full) {
    int golden_failures = 0;
    const std::string dir = opt.golden_dir;
    for (Family family : {Family::S, Family::S_minus})
      for (int r = 1; r <= 3; ++r)
        for (int k = 0; k <= 2; ++k) {
          const std::string name = golden_name(family, r, k);
          const AssociatedBasis basis = assemble({family, r, k, 3});
          const std::string rendered = render_basis(basis, "text");
          std::string status;
          try {
            std::set<DifferentialForm> expected;
            std::istringstream lines(read_file(dir + "/reference/" + name));
            std::string line;
            std::size_t rows = 0;
            while (std::getline(lines, line)) {
              if (line.empty()) continue;
              ++rows;
              expected.insert(parse_form(line, 3, k));
            }
            std::set<DifferentialForm> got;
            for (const auto& e : basis.elements) got.insert(e.form);
            const bool sets_equal = got == expected && rows == basis.elements.size();
            bool text_equal = true;
            if (opt.regenerate) {
              std::filesystem::create_directories(dir + "/rendered");
              write_file(dir + "/rendered/" + name, rendered);
            } else {
              text_equal = read_file(dir + "/rendered/" + name) == rendered;
            }
            status = sets_equal && text_equal ? "pass" : (!sets_equal ? "FAIL (reference set)" : "FAIL (rendered text)");
          } catch (const IoError& e) {
            status = std::string("FAIL (") + e.what() + ")";
          }
          if (status != "pass") ++golden_failures;
          out << "golden " << name << " " << basis.elements.size() << " elements " << status << "\n";
        }
    out << "18 golden lists, " << golden_failures << " failed\n";
    failures += golden_failures;
  }
  return failures == 0 ? kOk : kVerifyFailed;
}

int cmd_op(const OpOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (opt.format != "text" && opt.format != "json") throw UsageError("op output format must be text or json");
    DifferentialForm w(1, 0);
    if (opt.expression && opt.json_path) throw UsageError("give either --form or --json, not both");
    if (opt.expression) {
      w = parse_form(*opt.expression, opt.n, opt.k);
    } else if (opt.json_path) {
      std::string text;
      if (*opt.json_path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      } else {
        text = read_file(*opt.json_path);
      }
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
      }
      w = form_from_json(doc);
    } else {
      throw UsageError("op needs an input form (--form or --json)");
    }
    std::istringstream chain(opt.ops);
    std::string op;
    while (std::getline(chain, op, ',')) {
      if (op == "d") {
        w = exterior_derivative(w);
      } else if (op == "kappa") {
        w = koszul(w);
      } else if (op == "trace") {
        if (!opt.face) throw UsageError("trace needs --face");
        w = trace(w, parse_face(*opt.face, w.ambient_dim()));
      } else {
        throw UsageError("unknown operation \"" + op + "\" (expected d, kappa or trace)");
      }
    }
    if (opt.format == "json")
      out << form_to_json(w).dump() << "\n";
    else
      out << render_text(w) << "\n";
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace feec::cli
