#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "feec/assembly.hpp"

namespace feec::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BasisOptions {
  FamilyId family;
  std::string format = "text";  // text | json | latex | csv
  std::optional<std::string> out;
};

struct VerifyOptions {
  FamilyId family;
  std::optional<std::string> candidate;  // JSON basis file or one expression per line
};

struct SelftestOptions {
  std::string scope = "quick";  // quick | full
  std::string golden_dir;
  bool regenerate = false;  // rewrite rendered golden files instead of comparing
};

struct OpOptions {
  std::string ops;  // comma-separated: d, kappa, trace
  std::optional<std::string> face;  // "x=1,y=-1"
  std::optional<std::string> expression;
  std::optional<std::string> json_path;  // "-" for stdin
  int n = 3;
  std::optional<int> k;
  std::string format = "text";  // text | json
};

nlohmann::json basis_to_json(const AssociatedBasis& basis);
std::string render_basis(const AssociatedBasis& basis, const std::string& format);
/// Parses a candidate list: a basis JSON document, or one expression per line.
SpanningSet read_candidate(const std::string& text, int n, int k);
Face parse_face(const std::string& text, int n);
/// Golden directory: FEEC_GOLDEN_DIR if set, else the given fallback.
std::string golden_dir(const std::string& fallback);

int cmd_basis(const BasisOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err);
int cmd_op(const OpOptions& opt, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace feec::cli
