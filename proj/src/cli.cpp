#include "selfdual/identities.hpp"
#include "selfdual/varieties.hpp"
#include "selfdual/workbench.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace selfdual {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

enum Exit { kSelfDual = 0, kNotSelfDual = 1, kInvalid = 2, kInternal = 3 };

struct Options {
  std::string file;
  std::string preset;
  std::string identities;
  std::string out;
  std::string batch;
  std::string format = "text";
  bool closure = false;
  bool corrupt_sigma = false;
};

Format format_of(const Options& o) { return o.format == "structured" ? Format::structured : Format::text; }

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_atomically(o.out, text);
  }
}

Matrix input_rows(const Options& o) {
  if (!o.preset.empty() && !o.file.empty()) throw InputError("give either a file or --preset, not both");
  if (!o.preset.empty()) {
    try {
      return preset(o.preset).space.basis();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (o.file.empty()) throw InputError("no input: give a relation file or --preset NAME");
  return read_relation_file(o.file);
}

// The S3-submodule named by the rows; exit 2 unless it is invariant or closed.
RelationSpace input_space(const Options& o, const Matrix& rows) {
  if (o.closure) return s3_closure(rows);
  RelationSpace u(rows);
  if (auto g = invariance_violation(u)) {
    throw InputError("not S3-invariant: the row space is moved by " + g->to_string() +
                     " (use --closure to classify the generated submodule)");
  }
  return u;
}

int classify_one(const Options& o, const Matrix& rows, std::string& rendered) {
  const Report r = make_report(input_space(o, rows));
  rendered = render(r, format_of(o));
  return r.certificate.self_dual ? kSelfDual : kNotSelfDual;
}

int run_batch(const Options& o, std::ostream& out, std::ostream& err) {
  const fs::path dir(o.batch);
  if (!fs::is_directory(dir)) throw InputError("--batch: '" + o.batch + "' is not a directory");
  const fs::path target = o.out.empty() ? dir / "reports" : fs::path(o.out);
  fs::create_directories(target);

  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) inputs.push_back(entry.path());
  std::sort(inputs.begin(), inputs.end());

  int worst = kSelfDual;
  const std::string ext = format_of(o) == Format::structured ? ".json" : ".report";
  for (const auto& path : inputs) {
    std::string rendered;
    int code = kInvalid;
    try {
      code = classify_one(o, read_relation_file(path), rendered);
      write_atomically(target / (path.filename().string() + ext), rendered);
      out << path.filename().string() << ": " << (code == kSelfDual ? "self-dual" : "not self-dual") << '\n';
    } catch (const InternalInconsistency& e) {
      err << path.filename().string() << ": internal inconsistency\n" << e.what();
      code = kInternal;
    } catch (const std::exception& e) {
      err << path.filename().string() << ": " << e.what() << '\n';
      out << path.filename().string() << ": invalid\n";
    }
    worst = std::max(worst, code);
  }
  return worst;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.batch.empty()) {
    if (!o.file.empty() || !o.preset.empty()) throw InputError("--batch takes no other input");
    return run_batch(o, out, err);
  }
  std::string rendered;
  const int code = classify_one(o, input_rows(o), rendered);
  emit(o, rendered, out);
  return code;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const RelationSpace perp = koszul_complement(RelationSpace(input_rows(o)));
  if (format_of(o) == Format::structured) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["dim"] = perp.dim();
    json basis = json::array();
    for (Eigen::Index i = 0; i < perp.dim(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < kArity3Dim; ++k) row.push_back(to_string(perp.basis()(i, k)));
      basis.push_back(row);
    }
    j["basis"] = basis;
    emit(o, j.dump(2) + "\n", out);
  } else {
    emit(o, "# U-perp in the basis f1..f12, dim " + std::to_string(perp.dim()) + "\n" + format_rows(perp.basis()),
         out);
  }
  return kSelfDual;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const RelationSpace u = input_space(o, input_rows(o));
  const IsotypicDecomposition d = decompose(u);
  const ReprType t = repr_type(d);
  const std::array<const RelationSpace*, 3> comps{&d.comp_plus, &d.comp_minus, &d.comp_two};
  const std::array<const char*, 3> names{"plus", "minus", "two"};
  if (format_of(o) == Format::structured) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["dim"] = u.dim();
    j["multiplicities"] = {{"plus", d.m_plus}, {"minus", d.m_minus}, {"two", d.m_two}};
    j["repr_type"] = to_string(t.tag);
    json components;
    for (std::size_t k = 0; k < 3; ++k) {
      json rows = json::array();
      for (Eigen::Index i = 0; i < comps[k]->dim(); ++i) {
        json row = json::array();
        for (Eigen::Index c = 0; c < kArity3Dim; ++c) row.push_back(to_string(comps[k]->basis()(i, c)));
        rows.push_back(row);
      }
      components[names[k]] = rows;
    }
    j["components"] = components;
    emit(o, j.dump(2) + "\n", out);
    return kSelfDual;
  }
  std::string text = "dim " + std::to_string(u.dim()) + "\nmultiplicities " + std::to_string(d.m_plus) + " " +
                     std::to_string(d.m_minus) + " " + std::to_string(d.m_two) + "\nrepr_type " + to_string(t.tag) +
                     "\n";
  for (std::size_t k = 0; k < 3; ++k) {
    text += std::string("component ") + names[k] + " dim " + std::to_string(comps[k]->dim()) + "\n";
    text += format_rows(comps[k]->basis());
  }
  emit(o, text, out);
  return kSelfDual;
}

int cmd_encode(const Options& o, std::ostream& out) {
  std::vector<IdentitySpec> ids;
  if (!o.preset.empty()) {
    if (!o.identities.empty()) throw InputError("give either identities or --preset, not both");
    try {
      ids = preset(o.preset).identities;
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  } else {
    if (o.identities.empty()) throw InputError("no identities given");
    try {
      ids = parse_identities(o.identities);
    } catch (const ParseError& e) {
      throw InputError(e.what(), 1, e.column());
    }
  }
  RelationSpace u;
  try {
    u = encode(ids);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::string text;
  for (const auto& id : ids) text += "# " + id.to_string() + "\n";
  text += "# S3-submodule of dim " + std::to_string(u.dim()) + "\n" + format_rows(u.basis());
  emit(o, text, out);
  return kSelfDual;
}

int cmd_presets(std::ostream& out) {
  for (const auto& name : preset_names()) {
    const Preset p = preset(name);
    out << name << ": " << p.description << '\n';
    for (const auto& id : p.identities) out << "  " << id.to_string() << " = 0\n";
  }
  return kSelfDual;
}

int cmd_verify_paper(const Options& o, std::ostream& out) {
  Matrix sig = sigma();
  if (o.corrupt_sigma) sig(1, 1) = -sig(1, 1);
  const auto results = run_claims(sig);
  std::size_t passed = 0;
  std::vector<std::string> failing;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.statement;
    if (!r.detail.empty()) out << " [" << r.detail << "]";
    out << '\n';
    if (r.passed) {
      ++passed;
    } else {
      failing.push_back(r.id);
    }
  }
  out << passed << "/" << results.size() << " claims passed\n";
  if (failing.empty()) return kSelfDual;
  out << "failing:";
  for (const auto& id : failing) out << ' ' << id;
  out << '\n';
  return kNotSelfDual;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Koszul self-duality workbench for binary quadratic operads with dim V(2) = 2"};
  app.name("selfdual");
  app.require_subcommand(1, 1);
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text or structured (JSON)")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  auto* classify = app.add_subcommand("classify", "decide self-duality of a relation space");
  classify->add_option("file", o.file, "relation file");
  classify->add_option("--preset", o.preset, "novikov, associative or poisson");
  classify->add_flag("--closure", o.closure, "classify the S3-submodule generated by the rows");
  classify->add_option("--out", o.out, "write the report here (directory for --batch)");
  classify->add_option("--batch", o.batch, "classify every file in a directory");
  add_format(classify);

  auto* dual = app.add_subcommand("dual", "canonical basis of U-perp");
  dual->add_option("file", o.file, "relation file");
  dual->add_option("--preset", o.preset, "preset name");
  dual->add_option("--out", o.out, "output path");
  add_format(dual);

  auto* decompose_cmd = app.add_subcommand("decompose", "isotypic decomposition");
  decompose_cmd->add_option("file", o.file, "relation file");
  decompose_cmd->add_option("--preset", o.preset, "preset name");
  decompose_cmd->add_flag("--closure", o.closure, "decompose the generated S3-submodule");
  decompose_cmd->add_option("--out", o.out, "output path");
  add_format(decompose_cmd);

  auto* encode_cmd = app.add_subcommand("encode", "relation rows of the S3-submodule generated by identities");
  encode_cmd->add_option("identities", o.identities, "e.g. \"(x1 x2)x3 - x1(x2 x3)\"");
  encode_cmd->add_option("--preset", o.preset, "preset name");
  encode_cmd->add_option("--out", o.out, "output path");

  auto* verify = app.add_subcommand("verify-paper", "replay the claim catalog");
  verify->add_flag("--corrupt-sigma", o.corrupt_sigma, "flip one entry of Sigma (self-test)")->group("");

  app.add_subcommand("presets", "list compiled-in presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSelfDual : kInvalid;
  }

  try {
    if (classify->parsed()) return cmd_classify(o, out, err);
    if (dual->parsed()) return cmd_dual(o, out);
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (encode_cmd->parsed()) return cmd_encode(o, out);
    if (verify->parsed()) return cmd_verify_paper(o, out);
    return cmd_presets(out);
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what();
    return kInternal;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ParseError& e) {
    err << "error: column " << e.column() << ": " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace selfdual
