#include "selfdual/workbench.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace selfdual {

using json = nlohmann::ordered_json;

InputError::InputError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                         ": " + what),
      line_(line),
      column_(column) {}

Matrix parse_relation_file(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string_view::npos || line[pos] == '#') continue;

    std::vector<Rational> row;
    while (pos != std::string_view::npos) {
      const std::size_t stop = std::min(line.find_first_of(" \t", pos), line.size());
      if (row.size() == static_cast<std::size_t>(kArity3Dim)) {
        throw InputError("more than 12 tokens in row", line_no, pos + 1);
      }
      try {
        row.push_back(parse_rational(line.substr(pos, stop - pos)));
      } catch (const ParseError& e) {
        throw InputError(e.what(), line_no, pos + e.column());
      }
      pos = line.find_first_not_of(" \t", stop);
    }
    if (row.size() != static_cast<std::size_t>(kArity3Dim)) {
      throw InputError("expected 12 tokens, found " + std::to_string(row.size()), line_no, line.size() + 1);
    }
    if (rows.size() == static_cast<std::size_t>(kArity3Dim)) {
      throw InputError("more than 12 rows", line_no, 1);
    }
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  if (rows.empty()) throw InputError("no rows given");

  Matrix m(static_cast<Eigen::Index>(rows.size()), kArity3Dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

Matrix read_relation_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_relation_file(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_rows(const Matrix& rows) {
  std::string out;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    for (Eigen::Index j = 0; j < rows.cols(); ++j) {
      if (j > 0) out += ' ';
      out += to_string(rows(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

Report make_report(const RelationSpace& u) {
  Report r;
  r.space = u;
  r.invariant = is_invariant(u);
  if (r.invariant) {
    const IsotypicDecomposition d = decompose(u);
    r.multiplicities = {d.m_plus, d.m_minus, d.m_two};
  }
  r.certificate = classify_selfdual(u);
  return r;
}

namespace {

json scalars(const auto& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

json to_json(const Report& r) {
  const Certificate& c = r.certificate;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = r.space.dim();
  j["invariant"] = r.invariant;
  if (r.invariant) {
    j["multiplicities"] = {{"plus", r.multiplicities[0]}, {"minus", r.multiplicities[1]}, {"two", r.multiplicities[2]}};
  } else {
    j["multiplicities"] = nullptr;
  }
  j["repr_type"] = to_string(c.repr.tag);
  j["self_dual"] = c.self_dual;
  json classes = json::array();
  for (auto label : c.classes) classes.push_back(to_string(label));
  j["classes"] = classes;
  j["plucker"] = c.plucker ? scalars(c.plucker->coords()) : json(nullptr);
  j["segre"] = c.segre ? scalars(c.segre->coords()) : json(nullptr);
  j["witness"] = c.witness ? json{{"a", to_string(c.witness->a)}, {"b", to_string(c.witness->b)}} : json(nullptr);
  j["verified"] = c.verified;
  j["reason"] = c.self_dual ? json(nullptr) : json(c.reason);
  json basis = json::array();
  for (Eigen::Index i = 0; i < r.space.dim(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < kArity3Dim; ++k) row.push_back(to_string(r.space.basis()(i, k)));
    basis.push_back(row);
  }
  j["basis"] = basis;
  return j;
}

std::string joined(const auto& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    out += to_string(v);
  }
  return out;
}

std::string render_text(const Report& r) {
  const Certificate& c = r.certificate;
  std::ostringstream out;
  out << "schema_version " << kSchemaVersion << '\n';
  out << "dim " << r.space.dim() << '\n';
  out << "invariant " << (r.invariant ? "true" : "false") << '\n';
  if (r.invariant) {
    out << "multiplicities " << r.multiplicities[0] << ' ' << r.multiplicities[1] << ' ' << r.multiplicities[2]
        << '\n';
  } else {
    out << "multiplicities -\n";
  }
  out << "repr_type " << to_string(c.repr.tag) << '\n';
  out << "self_dual " << (c.self_dual ? "true" : "false") << '\n';
  out << "classes" << (c.classes.empty() ? " -" : "");
  for (auto label : c.classes) out << ' ' << to_string(label);
  out << '\n';
  out << "plucker " << (c.plucker ? joined(c.plucker->coords()) : "-") << '\n';
  out << "segre " << (c.segre ? joined(c.segre->coords()) : "-") << '\n';
  out << "witness " << (c.witness ? to_string(c.witness->a) + " " + to_string(c.witness->b) : "-") << '\n';
  out << "verified " << (c.verified ? "true" : "false") << '\n';
  out << "reason " << (c.self_dual ? "-" : c.reason) << '\n';
  out << "basis\n" << format_rows(r.space.basis());
  return out.str();
}

}  // namespace

std::string render(const Report& report, Format format) {
  if (format == Format::structured) return to_json(report).dump(2) + "\n";
  return render_text(report);
}

Matrix report_basis(std::string_view rendered) {
  const std::size_t first = rendered.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("empty report");
  if (rendered[first] == '{') {
    json j;
    try {
      j = json::parse(rendered);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed structured report: ") + e.what());
    }
    if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion) {
      throw InputError("unsupported report schema version");
    }
    if (!j.contains("basis") || !j["basis"].is_array()) throw InputError("report has no basis");
    std::string rows;
    for (const auto& row : j["basis"]) {
      for (const auto& token : row) rows += token.get<std::string>() + " ";
      rows += "\n";
    }
    return parse_relation_file(rows);
  }
  const std::size_t at = rendered.find("\nbasis\n");
  if (at == std::string_view::npos) throw InputError("report has no basis section");
  return parse_relation_file(rendered.substr(at + 7));
}

}  // namespace selfdual
