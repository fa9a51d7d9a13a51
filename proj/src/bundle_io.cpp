#include "minusplit/bundle_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace minusplit {

using nlohmann::ordered_json;

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(const std::string& text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Offsets of string tokens in the text, split into object keys and values;
// both lists are in document order.
struct Tokens {
  std::vector<std::size_t> keys;
  std::vector<std::size_t> values;
};

Tokens scan_strings(const std::string& text) {
  Tokens t;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '"') {
      ++i;
      continue;
    }
    const std::size_t start = i++;
    while (i < text.size() && text[i] != '"') i += text[i] == '\\' ? 2 : 1;
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    (j < text.size() && text[j] == ':' ? t.keys : t.values).push_back(start);
  }
  return t;
}

// Maps JSON pointers to the offset of their value (strings) or key token.
class Locator {
 public:
  Locator(const std::string& text, const ordered_json& doc) : text_(text), tokens_(scan_strings(text)) {
    walk(doc, "");
  }

  Position at(const std::string& pointer) const {
    std::string p = pointer;
    while (true) {
      if (auto it = value_.find(p); it != value_.end()) return position_of(text_, it->second);
      if (auto it = key_.find(p); it != key_.end()) return position_of(text_, it->second);
      if (p.empty()) return {};
      p = p.substr(0, p.rfind('/'));
    }
  }

  // Offset of the first character inside a string value.
  std::optional<std::size_t> string_start(const std::string& pointer) const {
    auto it = value_.find(pointer);
    if (it == value_.end()) return std::nullopt;
    return it->second + 1;
  }

  const std::string& text() const { return text_; }

 private:
  void walk(const ordered_json& j, const std::string& pointer) {
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string child = pointer + "/" + it.key();
        if (next_key_ < tokens_.keys.size()) key_[child] = tokens_.keys[next_key_++];
        walk(it.value(), child);
      }
    } else if (j.is_array()) {
      for (std::size_t k = 0; k < j.size(); ++k) walk(j[k], pointer + "/" + std::to_string(k));
    } else if (j.is_string()) {
      if (next_value_ < tokens_.values.size()) value_[pointer] = tokens_.values[next_value_++];
    }
  }

  const std::string& text_;
  Tokens tokens_;
  std::size_t next_key_ = 0;
  std::size_t next_value_ = 0;
  std::map<std::string, std::size_t> key_;
  std::map<std::string, std::size_t> value_;
};

[[noreturn]] void fail(const Locator& loc, const std::string& pointer, const std::string& message) {
  const Position p = loc.at(pointer);
  throw BundleFileError(pointer, p.line, p.column, message);
}

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const Position p = position_of(text, offset);
    std::string what = e.what();
    if (auto k = what.find("parse error"); k != std::string::npos) what = what.substr(k);
    throw BundleFileError("", p.line, p.column, "invalid JSON: " + what);
  }
}

void only_keys(const Locator& loc, const ordered_json& obj, const std::string& pointer,
               std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(loc, pointer + "/" + it.key(), "unexpected field '" + it.key() + "'");
  }
}

const ordered_json& field(const Locator& loc, const ordered_json& obj, const std::string& pointer, const char* name) {
  if (!obj.contains(name)) fail(loc, pointer, std::string("missing field '") + name + "'");
  return obj.at(name);
}

std::vector<int> twist_list(const Locator& loc, const ordered_json& j, const std::string& pointer) {
  if (!j.is_array()) fail(loc, pointer, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) fail(loc, pointer + "/" + std::to_string(k), "expected an integer twist");
    out.push_back(j[k].get<int>());
  }
  return out;
}

PolyMatrix poly_matrix(const Locator& loc, const ordered_json& j, const std::string& pointer, int nvars,
                       const std::vector<int>& source, const std::vector<int>& target) {
  if (!j.is_array()) fail(loc, pointer, "expected an array of rows");
  if (j.size() != target.size())
    fail(loc, pointer,
         "expected " + std::to_string(target.size()) + " rows (one per target twist), found " + std::to_string(j.size()));
  PolyMatrix m(nvars, source, target);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = pointer + "/" + std::to_string(r);
    if (!j[r].is_array()) fail(loc, rp, "expected a row of polynomial strings");
    if (j[r].size() != source.size())
      fail(loc, rp,
           "expected " + std::to_string(source.size()) + " entries (one per source twist), found " +
               std::to_string(j[r].size()));
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      const std::string ep = rp + "/" + std::to_string(c);
      if (!j[r][c].is_string()) fail(loc, ep, "expected a polynomial string");
      const std::string s = j[r][c].get<std::string>();
      Polynomial p(nvars);
      try {
        p = Polynomial::parse(s, nvars);
      } catch (const PolynomialParseError& e) {
        const auto start = loc.string_start(ep);
        const Position pos = start ? position_of(loc.text(), *start + e.column() - 1) : loc.at(ep);
        throw BundleFileError(ep, pos.line, pos.column, std::string("bad polynomial: ") + e.what());
      }
      try {
        m.set(static_cast<Index>(r), static_cast<Index>(c), std::move(p));
      } catch (const std::invalid_argument& e) {
        fail(loc, ep, e.what());
      }
    }
  }
  return m;
}

FreeComplex bundle_from(const Locator& loc, const ordered_json& j, const std::string& pointer) {
  if (!j.is_object()) fail(loc, pointer, "expected a bundle object");
  only_keys(loc, j, pointer, {"variables", "kind", "source_twists", "target_twists", "matrix", "description"});
  const ordered_json& vars = field(loc, j, pointer, "variables");
  if (!vars.is_number_integer() || (vars.get<int>() != 2 && vars.get<int>() != 3))
    fail(loc, pointer + "/variables", "variables must be 2 or 3");
  const int nvars = vars.get<int>();
  const ordered_json& kind = field(loc, j, pointer, "kind");
  if (!kind.is_string() || (kind != "kernel" && kind != "cokernel"))
    fail(loc, pointer + "/kind", "kind must be \"kernel\" or \"cokernel\"");
  if (j.contains("description") && !j["description"].is_string())
    fail(loc, pointer + "/description", "description must be a string");
  const auto source = twist_list(loc, field(loc, j, pointer, "source_twists"), pointer + "/source_twists");
  const auto target = twist_list(loc, field(loc, j, pointer, "target_twists"), pointer + "/target_twists");
  PolyMatrix m = poly_matrix(loc, field(loc, j, pointer, "matrix"), pointer + "/matrix", nvars, source, target);
  return kind == "kernel" ? kernel_presentation(std::move(m)) : cokernel_presentation(std::move(m));
}

ordered_json matrix_json(const PolyMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

BundleFileError::BundleFileError(std::string path, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "line " << line << ", column " << column;
        if (!path.empty()) os << " (" << path << ")";
        os << ": " << message;
        return os.str();
      }()),
      path_(std::move(path)),
      line_(line),
      column_(column),
      message_(message) {}

FreeComplex parse_bundle(const std::string& text) {
  const ordered_json doc = parse_document(text);
  const Locator loc(text, doc);
  return bundle_from(loc, doc, "");
}

WedgeBundle parse_wedge(const std::string& text) {
  const ordered_json doc = parse_document(text);
  const Locator loc(text, doc);
  if (!doc.is_object()) fail(loc, "", "expected a wedge object");
  only_keys(loc, doc, "", {"left", "right", "gluing", "description"});
  WedgeBundle w;
  w.left = bundle_from(loc, field(loc, doc, "", "left"), "/left");
  w.right = bundle_from(loc, field(loc, doc, "", "right"), "/right");
  if (w.left.nvars != 3 || w.right.nvars != 3) fail(loc, "", "wedge components must be bundles on P^2 (3 variables)");
  w.gluing = poly_matrix(loc, field(loc, doc, "", "gluing"), "/gluing", 2, w.left.degree_zero_term().twists,
                         w.right.degree_zero_term().twists);
  return w;
}

ordered_json bundle_to_json(const FreeComplex& c) {
  if (c.kind == PresentationKind::Monad) throw std::invalid_argument("bundle files hold kernel or cokernel presentations");
  ordered_json j;
  j["variables"] = c.nvars;
  j["kind"] = to_string(c.kind);
  j["source_twists"] = c.maps.at(0).source_twists();
  j["target_twists"] = c.maps.at(0).target_twists();
  j["matrix"] = matrix_json(c.maps.at(0));
  return j;
}

ordered_json wedge_to_json(const WedgeBundle& w) {
  ordered_json j;
  j["left"] = bundle_to_json(w.left);
  j["right"] = bundle_to_json(w.right);
  j["gluing"] = matrix_json(w.gluing);
  return j;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FreeComplex load_bundle(const std::filesystem::path& path) { return parse_bundle(read_text_file(path)); }
WedgeBundle load_wedge(const std::filesystem::path& path) { return parse_wedge(read_text_file(path)); }

}  // namespace minusplit
