#include "nalen/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace nalen {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

[[noreturn]] void fail_at(ErrorCode code, std::size_t line, const std::string& msg) {
  fail(code, "line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_count(const std::string& t, std::size_t line, const char* what) {
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 18)
    fail_at(ErrorCode::parse_error, line, std::string("malformed ") + what + " '" + t + "'");
  return std::stoull(t);
}

// rethrows any library error with the line attached
template <class F>
auto at_line(std::size_t line, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (std::string(e.what()).rfind("line ", 0) == 0) throw;
    fail_at(e.code(), line, e.what());
  }
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  std::optional<FieldSpec> field;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> unital_line;
  std::optional<Element> unity;
  bool unital_seen = false;
  std::vector<std::string> labels;
  bool labels_seen = false;
  std::vector<StructureConstant> entries;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;

  auto need_header = [&](std::size_t line, const std::string& directive) {
    if (!field || !dim) fail_at(ErrorCode::parse_error, line, "'" + directive + "' before field and dim");
  };
  auto index = [&](const std::string& t, std::size_t line) {
    std::uint64_t v = parse_count(t, line, "index");
    if (v < 1 || v > *dim)
      fail_at(ErrorCode::index_out_of_range, line, "index " + t + " outside [1, " + std::to_string(*dim) + "]");
    return static_cast<std::size_t>(v - 1);
  };

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto t = tokens(strip_comment(raw));
    if (t.empty()) continue;
    const std::string& d = t[0];
    if (d == "field") {
      if (field) fail_at(ErrorCode::parse_error, line_no, "duplicate field line");
      if (t.size() == 2 && t[1] == "rational") {
        field = FieldSpec::rationals();
      } else if (t.size() == 3 && t[1] == "gf") {
        std::uint64_t p = parse_count(t[2], line_no, "modulus");
        if (!is_prime_number(p)) fail_at(ErrorCode::parse_error, line_no, "modulus " + t[2] + " is not prime");
        field = at_line(line_no, [&] { return FieldSpec::prime(p); });
      } else {
        fail_at(ErrorCode::parse_error, line_no, "expected 'field rational' or 'field gf <p>'");
      }
    } else if (d == "dim") {
      if (dim) fail_at(ErrorCode::parse_error, line_no, "duplicate dim line");
      if (t.size() != 2) fail_at(ErrorCode::parse_error, line_no, "expected 'dim <n>'");
      std::uint64_t n = parse_count(t[1], line_no, "dimension");
      if (n < 1 || n > 4096) fail_at(ErrorCode::parse_error, line_no, "dimension must lie in [1, 4096]");
      dim = n;
    } else if (d == "unital") {
      need_header(line_no, d);
      if (unital_seen) fail_at(ErrorCode::parse_error, line_no, "duplicate unital line");
      unital_seen = true;
      unital_line = line_no;
      if (t.size() == 2 && t[1] == "none") {
      } else if (t.size() == 2) {
        unity = Element::basis(*field, *dim, index(t[1], line_no));
      } else if (t.size() >= 2 && t[1] == "vector") {
        if (t.size() != *dim + 2)
          fail_at(ErrorCode::parse_error, line_no, "unital vector needs " + std::to_string(*dim) + " coordinates");
        Element e(*field, *dim);
        for (std::size_t i = 0; i < *dim; ++i) e[i] = at_line(line_no, [&] { return parse_scalar(t[i + 2], *field); });
        unity = e;
      } else {
        fail_at(ErrorCode::parse_error, line_no, "expected 'unital <i>', 'unital none' or 'unital vector ...'");
      }
    } else if (d == "labels") {
      need_header(line_no, d);
      if (labels_seen) fail_at(ErrorCode::parse_error, line_no, "duplicate labels line");
      labels_seen = true;
      if (t.size() != *dim + 1) fail_at(ErrorCode::parse_error, line_no, "expected " + std::to_string(*dim) + " labels");
      labels.assign(t.begin() + 1, t.end());
      std::set<std::string> distinct(labels.begin(), labels.end());
      if (distinct.size() != labels.size()) fail_at(ErrorCode::parse_error, line_no, "labels must be distinct");
    } else if (d == "mul") {
      need_header(line_no, d);
      if (t.size() != 5) fail_at(ErrorCode::parse_error, line_no, "expected 'mul <i> <j> <k> <scalar>'");
      std::size_t i = index(t[1], line_no), j = index(t[2], line_no), k = index(t[3], line_no);
      if (!seen.insert({i, j, k}).second)
        fail_at(ErrorCode::parse_error, line_no, "duplicate entry for (" + t[1] + ", " + t[2] + ", " + t[3] + ")");
      Scalar c = at_line(line_no, [&] { return parse_scalar(t[4], *field); });
      entries.push_back({i, j, k, c});
    } else {
      fail_at(ErrorCode::parse_error, line_no, "unknown directive '" + d + "'");
    }
  }
  if (!field) fail(ErrorCode::parse_error, "missing field line");
  if (!dim) fail(ErrorCode::parse_error, "missing dim line");
  Algebra a(*field, *dim, entries, unity, labels);
  if (unity) {
    UnityCheck u = verify_unity(a);
    if (u.status == UnityStatus::fails)
      fail_at(ErrorCode::domain_error, *unital_line,
              "declared unity fails against basis vector " + std::to_string(*u.witness + 1));
  }
  return a;
}

std::string print_algebra(const Algebra& a) {
  std::ostringstream out;
  out << "field " << a.field().name() << "\n";
  out << "dim " << a.dim() << "\n";
  if (!a.unital()) {
    out << "unital none\n";
  } else {
    const Element& e = *a.unity();
    std::optional<std::size_t> single;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!e[i].is_zero()) {
        ++nonzero;
        single = i;
      }
    if (nonzero == 1 && e[*single].is_one()) {
      out << "unital " << *single + 1 << "\n";
    } else {
      out << "unital vector";
      for (const auto& c : e.coords()) out << " " << c.to_string();
      out << "\n";
    }
  }
  if (!a.labels().empty()) {
    out << "labels";
    for (const auto& l : a.labels()) out << " " << l;
    out << "\n";
  }
  for (const auto& s : a.structure_constants())
    out << "mul " << s.i + 1 << " " << s.j + 1 << " " << s.k + 1 << " " << s.c.to_string() << "\n";
  return out.str();
}

Algebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::invalid_argument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra(buf.str());
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

GeneratorSet parse_generator_spec(const Algebra& a, std::string_view spec) {
  if (spec == "basis" || spec == "all") return all_basis_generators(a);
  std::vector<std::size_t> idx;
  std::string s(spec);
  std::istringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    auto t = tokens(part);
    if (t.size() != 1) fail(ErrorCode::parse_error, "malformed generator list '" + s + "'");
    std::uint64_t v = parse_count(t[0], 0, "index");
    if (v < 1 || v > a.dim())
      fail(ErrorCode::index_out_of_range, "generator index " + t[0] + " outside [1, " + std::to_string(a.dim()) + "]");
    idx.push_back(v - 1);
  }
  if (idx.empty()) fail(ErrorCode::parse_error, "empty generator list");
  return basis_generators(a, idx);
}

GeneratorSet parse_generator_vectors(const Algebra& a, std::string_view text) {
  GeneratorSet s;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto t = tokens(strip_comment(raw));
    if (t.empty()) continue;
    if (t.size() != a.dim())
      fail_at(ErrorCode::dimension_mismatch, line_no, "expected " + std::to_string(a.dim()) + " coordinates");
    Element e(a.field(), a.dim());
    for (std::size_t i = 0; i < t.size(); ++i) e[i] = at_line(line_no, [&] { return parse_scalar(t[i], a.field()); });
    s.elements.push_back(e);
    s.labels.push_back("s" + std::to_string(s.elements.size()));
  }
  if (s.elements.empty()) fail(ErrorCode::parse_error, "no generator vectors");
  return s;
}

}  // namespace nalen
