#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "nalen/nalen.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0, exit_falsified = 1, exit_error = 2;

struct LibraryError {
  int status;
  std::string message;
};

void check(int status) {
  if (status != NALEN_OK) throw LibraryError{status, nalen_last_error()};
}

struct AlgebraHandle {
  nalen_algebra* a = nullptr;
  AlgebraHandle() = default;
  AlgebraHandle(const AlgebraHandle&) = delete;
  AlgebraHandle& operator=(const AlgebraHandle&) = delete;
  ~AlgebraHandle() { nalen_algebra_free(a); }
};

using Call = int (*)(const nalen_algebra*, const char*, char**);

json call(Call f, const nalen_algebra* a, const json& options) {
  char* out = nullptr;
  std::string o = options.dump();
  check(f(a, o.c_str(), &out));
  json j = json::parse(out);
  nalen_string_free(out);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LibraryError{NALEN_INVALID_ARGUMENT, "cannot read " + path};
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Common {
  std::string file;
  std::uint64_t seed = 0;
  std::size_t samples = 64;
  unsigned threads = 1;
  bool json_out = false;
  std::string set = "basis";
  std::string set_file;
  std::string mode = "general";
  std::size_t max_level = 256;
  std::uint64_t budget = 1'000'000;
  bool set_given = false;

  json options() const {
    json o{{"seed", seed}, {"samples", samples}, {"threads", threads}, {"mode", mode},
           {"max_level", max_level}, {"budget", budget}};
    if (!set_file.empty())
      o["set_vectors"] = read_file(set_file);
    else if (set_given)
      o["set"] = set;
    return o;
  }
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const json& arr, const char* key = nullptr) {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += ", ";
    s += key ? x[key].get<std::string>() : x.dump();
  }
  return s;
}

void text_classify(const json& j) {
  const json& a = j["algebra"];
  std::cout << "algebra: " << a["field"].get<std::string>() << ", dim " << a["dim"] << ", "
            << (a["unital"].get<bool>() ? "unital" : "non-unital") << "\n";
  std::cout << "seed " << j["seed"] << ", " << j["samples"] << " samples\n";
  for (const auto& [name, v] : j["verdicts"].items()) {
    std::cout << "  " << std::left << std::setw(28) << name << v["verdict"].get<std::string>();
    if (v.contains("witness")) {
      const json& w = v["witness"];
      std::cout << "  [" << w["relation"].get<std::string>() << "] " << w["instance"].get<std::string>() << " = "
                << w["value"]["expr"].get<std::string>() << "; need " << w["condition"].get<std::string>();
    } else if (v.contains("reason")) {
      std::cout << "  (" << v["reason"].get<std::string>() << ")";
    }
    std::cout << "\n";
    if (v.contains("notes"))
      for (const auto& n : v["notes"]) std::cout << "      note: " << n.get<std::string>() << "\n";
  }
  if (j.contains("characteristic_note")) std::cout << "note: " << j["characteristic_note"].get<std::string>() << "\n";
  for (const auto& s : j["inconsistencies"]) std::cout << "INCONSISTENT: " << s.get<std::string>() << "\n";
}

void text_sequence(const json& j, bool length_only) {
  const json& d = j["sequence"];
  std::cout << "S = {" << join(j["set"], "expr") << "}\n";
  if (length_only) {
    std::cout << "l(S) = " << d["length"] << "\n";
    return;
  }
  std::cout << "mode: " << j["mode"].get<std::string>();
  if (j.contains("licence") && !j["licence"]["class"].is_null())
    std::cout << " (licensed by " << j["licence"]["class"].get<std::string>() << ": "
              << j["licence"]["verdict"].get<std::string>() << ")";
  std::cout << "\nD(S) = (" << join(d["d"]) << ")\n";
  std::cout << "l(S) = " << d["length"] << ", stabilized by " << d["stabilized_by"].get<std::string>()
            << ", dim Lin(S) = " << d["span_dim"] << (d["generating"].get<bool>() ? ", generating" : ", not generating")
            << "\n";
}

void text_exact(const json& j) {
  std::cout << "l(A) = " << j["length"] << "\n";
  std::cout << "witness S = {" << join(j["witness"], "expr") << "}, D(S) = (" << join(j["witness_sequence"]["d"])
            << ")\n";
  std::cout << j["subspaces_examined"] << " subspaces examined, " << j["generating_subspaces"] << " generating\n";
}

void text_bounds(const json& j) {
  std::cout << "dim - d0 = " << j["dim_minus_d0"] << "; descendingly flexible: "
            << j["descendingly_flexible"].get<std::string>()
            << "; descendingly alternative: " << j["descendingly_alternative"].get<std::string>() << "\n";
  if (!j["algebra_length"].is_null()) std::cout << "l(A) = " << j["algebra_length"] << "\n";
  if (j.contains("note")) std::cout << j["note"].get<std::string>() << "\n";
  for (const auto& e : j["entries"]) {
    std::cout << (e["pass"].get<bool>() ? "pass " : "FAIL ") << std::left << std::setw(24)
              << e["name"].get<std::string>() << std::setw(16) << e["subject"].get<std::string>() << " "
              << e["inequality"].get<std::string>() << ": " << e["observed"].get<std::string>()
              << (e["equality"].get<bool>() ? " (equality)" : "") << "\n";
  }
  std::cout << (j["passed"].get<bool>() ? "all bounds pass" : "bound violated") << "\n";
}

void text_canonical(const json& j) {
  const json& c = j["canonical"];
  std::cout << j["input"].get<std::string>() << " ~ " << (c["sign"].get<int>() < 0 ? "-" : "+")
            << c["word"].get<std::string>() << "\n";
  if (c.contains("shape"))
    std::cout << "shape " << c["shape"].get<std::string>() << (c["mirrored"].get<bool>() ? " (mirrored)" : "") << "\n";
  int k = 1;
  for (const auto& cls : c["partition"]) {
    std::cout << "class " << k++ << ": {";
    std::string s;
    for (const auto& slot : cls) {
      if (!s.empty()) s += ", ";
      s += slot["letter"].get<std::string>() + "@" + slot["block"].get<std::string>() +
           (slot["inner"].get<bool>() ? "/inner" : "");
    }
    std::cout << s << "}\n";
  }
  if (j.contains("verified")) std::cout << "verified modulo Lin_{m-1}(S): " << (j["verified"].get<bool>() ? "yes" : "NO") << "\n";
}

void text_search(const json& j) {
  std::cout << j["generating"] << " of " << j["trials"] << " random sets of size " << j["set_size"] << " generate\n";
  if (j["lower_bound"].is_null()) {
    std::cout << "no generating set found\n";
    return;
  }
  std::cout << "l(A) >= " << j["lower_bound"] << " (trial " << j["best_trial"] << ", D(S) = ("
            << join(j["best_sequence"]["d"]) << "))\n";
}

void text_unity(const json& j) {
  if (j["unity"].is_null())
    std::cout << "no unity\n";
  else
    std::cout << "unity = " << j["unity"]["expr"].get<std::string>() << "\n";
}

void add_common(CLI::App* c, Common& o, bool with_file = true) {
  if (with_file) c->add_option("file", o.file, "algebra file")->required();
  c->add_option("--seed", o.seed, "random seed");
  c->add_option("--samples", o.samples, "random samples per check");
  c->add_option("--threads", o.threads, "worker threads");
  c->add_flag("--json", o.json_out, "print a JSON report");
}

void add_set(CLI::App* c, Common& o) {
  c->add_option("--set", o.set, "basis, or 1-based basis indices like 1,2")->each([&](const std::string&) {
    o.set_given = true;
  });
  c->add_option("--set-file", o.set_file, "file with one coordinate vector per line");
  c->add_option("--max-level", o.max_level, "level cap in general mode");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lengths and identity classes of non-associative algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", nalen_version());

  Common o;
  std::string word, variant = "alt", algebra_file, example, field, gammas, twist = "none", output;
  std::size_t n = 0, level = 0, size = 2;
  bool n_given = false, hull = false;
  std::uint64_t k = 0;

  auto* classify = app.add_subcommand("classify", "identity classes with witnesses");
  add_common(classify, o);
  auto* diffseq = app.add_subcommand("diffseq", "sequence of differences of a generator set");
  add_common(diffseq, o);
  add_set(diffseq, o);
  diffseq->add_option("--mode", o.mode, "general, mixing or auto")->check(CLI::IsMember({"general", "mixing", "auto"}));
  auto* length = app.add_subcommand("length", "length of a generator set");
  add_common(length, o);
  add_set(length, o);
  length->add_option("--mode", o.mode, "general, mixing or auto")->check(CLI::IsMember({"general", "mixing", "auto"}));
  auto* exact = app.add_subcommand("exact-length", "length of the algebra over a prime field");
  add_common(exact, o);
  exact->add_option("--budget", o.budget, "subspace budget");
  exact->add_option("--max-level", o.max_level, "level cap in general mode");
  auto* bounds = app.add_subcommand("bounds", "audit the length bounds");
  add_common(bounds, o);
  add_set(bounds, o);
  bounds->add_option("--budget", o.budget, "subspace budget for the exact length");
  auto* canonical = app.add_subcommand("canonical", "canonical form of a word such as ((1 2) 1)");
  canonical->add_option("word", word, "bracketed word over letters 1..|S|")->required();
  canonical->add_option("--variant", variant, "alt or flex")->check(CLI::IsMember({"alt", "flex"}));
  canonical->add_option("--algebra", algebra_file, "verify the rewrite in this algebra");
  canonical->add_flag("--json", o.json_out, "print a JSON report");
  add_set(canonical, o);
  auto* gen = app.add_subcommand("gen", "write an example algebra");
  gen->add_option("name", example, "z2n, aflex, aalt, spin, matrix, chain3, nil3, cd")->required();
  gen->add_option("--n", n, "size parameter")->each([&](const std::string&) { n_given = true; });
  gen->add_option("--field", field, "rational or gf <p>");
  gen->add_flag("--hull", hull, "adjoin an identity");
  gen->add_option("--level", level, "doubling level for cd");
  gen->add_option("--gammas", gammas, "comma separated doubling parameters");
  gen->add_option("--twist", twist, "none, left, right or both")->check(CLI::IsMember({"none", "left", "right", "both"}));
  gen->add_option("-o,--output", output, "output file");
  auto* search = app.add_subcommand("search", "random generator sets for a lower bound on l(A)");
  add_common(search, o);
  search->add_option("--size", size, "elements per random set");
  search->add_option("--max-level", o.max_level, "level cap in general mode");
  auto* unity = app.add_subcommand("infer-unity", "solve for a two-sided identity");
  unity->add_option("file", o.file, "algebra file")->required();
  unity->add_flag("--json", o.json_out, "print a JSON report");
  auto* formula = app.add_subcommand("formula", "evaluate a bound formula");
  formula->add_option("name", example, "alt_min_dim, alt_max_length, flex_min_dim, flex_max_length, ...")->required();
  formula->add_option("n", n, "argument")->required();
  formula->add_option("k", k, "second argument");
  formula->add_flag("--json", o.json_out, "print a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    auto load = [&](AlgebraHandle& h, const std::string& path) { check(nalen_algebra_load(path.c_str(), &h.a)); };
    auto out = [&](const json& j, void (*text)(const json&)) {
      if (o.json_out)
        print_json(j);
      else
        text(j);
    };

    if (classify->parsed()) {
      AlgebraHandle h;
      load(h, o.file);
      json j = call(nalen_classify, h.a, o.options());
      out(j, text_classify);
      return j["falsified"].get<bool>() ? exit_falsified : exit_ok;
    }
    if (diffseq->parsed() || length->parsed()) {
      AlgebraHandle h;
      load(h, o.file);
      json j = call(nalen_diffseq, h.a, o.options());
      if (o.json_out)
        print_json(j);
      else
        text_sequence(j, length->parsed());
      return exit_ok;
    }
    if (exact->parsed()) {
      AlgebraHandle h;
      load(h, o.file);
      out(call(nalen_exact_length, h.a, o.options()), text_exact);
      return exit_ok;
    }
    if (bounds->parsed()) {
      AlgebraHandle h;
      load(h, o.file);
      json j = call(nalen_bounds, h.a, o.options());
      out(j, text_bounds);
      return j["passed"].get<bool>() ? exit_ok : exit_falsified;
    }
    if (canonical->parsed()) {
      AlgebraHandle h;
      if (!algebra_file.empty()) load(h, algebra_file);
      json opts = o.options();
      opts["word"] = word;
      opts["variant"] = variant;
      json j = call(nalen_canonical, h.a, opts);
      out(j, text_canonical);
      return j.contains("verified") && !j["verified"].get<bool>() ? exit_falsified : exit_ok;
    }
    if (gen->parsed()) {
      json req{{"name", example}, {"hull", hull}, {"twist", twist}, {"level", level}};
      if (n_given) req["n"] = n;
      if (!field.empty()) req["field"] = field;
      if (!gammas.empty()) {
        json g = json::array();
        std::stringstream ss(gammas);
        for (std::string t; std::getline(ss, t, ',');) g.push_back(t);
        req["gammas"] = g;
      }
      AlgebraHandle h;
      check(nalen_algebra_example(req.dump().c_str(), &h.a));
      char* text = nullptr;
      check(nalen_algebra_print(h.a, &text));
      std::string s = text;
      nalen_string_free(text);
      if (output.empty()) {
        std::cout << s;
      } else {
        std::ofstream f(output);
        if (!(f << s)) throw LibraryError{NALEN_INVALID_ARGUMENT, "cannot write " + output};
      }
      return exit_ok;
    }
    if (search->parsed()) {
      AlgebraHandle h;
      load(h, o.file);
      json opts = o.options();
      opts["trials"] = o.samples;
      opts["size"] = size;
      out(call(nalen_search, h.a, opts), text_search);
      return exit_ok;
    }
    if (unity->parsed()) {
      AlgebraHandle h;
      load(h, o.file);
      char* text = nullptr;
      check(nalen_infer_unity(h.a, &text));
      json j = json::parse(text);
      nalen_string_free(text);
      out(j, text_unity);
      return exit_ok;
    }
    if (formula->parsed()) {
      std::uint64_t v = 0;
      check(nalen_formula(example.c_str(), n, k, &v));
      if (o.json_out)
        std::cout << json{{"command", "formula"}, {"name", example}, {"n", n}, {"k", k}, {"value", v}}.dump(2) << "\n";
      else
        std::cout << v << "\n";
      return exit_ok;
    }
  } catch (const LibraryError& e) {
    std::cerr << "error (" << nalen_status_name(e.status) << "): " << e.message << "\n";
    return exit_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
