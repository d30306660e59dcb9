// critgen command-line driver. Talks to the library only through critgen.h.
//
// Exit codes: 0 success, 1 property refuted, 2 usage or parse error,
// 3 resource cap hit.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "critgen/critgen.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphDeleter {
  void operator()(cg_graph* g) const { cg_graph_free(g); }
};
using GraphPtr = std::unique_ptr<cg_graph, GraphDeleter>;

struct ConfigDeleter {
  void operator()(cg_gen_config* c) const { cg_gen_config_free(c); }
};
struct ResultDeleter {
  void operator()(cg_gen_result* r) const { cg_gen_result_free(r); }
};

std::string describe(cg_status s) {
  std::string out = std::string(cg_status_name(s)) + ": " + cg_last_error();
  const std::string w = cg_last_witness();
  if (!w.empty()) out += " (witness " + w + ")";
  return out;
}

void check(cg_status s) {
  if (s != CG_OK) throw std::runtime_error(describe(s));
}

// Reads a text result through the two-call buffer protocol.
template <typename F>
std::string read_text(F&& call) {
  size_t needed = 0;
  check(call(nullptr, 0, &needed));
  std::string buf(needed + 1, '\0');
  check(call(buf.data(), buf.size(), &needed));
  buf.resize(needed);
  return buf;
}

GraphPtr from_name(const std::string& name) {
  cg_graph* g = nullptr;
  if (cg_graph_from_name(name.c_str(), &g) != CG_OK) throw UsageError("unknown graph name '" + name + "'");
  return GraphPtr(g);
}

GraphPtr from_graph6(const std::string& line) {
  cg_graph* g = nullptr;
  const cg_status s = cg_graph_from_graph6(line.c_str(), &g);
  if (s != CG_OK) throw UsageError("bad graph6 '" + line + "': " + describe(s));
  return GraphPtr(g);
}

// Catalog name first, then graph6.
GraphPtr from_token(const std::string& token) {
  cg_graph* g = nullptr;
  if (cg_graph_from_name(token.c_str(), &g) == CG_OK) return GraphPtr(g);
  if (cg_graph_from_graph6(token.c_str(), &g) == CG_OK) return GraphPtr(g);
  throw UsageError("'" + token + "' is neither a catalog name nor graph6");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Input {
  std::vector<std::string> names;
  std::vector<std::string> g6;
  std::vector<std::string> files;

  void attach(CLI::App* cmd) {
    cmd->add_option("--name", names, "catalog name (repeatable)");
    cmd->add_option("--g6", g6, "graph6 string (repeatable)");
    cmd->add_option("--file", files, "file with one graph6 per line, # comments");
  }

  // Names resolve before any file is read or anything is computed.
  std::vector<GraphPtr> load() const {
    std::vector<GraphPtr> out;
    for (const auto& n : names) out.push_back(from_name(n));
    for (const auto& s : g6) out.push_back(from_graph6(s));
    for (const auto& path : files) {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open " + path);
      std::string line;
      while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        out.push_back(from_graph6(line));
      }
    }
    if (out.empty()) throw UsageError("no input graph; use --name, --g6 or --file");
    return out;
  }
};

std::vector<GraphPtr> load_forbidden(const std::string& list) {
  std::vector<GraphPtr> out;
  for (const auto& tok : split(list, ',')) out.push_back(from_token(tok));
  return out;
}

std::vector<const cg_graph*> raw(const std::vector<GraphPtr>& v) {
  std::vector<const cg_graph*> out;
  for (const auto& g : v) out.push_back(g.get());
  return out;
}

std::vector<int> parse_vertices(const std::string& s, std::size_t expected, const char* what) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError(std::string("bad vertex in ") + what + ": " + tok);
    }
  }
  if (out.size() != expected) throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " vertices");
  return out;
}

std::string coloring_line(const std::vector<int>& c) {
  std::string out = "coloring:";
  for (int x : c) out += ' ' + std::to_string(x);
  return out;
}

std::string graph6_of(const cg_graph* g) {
  return read_text([&](char* b, size_t c, size_t* n) { return cg_graph_to_graph6(g, b, c, n); });
}

// Finds an induced copy of the named pattern and returns its vertex order.
std::optional<std::vector<int>> locate(const cg_graph* g, const char* pattern) {
  GraphPtr h = from_name(pattern);
  std::vector<int> image(static_cast<std::size_t>(cg_graph_order(h.get())));
  int found = 0;
  check(cg_find_induced(g, h.get(), &found, image.data()));
  if (!found) return std::nullopt;
  return image;
}

// ------------------------------------------------------------------ commands

int cmd_chi(const Input& in) {
  for (const auto& g : in.load()) {
    int chi = 0;
    std::vector<int> col(static_cast<std::size_t>(cg_graph_order(g.get())));
    check(cg_chromatic_number(g.get(), &chi, col.data()));
    std::cout << "chi: " << chi << '\n' << coloring_line(col) << '\n';
  }
  return kExitOk;
}

int cmd_colorable(const Input& in, int k) {
  int rc = kExitOk;
  for (const auto& g : in.load()) {
    int yes = 0;
    std::vector<int> col(static_cast<std::size_t>(cg_graph_order(g.get())));
    check(cg_is_k_colorable(g.get(), k, &yes, col.data()));
    std::cout << "colorable: " << (yes ? "yes" : "no") << '\n';
    if (yes) {
      std::cout << coloring_line(col) << '\n';
    } else {
      rc = kExitRefuted;
    }
  }
  return rc;
}

int cmd_critical(const Input& in, int k) {
  int rc = kExitOk;
  for (const auto& g : in.load()) {
    int yes = 0;
    const std::string text = read_text(
        [&](char* b, size_t c, size_t* n) { return cg_is_k_vertex_critical(g.get(), k, &yes, b, c, n); });
    if (yes) {
      std::cout << "critical: yes\n" << text;
    } else {
      std::cout << "critical: no (" << text << ")\n";
      rc = kExitRefuted;
    }
  }
  return rc;
}

int cmd_free(const Input& in, const std::string& forbid) {
  const auto forbidden = load_forbidden(forbid);
  const auto tokens = split(forbid, ',');
  int rc = kExitOk;
  for (const auto& g : in.load()) {
    bool clean = true;
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
      std::vector<int> image(static_cast<std::size_t>(cg_graph_order(forbidden[i].get())));
      int found = 0;
      check(cg_find_induced(g.get(), forbidden[i].get(), &found, image.data()));
      if (found) {
        std::cout << "free: no (" << tokens[i] << " at";
        for (int v : image) std::cout << ' ' << v;
        std::cout << ")\n";
        clean = false;
        break;
      }
    }
    if (clean) std::cout << "free: yes\n";
    if (!clean) rc = kExitRefuted;
  }
  return rc;
}

int cmd_canon(const Input& in) {
  for (const auto& g : in.load()) {
    std::cout << read_text([&](char* b, size_t c, size_t* n) { return cg_canonical_graph6(g.get(), b, c, n); })
              << '\n';
  }
  return kExitOk;
}

struct GenerateArgs {
  int k = 0;
  std::string forbid;
  std::string seed;
  int max_vertices = 32;
  double timeout_s = 600;
  int jobs = 1;
  int subset_size = 2;
  std::vector<std::string> disable;
};

std::unique_ptr<cg_gen_result, ResultDeleter> run_generate(const GenerateArgs& a) {
  const auto forbidden = load_forbidden(a.forbid);
  GraphPtr seed = from_token(a.seed);
  cg_gen_config* raw_cfg = nullptr;
  check(cg_gen_config_new(a.k, seed.get(), &raw_cfg));
  std::unique_ptr<cg_gen_config, ConfigDeleter> cfg(raw_cfg);
  for (const auto& h : forbidden) check(cg_gen_config_add_forbidden(cfg.get(), h.get()));
  check(cg_gen_config_set_max_vertices(cfg.get(), a.max_vertices));
  check(cg_gen_config_set_timeout_ms(cfg.get(), static_cast<int64_t>(a.timeout_s * 1000)));
  check(cg_gen_config_set_jobs(cfg.get(), a.jobs));
  check(cg_gen_config_set_subset_size(cfg.get(), a.subset_size));
  for (const auto& rule : a.disable) {
    cg_rule r = CG_RULE_COUNT;
    if (rule == "R3") r = CG_RULE_DOMINATED_PAIR;
    if (rule == "R4") r = CG_RULE_CLIQUE_CUTSET;
    if (rule == "R5") r = CG_RULE_DOMINATED_SUBSETS;
    if (rule == "R6") r = CG_RULE_EXTENDABLE_VERTEX;
    if (r == CG_RULE_COUNT) throw UsageError("only R3, R4, R5, R6 can be disabled");
    check(cg_gen_config_set_rule(cfg.get(), r, 0));
  }
  cg_gen_result* res = nullptr;
  const cg_status s = cg_generate(cfg.get(), &res);
  if (s == CG_SEED_NOT_FREE || s == CG_INVALID_ARGUMENT) throw UsageError(describe(s));
  check(s);
  return std::unique_ptr<cg_gen_result, ResultDeleter>(res);
}

int cmd_generate(const GenerateArgs& a) {
  const auto res = run_generate(a);
  std::cout << read_text([&](char* b, size_t c, size_t* n) { return cg_gen_result_text(res.get(), b, c, n); });
  return cg_gen_result_status(res.get()) == CG_GEN_COMPLETED ? kExitOk : kExitCap;
}

int cmd_classify(const Input& in, const std::string& c5, const std::string& antihole) {
  if (!c5.empty() && !antihole.empty()) throw UsageError("give --c5 or --antihole, not both");
  int rc = kExitOk;
  for (const auto& g : in.load()) {
    std::vector<int> core;
    bool use_antihole = !antihole.empty();
    if (!c5.empty()) {
      core = parse_vertices(c5, 5, "--c5");
    } else if (use_antihole) {
      core = parse_vertices(antihole, 7, "--antihole");
    } else if (auto a = locate(g.get(), "C7bar")) {
      core = *a;
      use_antihole = true;
    } else if (auto c = locate(g.get(), "C5")) {
      core = *c;
    } else {
      std::cout << "classify: no induced C5 or C7bar\n";
      rc = kExitRefuted;
      continue;
    }
    std::cout << (use_antihole ? "antihole:" : "c5:");
    for (int v : core) std::cout << ' ' << v;
    std::cout << '\n';

    int ok = 0;
    size_t needed = 0;
    auto claims = [&](char* b, size_t c, size_t* n) {
      return use_antihole ? cg_check_antihole7_claims(g.get(), core.data(), &ok, b, c, n)
                          : cg_check_c5_claims(g.get(), core.data(), &ok, b, c, n);
    };
    const cg_status s = claims(nullptr, 0, &needed);
    if (s == CG_NOT_A_CYCLE || s == CG_NOT_AN_ANTIHOLE) throw UsageError(describe(s));
    if (s != CG_OK) {
      std::cout << "classify: " << describe(s) << '\n';
      rc = kExitRefuted;
      continue;
    }
    std::cout << read_text([&](char* b, size_t c, size_t* n) {
      return use_antihole ? cg_classify_antihole7(g.get(), core.data(), b, c, n)
                          : cg_classify_c5(g.get(), core.data(), b, c, n);
    });
    std::cout << read_text(claims);
    if (!ok) rc = kExitRefuted;
  }
  return rc;
}

int cmd_color4(const Input& in, const std::string& antihole) {
  int rc = kExitOk;
  for (const auto& g : in.load()) {
    std::vector<int> core;
    if (!antihole.empty()) {
      core = parse_vertices(antihole, 7, "--antihole");
    } else if (auto a = locate(g.get(), "C7bar")) {
      core = *a;
    } else {
      std::cout << "color4-antihole: no induced C7bar\n";
      rc = kExitRefuted;
      continue;
    }
    std::vector<int> col(static_cast<std::size_t>(cg_graph_order(g.get())));
    const cg_status s = cg_four_color_via_antihole(g.get(), core.data(), col.data());
    if (s == CG_NOT_AN_ANTIHOLE) throw UsageError(describe(s));
    if (s != CG_OK) {
      std::cout << "color4-antihole: " << describe(s) << '\n';
      rc = kExitRefuted;
      continue;
    }
    std::cout << coloring_line(col) << '\n';
  }
  return rc;
}

// ------------------------------------------------------------------ verify-paper

struct Fixture {
  std::string name;
  bool pass = false;
  std::string note;
};

bool certified(const cg_graph* g, int k, std::string* why) {
  int yes = 0;
  *why = read_text([&](char* b, size_t c, size_t* n) { return cg_is_k_vertex_critical(g, k, &yes, b, c, n); });
  return yes != 0;
}

bool is_free_of(const cg_graph* g, const std::vector<std::string>& names) {
  std::vector<GraphPtr> hs;
  for (const auto& n : names) hs.push_back(from_name(n));
  const auto ptrs = raw(hs);
  int yes = 0;
  check(cg_is_free(g, ptrs.data(), ptrs.size(), &yes));
  return yes != 0;
}

Fixture golden(const std::string& label, const std::string& override_g6) {
  GraphPtr g = override_g6.empty() ? from_name(label) : from_graph6(override_g6);
  std::string why;
  if (!is_free_of(g.get(), {"P5", "K4"})) return {label + " certification", false, "contains P5 or K4"};
  if (!certified(g.get(), 5, &why)) return {label + " certification", false, why};
  return {label + " certification", true, "5-vertex-critical, (P5,K4)-free"};
}

Fixture propagation_example() {
  // path w x y z with L(w)={1}, L(x)={1,2}, L(y)={2,3}, L(z)={1,2}
  GraphPtr g = from_name("P4");
  const std::vector<uint64_t> start{0b001, 0b011, 0b110, 0b011};
  std::vector<uint64_t> once = start;
  check(cg_propagate(g.get(), 3, once.data(), 0, 0));
  std::vector<uint64_t> full = start;
  check(cg_propagate(g.get(), 3, full.data(), 0, 1));
  const bool ok = once == std::vector<uint64_t>{0b001, 0b010, 0b110, 0b011} &&
                  full == std::vector<uint64_t>{0b001, 0b010, 0b100, 0b011};
  return {"propagation example", ok, ok ? "L'(x)={2}; L''=({1},{2},{3},{1,2})" : "lists differ"};
}

Fixture generation_run(const std::string& forbid, const std::string& seed, const std::vector<std::string>& expect) {
  GenerateArgs a;
  a.k = 5;
  a.forbid = forbid;
  a.seed = seed;
  const auto res = run_generate(a);
  std::vector<std::string> got;
  for (size_t i = 0; i < cg_gen_result_count(res.get()); ++i) {
    cg_graph* raw_g = nullptr;
    check(cg_gen_result_graph(res.get(), i, &raw_g));
    GraphPtr g(raw_g);
    std::string label = graph6_of(g.get());
    for (const auto& e : expect) {
      GraphPtr want = from_name(e);
      int iso = 0;
      check(cg_are_isomorphic(g.get(), want.get(), &iso));
      if (iso) label = e;
    }
    got.push_back(label);
  }
  std::string note = "{";
  for (std::size_t i = 0; i < got.size(); ++i) note += (i ? "," : "") + got[i];
  note += "} ";
  note += cg_gen_result_status(res.get()) == CG_GEN_COMPLETED ? "completed" : "cap hit";
  const bool ok = got == expect && cg_gen_result_status(res.get()) == CG_GEN_COMPLETED;
  return {"generate seed " + seed + " forbid " + forbid, ok, note};
}

Fixture c5_fuzz(int samples) {
  GraphPtr core = from_name("C5");
  std::vector<GraphPtr> hs;
  hs.push_back(from_name("P5"));
  hs.push_back(from_name("diamond"));
  const auto ptrs = raw(hs);
  const int cycle[5] = {0, 1, 2, 3, 4};
  for (int i = 0; i < samples; ++i) {
    cg_graph* raw_g = nullptr;
    check(cg_sample_class_member(core.get(), ptrs.data(), ptrs.size(), 6 + i % 7, static_cast<uint64_t>(i), &raw_g));
    GraphPtr g(raw_g);
    int ok = 0;
    const std::string report =
        read_text([&](char* b, size_t c, size_t* n) { return cg_check_c5_claims(g.get(), cycle, &ok, b, c, n); });
    if (!ok) return {"C5 claim fuzz", false, "sample " + std::to_string(i) + " " + graph6_of(g.get())};
  }
  return {"C5 claim fuzz", true, std::to_string(samples) + " samples"};
}

Fixture antihole_fuzz(int samples) {
  GraphPtr core = from_name("C7bar");
  std::vector<GraphPtr> hs;
  for (const char* n : {"P5", "K4", "W5", "F"}) hs.push_back(from_name(n));
  const auto ptrs = raw(hs);
  const int ah[7] = {0, 1, 2, 3, 4, 5, 6};
  for (int i = 0; i < samples; ++i) {
    cg_graph* raw_g = nullptr;
    check(cg_sample_class_member(core.get(), ptrs.data(), ptrs.size(), 8 + i % 6, static_cast<uint64_t>(i), &raw_g));
    GraphPtr g(raw_g);
    int ok = 0;
    read_text([&](char* b, size_t c, size_t* n) { return cg_check_antihole7_claims(g.get(), ah, &ok, b, c, n); });
    std::vector<int> col(static_cast<std::size_t>(cg_graph_order(g.get())));
    const cg_status s = cg_four_color_via_antihole(g.get(), ah, col.data());
    if (!ok || s != CG_OK) {
      return {"antihole claim fuzz", false, "sample " + std::to_string(i) + " " + graph6_of(g.get())};
    }
  }
  return {"antihole claim fuzz", true, std::to_string(samples) + " samples"};
}

int cmd_verify_paper(bool skip_generate, const std::string& g1, const std::string& g2) {
  std::vector<Fixture> fixtures;
  fixtures.push_back(golden("G1", g1));
  fixtures.push_back(golden("G2", g2));
  fixtures.push_back(propagation_example());
  if (!skip_generate) {
    fixtures.push_back(generation_run("P5,K4", "W5", {"G1", "G2"}));
    fixtures.push_back(generation_run("P5,K4", "F", {"G2"}));
    fixtures.push_back(generation_run("P5,K4,C7bar", "C5", {"G1"}));
  }
  fixtures.push_back(c5_fuzz(200));
  fixtures.push_back(antihole_fuzz(100));

  const Fixture* first_fail = nullptr;
  for (const auto& f : fixtures) {
    std::printf("%-40s %s  %s\n", f.name.c_str(), f.pass ? "PASS" : "FAIL", f.note.c_str());
    if (!f.pass && first_fail == nullptr) first_fail = &f;
  }
  if (first_fail != nullptr) {
    std::cerr << "first failing fixture: " << first_fail->name << '\n';
    return kExitRefuted;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critgen: vertex-critical graph tools"};
  app.require_subcommand(1);

  Input in;
  int k = 0;
  std::string forbid;
  std::string c5;
  std::string antihole;
  GenerateArgs gen;
  bool skip_generate = false;
  std::string g1_override;
  std::string g2_override;

  auto* chi = app.add_subcommand("chi", "chromatic number and an optimal coloring");
  in.attach(chi);
  auto* colorable = app.add_subcommand("colorable", "is the graph k-colorable");
  in.attach(colorable);
  colorable->add_option("--k", k, "colors")->required()->check(CLI::NonNegativeNumber);
  auto* critical = app.add_subcommand("critical", "k-vertex-criticality certificate");
  in.attach(critical);
  critical->add_option("--k", k, "criticality")->required()->check(CLI::PositiveNumber);
  auto* free = app.add_subcommand("free", "check freeness from a forbidden list");
  in.attach(free);
  free->add_option("--forbid", forbid, "comma-separated names or graph6")->required();
  auto* canon = app.add_subcommand("canon", "canonical graph6");
  in.attach(canon);

  auto* generate = app.add_subcommand("generate", "exhaustive search for k-vertex-critical graphs");
  generate->add_option("--k", gen.k, "target chromatic number")->required()->check(CLI::PositiveNumber);
  generate->add_option("--forbid", gen.forbid, "comma-separated names or graph6");
  generate->add_option("--seed", gen.seed, "seed graph, name or graph6")->required();
  generate->add_option("--max-vertices", gen.max_vertices, "vertex cap")->check(CLI::Range(1, 62));
  generate->add_option("--timeout", gen.timeout_s, "time budget in seconds")->check(CLI::NonNegativeNumber);
  generate->add_option("--jobs", gen.jobs, "worker threads")->check(CLI::PositiveNumber);
  generate->add_option("--subset-size", gen.subset_size, "largest dominated subset considered")
      ->check(CLI::Range(1, 8));
  generate->add_option("--disable", gen.disable, "switch off R3, R4, R5 or R6")->delimiter(',');

  auto* classify = app.add_subcommand("classify", "partition around a C5 or 7-antihole and check the claims");
  in.attach(classify);
  classify->add_option("--c5", c5, "cycle v1..v5, comma-separated");
  classify->add_option("--antihole", antihole, "antihole v1..v7, comma-separated");

  auto* color4 = app.add_subcommand("color4-antihole", "4-color a graph through a 7-antihole");
  in.attach(color4);
  color4->add_option("--antihole", antihole, "antihole v1..v7, comma-separated");

  auto* verify = app.add_subcommand("verify-paper", "run the reproduction fixtures");
  verify->add_flag("--skip-generate", skip_generate, "skip the three generation runs");
  verify->add_option("--g1", g1_override, "replace the G1 fixture with this graph6");
  verify->add_option("--g2", g2_override, "replace the G2 fixture with this graph6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*chi) return cmd_chi(in);
    if (*colorable) return cmd_colorable(in, k);
    if (*critical) return cmd_critical(in, k);
    if (*free) return cmd_free(in, forbid);
    if (*canon) return cmd_canon(in);
    if (*generate) return cmd_generate(gen);
    if (*classify) return cmd_classify(in, c5, antihole);
    if (*color4) return cmd_color4(in, antihole);
    if (*verify) return cmd_verify_paper(skip_generate, g1_override, g2_override);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
