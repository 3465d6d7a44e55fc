// eo-strata: enumerate, describe, convert, tabulate and verify the
// classification of symmetric BT_1 group schemes (p-torsion types of
// principally polarized abelian varieties).
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eostrata/catalog.hpp"
#include "eostrata/dieudonne.hpp"
#include "eostrata/poset.hpp"
#include "eostrata/render.hpp"
#include "eostrata/strata.hpp"
#include "eostrata/tautring.hpp"
#include "eostrata/verify.hpp"
#include "eostrata/weyl.hpp"

namespace {

constexpr int kMaxGenus = 12;  // 4096 types, permutations on 24 points: instant

void check_genus_guard(int g) {
  if (g < 1 || g > kMaxGenus)
    throw std::invalid_argument("g = " + std::to_string(g) + " is out of range (1 <= g <= " +
                                std::to_string(kMaxGenus) + ")");
}

int parse_int_token(std::string_view token) {
  size_t b = token.find_first_not_of(" \t");
  size_t e = token.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw std::invalid_argument("empty entry in integer list");
  token = token.substr(b, e - b + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("'" + std::string(token) + "' is not an integer");
  return value;
}

// "[0,1,1]" or "{3,1}" -> {0,1,1} / {3,1}; "{}" and "[]" give the empty list.
std::vector<int> parse_int_list(std::string_view text, char open, char close) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos || text[b] != open || text[e] != close)
    throw std::invalid_argument("expected a list delimited by '" + std::string(1, open) + "' and '" +
                                std::string(1, close) + "', got '" + std::string(text) + "'");
  std::string_view inner = text.substr(b + 1, e - b - 1);
  std::vector<int> out;
  if (inner.find_first_not_of(" \t") == std::string_view::npos) return out;
  size_t pos = 0;
  while (true) {
    size_t comma = inner.find(',', pos);
    out.push_back(parse_int_token(inner.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// A describe/convert input: a catalog name, "nu=[...]", or "mu={...}".
struct ResolvedInput {
  eo::Record record;
  std::optional<eo::GroupSchemeName> name;  // set whenever a module can be built
};

ResolvedInput resolve_input(const std::string& input, std::optional<int> g_flag) {
  ResolvedInput out;
  eo::FinalType t;
  if (input.rfind("nu=", 0) == 0) {
    std::vector<int> nu = parse_int_list(std::string_view(input).substr(3), '[', ']');
    int g = static_cast<int>(nu.size());
    if (g_flag && *g_flag != g)
      throw std::invalid_argument("-g " + std::to_string(*g_flag) + " conflicts with a nu of length " +
                                  std::to_string(g));
    check_genus_guard(g);
    t = eo::make_final_type(g, std::move(nu));
  } else if (input.rfind("mu=", 0) == 0) {
    if (!g_flag) throw std::invalid_argument("mu input needs -g (the genus is not determined by mu)");
    check_genus_guard(*g_flag);
    std::vector<int> mu = parse_int_list(std::string_view(input).substr(3), '{', '}');
    t = eo::young_to_final(eo::make_young_type(*g_flag, std::move(mu)));
  } else {
    eo::GroupSchemeName name = eo::parse_name(input);
    int g = name.genus();
    if (g_flag && *g_flag != g)
      throw std::invalid_argument("-g " + std::to_string(*g_flag) + " conflicts with '" + input +
                                  "' of genus " + std::to_string(g));
    check_genus_guard(g);
    t = eo::final_type(eo::build_module(name));
    out.name = std::move(name);
  }
  out.record = eo::record_for(t);
  if (out.name)
    out.record.name = eo::render_name(*out.name);
  else if (out.record.name)
    out.name = eo::parse_name(*out.record.name);  // classified: module available
  return out;
}

std::string format_flag_help(const std::string& choices) { return "output format: " + choices; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const char* subcommand) {
  for (const char* a : allowed)
    if (format == a) return;
  throw std::invalid_argument("format '" + format + "' is not valid for " + subcommand);
}

int run_enumerate(int g, const std::string& format) {
  require_format(format, {"text", "csv", "json"}, "enumerate");
  std::vector<eo::Record> records = eo::enumerate_records(g);
  if (format == "csv")
    std::cout << eo::render_records_csv(records);
  else if (format == "json")
    std::cout << eo::render_records_json(records);
  else
    std::cout << eo::render_records_text(records, /*table_style=*/false);
  return 0;
}

int run_table(int g, const std::string& format) {
  require_format(format, {"text", "csv", "json"}, "table");
  std::vector<eo::Record> records = eo::table_records(g);
  if (format == "csv")
    std::cout << eo::render_records_csv(records);
  else if (format == "json")
    std::cout << eo::render_records_json(records);
  else
    std::cout << eo::render_records_text(records, /*table_style=*/true);
  return 0;
}

int run_hasse(int g, const std::string& format, bool with_names) {
  require_format(format, {"text", "csv", "json", "dot"}, "hasse");
  eo::HasseDiagram d = eo::hasse(g);
  if (format == "csv")
    std::cout << eo::render_hasse_csv(d);
  else if (format == "json")
    std::cout << eo::render_hasse_json(d);
  else if (format == "dot")
    std::cout << eo::render_hasse_dot(d, with_names);
  else
    std::cout << eo::render_hasse_text(d);
  return 0;
}

void print_record_report(std::ostream& os, const eo::Record& r) {
  eo::FinalType t = eo::make_final_type(r.g, r.nu);
  eo::YoungType y = eo::make_young_type(r.g, r.mu);
  os << "g:      " << r.g << "\n";
  if (r.name)
    os << "name:   " << *r.name << "  (" << eo::render_name_unicode(eo::parse_name(*r.name)) << ")\n";
  os << "nu:     " << eo::render_nu(t) << "\n";
  os << "mu:     " << eo::render_mu(y) << "\n";
  os << "f:      " << r.f << "\n";
  os << "a:      " << r.a << "\n";
  os << "dim:    " << r.dim << "\n";
  os << "codim:  " << r.codim << "\n";
  os << "omega:  " << eo::render_one_line(eo::WeylElement(r.g, r.omega_oneline)) << "\n";
  os << "word:   " << eo::render_word(eo::WeylWord{r.g, r.omega_word}) << "\n";
  if (r.cycle_class) os << "class:  " << *r.cycle_class << "\n";
}

void print_filtration_report(std::ostream& os, const eo::MonomialModule& m) {
  eo::FiltrationReport rep = eo::canonical_filtration(m);
  os << "canonical filtration (closure of {0, D} under V and F^-1):\n";
  for (const eo::Subspace& s : rep.canonical)
    os << "  dim " << s.dim() << ": " << eo::render_subspace(m, s) << "\n";
  os << "refined flag with nu_i = dim V(N_i):\n";
  for (int i = 1; i <= m.g(); ++i)
    os << "  N_" << i << " = " << eo::render_subspace(m, rep.refined[i]) << "   nu_" << i << " = "
       << rep.nu[i - 1] << "\n";
  os << "interaction with the dual flag, dim(N_i ^ N'_g) for i = 1.." << m.g() << ":\n  [";
  for (int i = 0; i < m.g(); ++i) os << (i ? "," : "") << rep.interaction[i];
  os << "]\n";
}

int run_describe(const std::string& input, std::optional<int> g_flag, const std::string& format,
                 bool show_module, bool show_filtration) {
  require_format(format, {"text", "csv", "json"}, "describe");
  if ((show_module || show_filtration) && format != "text")
    throw std::invalid_argument("--show-module/--show-filtration produce text only");
  ResolvedInput in = resolve_input(input, g_flag);
  if ((show_module || show_filtration) && !in.name)
    throw std::invalid_argument(
        "no module to show: the type has no catalog name for g > 4; pass a name instead");
  if (format == "csv") {
    std::cout << eo::render_records_csv({in.record});
  } else if (format == "json") {
    std::cout << eo::record_to_json(in.record) << "\n";
  } else {
    print_record_report(std::cout, in.record);
    if (show_module || show_filtration) {
      eo::MonomialModule m = eo::build_module(*in.name);
      if (show_module) {
        std::cout << "\nmodule basis and actions:\n" << eo::render_action_table(m);
      }
      if (show_filtration) {
        std::cout << "\n";
        print_filtration_report(std::cout, m);
      }
    }
  }
  if (!in.record.name)
    std::cerr << "note: no catalog name for g = " << in.record.g
              << " (classification tables cover g <= 4)\n";
  return 0;
}

int run_convert(const std::string& input, std::optional<int> g_flag, const std::string& format) {
  require_format(format, {"text", "csv", "json"}, "convert");
  ResolvedInput in = resolve_input(input, g_flag);
  const eo::Record& r = in.record;
  if (format == "csv") {
    std::cout << eo::render_records_csv({r});
  } else if (format == "json") {
    std::cout << eo::record_to_json(r) << "\n";
  } else {
    if (r.name) std::cout << "name:  " << *r.name << "\n";
    std::cout << "nu:    " << eo::render_nu(eo::make_final_type(r.g, r.nu)) << "\n";
    std::cout << "mu:    " << eo::render_mu(eo::make_young_type(r.g, r.mu)) << "\n";
    std::cout << "omega: " << eo::render_one_line(eo::WeylElement(r.g, r.omega_oneline)) << "\n";
    std::cout << "word:  " << eo::render_word(eo::WeylWord{r.g, r.omega_word}) << "\n";
  }
  if (!r.name)
    std::cerr << "note: no catalog name for g = " << r.g << " (classification tables cover g <= 4)\n";
  return 0;
}

int run_verify() {
  eo::VerificationReport report = eo::run_verification();
  for (const std::string& f : report.failures) std::cout << "FAIL: " << f << "\n";
  if (report.ok()) {
    std::cout << "verification passed: " << report.checks_run << " checks\n";
    return 0;
  }
  std::cout << "verification failed: " << report.failures.size() << " of " << report.checks_run
            << " checks\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "eo-strata: the classification of symmetric BT_1 group schemes\n"
      "(p-torsion types of g-dimensional principally polarized abelian\n"
      "varieties in characteristic p)"};
  app.require_subcommand(1);

  int g = 1;
  std::string format = "text";
  std::string input;
  int g_flag = 0;
  bool show_module = false, show_filtration = false, with_names = false;

  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "All 2^g types in canonical order");
  cmd_enumerate->add_option("g", g, "genus")->required()->check(CLI::Range(1, kMaxGenus));
  cmd_enumerate->add_option("--format", format, format_flag_help("text|csv|json"));

  CLI::App* cmd_describe =
      app.add_subcommand("describe", "One type: by name, nu=[...] or mu={...}");
  cmd_describe->add_option("input", input, "catalog name, nu=[...] or mu={...}")->required();
  cmd_describe->add_option("-g", g_flag, "genus (required for mu inputs)");
  cmd_describe->add_option("--format", format, format_flag_help("text|csv|json"));
  cmd_describe->add_flag("--show-module", show_module, "print the module basis and actions");
  cmd_describe->add_flag("--show-filtration", show_filtration,
                         "print the canonical filtration and interaction dims");

  CLI::App* cmd_convert =
      app.add_subcommand("convert", "Translate between the equivalent encodings");
  cmd_convert->add_option("input", input, "catalog name, nu=[...] or mu={...}")->required();
  cmd_convert->add_option("-g", g_flag, "genus (required for mu inputs)");
  cmd_convert->add_option("--format", format, format_flag_help("text|csv|json"));

  CLI::App* cmd_table = app.add_subcommand("table", "Classification table in presentation order");
  cmd_table->add_option("g", g, "genus")->required()->check(CLI::Range(1, kMaxGenus));
  cmd_table->add_option("--format", format, format_flag_help("text|csv|json"));

  CLI::App* cmd_hasse = app.add_subcommand("hasse", "Specialization diagram of the strata");
  cmd_hasse->add_option("g", g, "genus")->required()->check(CLI::Range(1, kMaxGenus));
  cmd_hasse->add_option("--format", format, format_flag_help("text|csv|json|dot"));
  cmd_hasse->add_flag("--names", with_names, "label nodes with catalog names (g <= 4)");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Recompute the stored classification tables and diagram");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::optional<int> g_opt;
    if (cmd_describe->count("-g") || cmd_convert->count("-g")) g_opt = g_flag;
    if (*cmd_enumerate) return run_enumerate(g, format);
    if (*cmd_describe) return run_describe(input, g_opt, format, show_module, show_filtration);
    if (*cmd_convert) return run_convert(input, g_opt, format);
    if (*cmd_table) return run_table(g, format);
    if (*cmd_hasse) return run_hasse(g, format, with_names);
    if (*cmd_verify) return run_verify();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
