#include "eostrata/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "eostrata/golden_tables_data.hpp"

namespace eo {

int GroupSchemeName::genus() const {
  int g = l_exponent;
  for (const auto& [factor, count] : factors) g += factor.r * count;
  return g;
}

namespace {

void check_factor(const IndecomposableFactor& f) {
  const std::string shown = "I[" + std::to_string(f.r) + "," + std::to_string(f.a) + "]";
  if (f.r < 1) throw std::invalid_argument(shown + ": r must be >= 1");
  switch (f.a) {
    case 1:
      return;
    case 2:
      if (f.r < 3) throw std::invalid_argument(shown + ": I[r,2] requires r >= 3");
      return;
    case 3:
      if (f.r != 4) throw std::invalid_argument(shown + ": I[r,3] exists only for r = 4");
      return;
    default:
      throw std::invalid_argument(shown + ": a must be 1, 2 or 3");
  }
}

struct NameParser {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("name syntax error at position " + std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int posint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a positive integer");
    if (pos - start > 4) fail("integer too large");
    int value = std::stoi(text.substr(start, pos - start));
    if (value < 1) fail("expected a positive integer");
    return value;
  }

  GroupSchemeName parse() {
    GroupSchemeName name;
    std::map<IndecomposableFactor, int> factors;
    do {
      skip_ws();
      if (pos >= text.size()) fail("expected 'L' or 'I[r,a]'");
      bool is_l = false;
      IndecomposableFactor factor;
      if (text[pos] == 'L') {
        ++pos;
        is_l = true;
      } else if (text[pos] == 'I') {
        ++pos;
        if (!consume('[')) fail("expected '[' after 'I'");
        factor.r = posint();
        if (!consume(',')) fail("expected ',' in 'I[r,a]'");
        factor.a = posint();
        if (!consume(']')) fail("expected ']'");
        check_factor(factor);
      } else {
        fail("expected 'L' or 'I[r,a]'");
      }
      int exponent = consume('^') ? posint() : 1;
      if (is_l) name.l_exponent += exponent;
      else factors[factor] += exponent;
    } while (consume('+'));
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    name.factors.assign(factors.begin(), factors.end());
    return name;
  }
};

}  // namespace

GroupSchemeName parse_name(const std::string& text) {
  NameParser parser{text};
  return parser.parse();
}

std::string render_name(const GroupSchemeName& name) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << '+';
    first = false;
  };
  if (name.l_exponent > 0) {
    sep();
    os << 'L';
    if (name.l_exponent > 1) os << '^' << name.l_exponent;
  }
  for (const auto& [factor, count] : name.factors) {
    sep();
    os << "I[" << factor.r << ',' << factor.a << ']';
    if (count > 1) os << '^' << count;
  }
  if (first) throw std::invalid_argument("cannot render an empty name");
  return os.str();
}

namespace {

std::string superscript(int n) {
  static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(n)) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string render_name_unicode(const GroupSchemeName& name) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " ⊕ ";  // ⊕
    first = false;
  };
  if (name.l_exponent > 0) {
    sep();
    os << 'L';
    if (name.l_exponent > 1) os << superscript(name.l_exponent);
  }
  for (const auto& [factor, count] : name.factors) {
    sep();
    os << "I_{" << factor.r << ',' << factor.a << '}';
    if (count > 1) os << superscript(count);
  }
  if (first) throw std::invalid_argument("cannot render an empty name");
  return os.str();
}

MonomialModule build_module(const GroupSchemeName& name) {
  std::vector<MonomialModule> factors;
  for (int k = 0; k < name.l_exponent; ++k) factors.push_back(module_L());
  for (const auto& [factor, count] : name.factors) {
    check_factor(factor);
    for (int k = 0; k < count; ++k) {
      if (factor.a == 1) factors.push_back(module_I_r_1(factor.r));
      else if (factor.a == 2) factors.push_back(module_I_r_2(factor.r));
      else factors.push_back(module_I_4_3());
    }
  }
  if (factors.empty()) throw std::invalid_argument("cannot build the zero module");
  return direct_sum(factors);
}

// ---------------------------------------------------------------------------
// Golden data

namespace {

struct GoldenData {
  int version = 0;
  std::vector<std::vector<GoldenRow>> rows_by_g;  // index 1..4
  std::vector<std::pair<YoungType, YoungType>> hasse_g4;
};

[[noreturn]] void corrupt(const std::string& what) {
  throw std::runtime_error("golden table data is inconsistent: " + what);
}

std::vector<int> int_vector(const nlohmann::json& j) {
  std::vector<int> out;
  for (const auto& x : j) out.push_back(x.get<int>());
  return out;
}

void check_row(const GoldenRow& row) {
  const std::string where = "row " + row.name;
  if (final_to_young(row.nu) != row.mu) corrupt(where + ": nu and mu disagree");
  if (young_to_final(row.mu) != row.nu) corrupt(where + ": mu does not invert to nu");
  if (p_rank_of_final(row.nu) != row.f) corrupt(where + ": p-rank mismatch");
  if (a_number_of_final(row.nu) != row.a) corrupt(where + ": a-number mismatch");
  if (invariants_of_young(row.mu) != std::pair{row.f, row.a})
    corrupt(where + ": Young-side invariants mismatch");
  if (stratum_codim(row.mu) != row.codim) corrupt(where + ": codim mismatch");
  if (stratum_dim(row.nu) + row.codim != row.g * (row.g + 1) / 2)
    corrupt(where + ": dim + codim != g(g+1)/2");
  GroupSchemeName name = parse_name(row.name);
  if (render_name(name) != row.name) corrupt(where + ": name is not canonical");
  if (name.genus() != row.g) corrupt(where + ": name genus mismatch");
  for (int letter : row.omega_word.letters)
    if (letter < 1 || letter > row.g) corrupt(where + ": word letter out of range");
}

GoldenData load_golden_data() {
  nlohmann::json doc = nlohmann::json::parse(detail::kGoldenTablesJson);
  GoldenData data;
  data.version = doc.at("version").get<int>();
  data.rows_by_g.resize(5);
  for (const auto& j : doc.at("rows")) {
    GoldenRow row;
    row.g = j.at("g").get<int>();
    if (row.g < 1 || row.g > 4) corrupt("row with g outside 1..4");
    row.name = j.at("name").get<std::string>();
    row.codim = j.at("codim").get<int>();
    row.f = j.at("f").get<int>();
    row.a = j.at("a").get<int>();
    row.nu = make_final_type(row.g, int_vector(j.at("nu")));
    row.mu = make_young_type(row.g, int_vector(j.at("mu")));
    row.omega_word = WeylWord{row.g, int_vector(j.at("omega_word"))};
    if (j.contains("cycle_class")) {
      row.cycle_class_text = j.at("cycle_class").get<std::string>();
      row.cycle_class = parse_lambda_poly(row.g, *row.cycle_class_text);
    }
    check_row(row);
    data.rows_by_g[row.g].push_back(std::move(row));
  }
  for (int g = 1; g <= 4; ++g) {
    const auto& rows = data.rows_by_g[g];
    if (rows.size() != std::size_t{1} << g)
      corrupt("expected 2^g rows for g = " + std::to_string(g));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = i + 1; k < rows.size(); ++k)
        if (rows[i].nu == rows[k].nu) corrupt("duplicate final type in g = " + std::to_string(g));
  }
  for (const auto& edge : doc.at("hasse_g4_edges")) {
    if (edge.size() != 2) corrupt("malformed Hasse edge");
    data.hasse_g4.emplace_back(make_young_type(4, int_vector(edge[0])),
                               make_young_type(4, int_vector(edge[1])));
  }
  if (data.hasse_g4.size() != 20) corrupt("expected 20 Hasse edges for g = 4");
  return data;
}

const GoldenData& golden_data() {
  static const GoldenData data = load_golden_data();
  return data;
}

}  // namespace

const std::vector<GoldenRow>& golden_table(int g) {
  if (g < 1 || g > 4)
    throw std::invalid_argument("classification table unavailable for g = " + std::to_string(g) +
                                " (tables cover 1 <= g <= 4)");
  return golden_data().rows_by_g[g];
}

int golden_data_version() { return golden_data().version; }

const std::vector<std::pair<YoungType, YoungType>>& golden_hasse_g4_edges() {
  return golden_data().hasse_g4;
}

GroupSchemeName classify(const FinalType& t) {
  for (const GoldenRow& row : golden_table(t.g))
    if (row.nu == t) return parse_name(row.name);
  throw std::invalid_argument("not a valid final type for g = " + std::to_string(t.g));
}

std::vector<GroupSchemeName> decomposable_a2_list(int g) {
  if (g < 2) throw std::invalid_argument("decomposable a=2 list needs g >= 2");
  std::vector<GroupSchemeName> out;
  for (int r = 1; 2 * r <= g; ++r) {
    GroupSchemeName name;
    name.factors.emplace_back(IndecomposableFactor{r, 1}, 1);
    if (g - r == r) name.factors.back().second = 2;
    else name.factors.emplace_back(IndecomposableFactor{g - r, 1}, 1);
    out.push_back(std::move(name));
  }
  return out;
}

}  // namespace eo
