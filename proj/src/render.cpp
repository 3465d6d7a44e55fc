#include "eostrata/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "eostrata/catalog.hpp"
#include "eostrata/weyl.hpp"

namespace eo {

namespace {

const GoldenRow* find_golden(const FinalType& t) {
  if (t.g > 4) return nullptr;
  for (const GoldenRow& row : golden_table(t.g))
    if (row.nu == t) return &row;
  return nullptr;
}

}  // namespace

Record record_for(const FinalType& t) {
  StratumRecord s = stratum_record(t);
  Record r;
  r.g = t.g;
  r.codim = s.codim;
  r.f = s.f;
  r.a = s.a;
  r.nu = t.nu;
  r.mu = s.young_type.mu;
  WeylElement omega = from_young(s.young_type);
  r.omega_oneline = omega.one_line();
  r.omega_word = reduced_word(omega).letters;
  r.dim = s.dim;
  if (const GoldenRow* row = find_golden(t)) {
    r.name = row->name;
    r.cycle_class = row->cycle_class_text;
  }
  return r;
}

std::vector<Record> enumerate_records(int g) {
  std::vector<Record> out;
  for (const FinalType& t : enumerate_final_types(g)) out.push_back(record_for(t));
  return out;
}

std::vector<Record> table_records(int g) {
  if (g <= 4) {
    std::vector<Record> out;
    for (const GoldenRow& row : golden_table(g)) {
      Record r = record_for(row.nu);
      r.omega_word = row.omega_word.letters;  // show the stored table word
      out.push_back(std::move(r));
    }
    return out;
  }
  std::vector<Record> out = enumerate_records(g);
  std::sort(out.begin(), out.end(), [](const Record& x, const Record& y) {
    if (x.codim != y.codim) return x.codim < y.codim;
    if (x.f != y.f) return x.f > y.f;
    if (x.a != y.a) return x.a > y.a;
    return x.nu < y.nu;
  });
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json record_json(const Record& r) {
  nlohmann::json j;
  j["g"] = r.g;
  j["name"] = r.name ? nlohmann::json(*r.name) : nlohmann::json(nullptr);
  j["codim"] = r.codim;
  j["f"] = r.f;
  j["a"] = r.a;
  j["nu"] = r.nu;
  j["mu"] = r.mu;
  j["omega_oneline"] = r.omega_oneline;
  j["omega_word"] = r.omega_word;
  j["dim"] = r.dim;
  j["cycle_class"] = r.cycle_class ? nlohmann::json(*r.cycle_class) : nlohmann::json(nullptr);
  return j;
}

Record record_from(const nlohmann::json& j) {
  Record r;
  r.g = j.at("g").get<int>();
  if (!j.at("name").is_null()) r.name = j.at("name").get<std::string>();
  r.codim = j.at("codim").get<int>();
  r.f = j.at("f").get<int>();
  r.a = j.at("a").get<int>();
  r.nu = j.at("nu").get<std::vector<int>>();
  r.mu = j.at("mu").get<std::vector<int>>();
  r.omega_oneline = j.at("omega_oneline").get<std::vector<int>>();
  r.omega_word = j.at("omega_word").get<std::vector<int>>();
  r.dim = j.at("dim").get<int>();
  if (!j.at("cycle_class").is_null()) r.cycle_class = j.at("cycle_class").get<std::string>();
  return r;
}

}  // namespace

std::string record_to_json(const Record& r) { return record_json(r).dump(2); }

Record record_from_json(const std::string& json_text) {
  return record_from(nlohmann::json::parse(json_text));
}

std::string render_records_json(const std::vector<Record>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Record& r : records) arr.push_back(record_json(r));
  return arr.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180 quoting; array cells use the canonical renderings)

namespace {

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string word_string(const std::vector<int>& letters, int g) {
  return render_word(WeylWord{g, letters});
}

std::string oneline_string(const Record& r) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < r.omega_oneline.size(); ++i) {
    if (i) os << ',';
    os << r.omega_oneline[i];
  }
  os << '>';
  return os.str();
}

std::string nu_string(const Record& r) { return render_nu(FinalType{r.g, r.nu}); }
std::string mu_string(const Record& r) { return render_mu(YoungType{r.g, r.mu}); }

}  // namespace

std::string render_records_csv(const std::vector<Record>& records) {
  std::ostringstream os;
  os << "g,name,codim,f,a,nu,mu,omega_oneline,omega_word,dim,cycle_class\n";
  for (const Record& r : records) {
    os << r.g << ',' << csv_quote(r.name.value_or("")) << ',' << r.codim << ',' << r.f << ','
       << r.a << ',' << csv_quote(nu_string(r)) << ',' << csv_quote(mu_string(r)) << ','
       << csv_quote(oneline_string(r)) << ',' << csv_quote(word_string(r.omega_word, r.g)) << ','
       << r.dim << ',' << csv_quote(r.cycle_class.value_or("")) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Text tables

namespace {

// Column widths in code points, so the lambda/superscript glyphs align.
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xc0) != 0x80) ++n;
  return n;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = display_width(header[c]);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], display_width(row[c]));
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - display_width(row[c]) + 2, ' ');
    }
    os << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return os.str();
}

std::string human_class(const std::string& machine) {
  // "(p-1)*(p^2+1)*l1*l2" -> "(p-1)(p^2+1)λ1λ2"
  std::string out;
  for (std::size_t i = 0; i < machine.size(); ++i) {
    if (machine[i] == '*') continue;
    if (machine[i] == 'l') out += "\xce\xbb";
    else out += machine[i];
  }
  return out;
}

}  // namespace

std::string render_records_text(const std::vector<Record>& records, bool table_style) {
  const bool with_names = std::any_of(records.begin(), records.end(),
                                      [](const Record& r) { return r.name.has_value(); });
  const bool with_classes = std::any_of(records.begin(), records.end(),
                                        [](const Record& r) { return r.cycle_class.has_value(); });
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (table_style) {
    header = {"name", "codim", "f", "a", "nu", "mu", "omega"};
    if (with_classes) header.push_back("cycle_class");
    for (const Record& r : records) {
      std::vector<std::string> row{
          r.name ? render_name_unicode(parse_name(*r.name)) : "-", std::to_string(r.codim),
          std::to_string(r.f), std::to_string(r.a), nu_string(r), mu_string(r),
          word_string(r.omega_word, r.g)};
      if (with_classes) row.push_back(r.cycle_class ? human_class(*r.cycle_class) : "-");
      rows.push_back(std::move(row));
    }
  } else {
    header = {"nu", "mu", "f", "a", "dim", "codim", "omega", "word"};
    if (with_names) header.push_back("name");
    for (const Record& r : records) {
      std::vector<std::string> row{nu_string(r),
                                   mu_string(r),
                                   std::to_string(r.f),
                                   std::to_string(r.a),
                                   std::to_string(r.dim),
                                   std::to_string(r.codim),
                                   oneline_string(r),
                                   word_string(r.omega_word, r.g)};
      if (with_names) row.push_back(r.name.value_or("-"));
      rows.push_back(std::move(row));
    }
  }
  return render_table(header, rows);
}

// ---------------------------------------------------------------------------
// Hasse diagram exports

std::string render_hasse_text(const HasseDiagram& d) {
  std::ostringstream os;
  for (const auto& [from, to] : d.edges)
    os << render_mu(from) << " -> " << render_mu(to) << '\n';
  return os.str();
}

std::string render_hasse_csv(const HasseDiagram& d) {
  std::ostringstream os;
  os << "from,to\n";
  for (const auto& [from, to] : d.edges)
    os << csv_quote(render_mu(from)) << ',' << csv_quote(render_mu(to)) << '\n';
  return os.str();
}

std::string render_hasse_json(const HasseDiagram& d) {
  nlohmann::json j;
  j["g"] = d.g;
  nlohmann::json nodes = nlohmann::json::array();
  for (const YoungType& node : d.nodes) nodes.push_back(node.mu);
  j["nodes"] = nodes;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [from, to] : d.edges)
    edges.push_back(nlohmann::json::array({from.mu, to.mu}));
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

std::string render_hasse_dot(const HasseDiagram& d, bool with_names) {
  std::ostringstream os;
  os << "digraph hasse_g" << d.g << " {\n  rankdir=TB;\n  node [shape=box];\n";
  for (const YoungType& node : d.nodes) {
    os << "  \"" << render_mu(node) << '"';
    if (with_names && d.g <= 4) {
      const GroupSchemeName name = classify(young_to_final(node));
      os << " [label=\"" << render_mu(node) << "\\n" << render_name(name) << "\"]";
    }
    os << ";\n";
  }
  for (const auto& [from, to] : d.edges)
    os << "  \"" << render_mu(from) << "\" -> \"" << render_mu(to) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace eo
