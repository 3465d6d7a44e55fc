#pragma once

// Stratum records as the CLI prints them, plus the text/csv/json/dot
// renderers.  Field set and JSON names are fixed:
//
//   g, name, codim, f, a, nu, mu, omega_oneline, omega_word, dim,
//   cycle_class
//
// (name and cycle_class are null when unknown: names require g <= 4 or an
// explicit name input, stored cycle classes exist for g <= 3.)  All
// renderings are deterministic: fixed orderings, no timestamps.

#include <optional>
#include <string>
#include <vector>

#include "eostrata/poset.hpp"
#include "eostrata/strata.hpp"

namespace eo {

struct Record {
  int g = 0;
  std::optional<std::string> name;
  int codim = 0;
  int f = 0;
  int a = 0;
  std::vector<int> nu;
  std::vector<int> mu;
  std::vector<int> omega_oneline;
  std::vector<int> omega_word;
  int dim = 0;
  std::optional<std::string> cycle_class;

  friend bool operator==(const Record&, const Record&) = default;
};

// Record for one final type: conversions and invariants from the
// combinatorial side, omega via from_young, the word via greedy reduction,
// name and cycle class from the classification tables when available.
Record record_for(const FinalType& t);

// All 2^g records in canonical (nu-lexicographic) order.
std::vector<Record> enumerate_records(int g);

// Table order: the stored classification order for g <= 4; otherwise
// codim ascending, f descending, a descending, nu lexicographic.  For
// g <= 4 the word column is the stored one.
std::vector<Record> table_records(int g);

std::string record_to_json(const Record& r);
Record record_from_json(const std::string& json_text);

std::string render_records_text(const std::vector<Record>& records, bool table_style);
std::string render_records_csv(const std::vector<Record>& records);
std::string render_records_json(const std::vector<Record>& records);

// Hasse diagram exports.  Edges print as "{2} -> {2,1}"; DOT nodes are the
// canonical mu strings, optionally labelled with catalog names (g <= 4).
std::string render_hasse_text(const HasseDiagram& d);
std::string render_hasse_csv(const HasseDiagram& d);
std::string render_hasse_json(const HasseDiagram& d);
std::string render_hasse_dot(const HasseDiagram& d, bool with_names);

}  // namespace eo
