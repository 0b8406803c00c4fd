#include "qfock/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qfock {

namespace {

const char* const kZero = "·";

std::string entry_text(const LaurentPoly& c) { return c.is_zero() ? kZero : to_string(c); }

// Display width in characters; the zero marker is two bytes but one column.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w - width(s), ' '); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> w;
  for (const auto& row : cells) {
    if (w.size() < row.size()) w.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], width(row[c]));
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += c + 1 == row.size() ? row[c] : pad(row[c], w[c]);
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "table") return Format::table;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or table)");
}

nlohmann::ordered_json matrix_json(const CanonicalBasisMatrix& m, const Provenance* provenance) {
  nlohmann::ordered_json j;
  j["h"] = m.block().h();
  j["core"] = to_string(m.block().core());
  j["weight"] = m.block().weight();
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : m.rows()) j["rows"].push_back(to_string(r));
  j["cols"] = nlohmann::ordered_json::array();
  for (const auto& c : m.cols()) j["cols"].push_back(to_string(c));
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& row : m.entries()) {
    auto jr = nlohmann::ordered_json::array();
    for (const auto& e : row) jr.push_back(to_string(e));
    j["entries"].push_back(std::move(jr));
  }
  if (provenance) j["provenance"] = *provenance;
  return j;
}

nlohmann::ordered_json vector_json(const FockVector& v) {
  nlohmann::ordered_json j;
  j["h"] = v.params().h();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [lambda, c] : v.terms())
    j["terms"].push_back({{"partition", to_string(lambda)}, {"coeff", to_string(c)}});
  return j;
}

std::string render_matrix(const CanonicalBasisMatrix& m, Format f, const Provenance* provenance) {
  if (f == Format::json) return matrix_json(m, provenance).dump(2) + "\n";
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{f == Format::csv ? "lambda\\mu" : ""};
  for (const auto& c : m.cols()) header.push_back(to_string(c));
  cells.push_back(std::move(header));
  for (std::size_t r = 0; r < m.rows().size(); ++r) {
    std::vector<std::string> line{to_string(m.rows()[r])};
    for (const auto& e : m.entries()[r]) line.push_back(entry_text(e));
    cells.push_back(std::move(line));
  }
  if (f == Format::csv) {
    std::string out;
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_field(row[c]);
      out += '\n';
    }
    return out;
  }
  std::string out = render_table(cells);
  if (provenance) {
    std::vector<std::vector<std::string>> notes;
    for (std::size_t c = 0; c < m.cols().size(); ++c)
      for (std::size_t r = 0; r < m.rows().size(); ++r) {
        const std::string& why = (*provenance)[r][c];
        if (why.empty()) continue;
        notes.push_back({"d" + to_string(m.rows()[r]) + to_string(m.cols()[c]),
                         to_string(m.entries()[r][c]), why});
      }
    out += "\n" + render_table(notes);
  }
  return out;
}

std::string render_vector(const FockVector& v, Format f) {
  if (f == Format::json) return vector_json(v).dump(2) + "\n";
  if (f == Format::table) return to_string(v) + "\n";
  std::string out = "partition,coeff\n";
  for (const auto& [lambda, c] : v.terms())
    out += csv_field(to_string(lambda)) + "," + csv_field(to_string(c)) + "\n";
  return out;
}

}  // namespace qfock
