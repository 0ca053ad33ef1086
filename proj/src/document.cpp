#include "finito/document.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "finito/errors.hpp"
#include "finito/order_complex.hpp"

namespace finito {

namespace {

using json = nlohmann::json;

bool ident_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<std::string> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '<') {
      tokens.emplace_back("<");
      ++i;
    } else if (ident_char(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      tokens.emplace_back(line.substr(i, j - i));
      i = j;
    } else {
      throw ParseError(lineno, std::string("unexpected character '") + c + "'");
    }
  }
  return tokens;
}

class LabelTable {
 public:
  Element intern(const std::string& label) {
    auto [it, inserted] = index_.emplace(label, labels_.size());
    if (inserted) labels_.push_back(label);
    return it->second;
  }
  std::vector<std::string> release() { return std::move(labels_); }

 private:
  std::map<std::string, Element> index_;
  std::vector<std::string> labels_;
};

PosetDocument parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  PosetDocument doc;
  try {
    doc.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& c : j.at("covers")) {
      const auto lo = c.at(0).get<Element>();
      const auto hi = c.at(1).get<Element>();
      if (lo >= doc.labels.size() || hi >= doc.labels.size()) {
        throw ParseError(1, "cover index out of range");
      }
      doc.covers.emplace_back(lo, hi);
    }
    if (j.contains("base") && !j.at("base").is_null()) {
      const auto base = j.at("base").get<std::string>();
      const auto it = std::find(doc.labels.begin(), doc.labels.end(), base);
      if (it == doc.labels.end()) throw ParseError(1, "unknown basepoint '" + base + "'");
      doc.base = static_cast<Element>(it - doc.labels.begin());
    }
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("malformed poset JSON: ") + e.what());
  }
  for (const auto& l : doc.labels) {
    if (!is_identifier(l)) throw ParseError(1, "invalid identifier '" + l + "'");
  }
  return doc;
}

}  // namespace

bool is_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), ident_char);
}

PosetDocument parse_poset(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);

  PosetDocument doc;
  LabelTable table;
  std::set<std::pair<Element, Element>> seen;
  std::optional<std::pair<std::string, std::size_t>> base_ref;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto lead = line.find_first_not_of(" \t\r");
    if (lead == std::string_view::npos) continue;
    if (line[lead] == '@') {
      auto rest = line.substr(lead + 1);
      std::istringstream words{std::string(rest)};
      std::string keyword, label, extra;
      words >> keyword >> label;
      if (keyword != "base") throw ParseError(lineno, "unknown directive '@" + keyword + "'");
      if (!is_identifier(label) || (words >> extra)) {
        throw ParseError(lineno, "expected '@base <identifier>'");
      }
      base_ref.emplace(label, lineno);
      continue;
    }

    const auto tokens = tokenize(line, lineno);
    if (tokens.size() == 1 && tokens[0] != "<") {
      table.intern(tokens[0]);
    } else if (tokens.size() == 3 && tokens[1] == "<" && tokens[0] != "<" && tokens[2] != "<") {
      const Element lo = table.intern(tokens[0]);
      const Element hi = table.intern(tokens[2]);
      if (!seen.insert({lo, hi}).second) {
        doc.warnings.push_back("line " + std::to_string(lineno) + ": repeated cover " + tokens[0] +
                               " < " + tokens[2] + " ignored");
        continue;
      }
      doc.covers.emplace_back(lo, hi);
    } else {
      throw ParseError(lineno, "expected '<identifier>' or '<identifier> < <identifier>'");
    }
  }
  doc.labels = table.release();
  if (base_ref) {
    const auto it = std::find(doc.labels.begin(), doc.labels.end(), base_ref->first);
    if (it == doc.labels.end()) {
      throw ParseError(base_ref->second, "basepoint '" + base_ref->first + "' is not a point");
    }
    doc.base = static_cast<Element>(it - doc.labels.begin());
  }
  return doc;
}

FinitePoset to_poset(const PosetDocument& doc) {
  return from_covers(HasseDiagram{doc.labels.size(), doc.covers, doc.labels});
}

FinitePoset load_poset(std::string_view text) { return to_poset(parse_poset(text)); }

Format parse_format(std::string_view name) {
  if (name == "poset") return Format::poset;
  if (name == "json") return Format::json;
  if (name == "dot") return Format::dot;
  if (name == "faces") return Format::faces;
  throw Error("unknown format '" + std::string(name) + "' (expected poset, json, dot or faces)");
}

std::string emit(const FinitePoset& p, Format format, std::optional<Element> base) {
  const HasseDiagram h = hasse(p);
  std::ostringstream out;
  switch (format) {
    case Format::poset: {
      std::vector<bool> touched(p.size(), false);
      for (auto [lo, hi] : h.covers) touched[lo] = touched[hi] = true;
      for (Element x = 0; x < p.size(); ++x) {
        if (!touched[x]) out << p.label(x) << '\n';
      }
      for (auto [lo, hi] : h.covers) out << p.label(lo) << " < " << p.label(hi) << '\n';
      if (base) out << "@base " << p.label(*base) << '\n';
      break;
    }
    case Format::json: {
      json j;
      j["labels"] = p.labels();
      j["covers"] = json::array();
      for (auto [lo, hi] : h.covers) j["covers"].push_back({lo, hi});
      j["base"] = base ? json(p.label(*base)) : json(nullptr);
      out << j.dump() << '\n';
      break;
    }
    case Format::dot: {
      const auto level = levels(p);
      const std::size_t top = *std::max_element(level.begin(), level.end());
      out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
      for (std::size_t l = 0; l <= top; ++l) {
        out << "  { rank=same;";
        for (Element x = 0; x < p.size(); ++x) {
          if (level[x] == l) out << " \"" << p.label(x) << "\";";
        }
        out << " }\n";
      }
      for (auto [lo, hi] : h.covers) {
        out << "  \"" << p.label(lo) << "\" -> \"" << p.label(hi) << "\";\n";
      }
      out << "}\n";
      break;
    }
    case Format::faces:
      write_faces(out, order_complex(p));
      break;
  }
  return out.str();
}

std::vector<Element> parse_map(std::string_view text, const FinitePoset& src,
                               const FinitePoset& dst) {
  auto find = [](const FinitePoset& p, const std::string& label) -> std::optional<Element> {
    const auto& ls = p.labels();
    const auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) return std::nullopt;
    return static_cast<Element>(it - ls.begin());
  };
  std::vector<std::optional<Element>> image(src.size());
  std::size_t lineno = 0;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError(lineno, "expected '<src> -> <dst>'");
    std::istringstream lhs(line.substr(0, arrow)), rhs(line.substr(arrow + 2));
    std::string a, b, extra;
    lhs >> a;
    rhs >> b;
    if (!is_identifier(a) || !is_identifier(b) || (lhs >> extra) || (rhs >> extra)) {
      throw ParseError(lineno, "expected '<src> -> <dst>'");
    }
    const auto x = find(src, a);
    const auto y = find(dst, b);
    if (!x) throw ParseError(lineno, "'" + a + "' is not a point of the source");
    if (!y) throw ParseError(lineno, "'" + b + "' is not a point of the target");
    if (image[*x] && *image[*x] != *y) throw ParseError(lineno, "'" + a + "' mapped twice");
    image[*x] = *y;
  }
  std::vector<Element> out;
  for (Element x = 0; x < src.size(); ++x) {
    if (!image[x]) throw ParseError(lineno, "no image given for '" + src.label(x) + "'");
    out.push_back(*image[x]);
  }
  return out;
}

}  // namespace finito
