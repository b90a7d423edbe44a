#include "alphatree/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "alphatree/approx.hpp"

namespace alphatree {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

WeightList parse_weights_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_array())
    throw std::invalid_argument("expected a JSON object with a \"weights\" array");
  std::vector<std::string> entries;
  for (size_t i = 0; i < doc["weights"].size(); ++i) {
    const auto& v = doc["weights"][i];
    if (v.is_number_unsigned() || v.is_number_integer()) {
      const long long x = v.get<long long>();
      if (x <= 0)
        throw std::invalid_argument("weights[" + std::to_string(i) + "]: non-positive weight");
      entries.push_back(std::to_string(x));
    } else if (v.is_string()) {
      entries.push_back(v.get<std::string>());
    } else {
      throw std::invalid_argument("weights[" + std::to_string(i) +
                                  "]: expected an integer or a decimal string");
    }
  }
  if (entries.empty()) throw std::invalid_argument("\"weights\" array is empty");
  try {
    return WeightList::from_strings(entries);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("weights: ") + e.what());
  }
}

WeightList parse_weights_csv(const std::string& text) {
  std::vector<std::string> entries;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string entry = line.substr(begin, end - begin + 1);
    try {
      WeightList::from_strings({entry});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ", column " +
                                  std::to_string(begin + 1) + ": " + e.what());
    }
    entries.push_back(entry);
  }
  if (entries.empty()) throw std::invalid_argument("CSV input holds no weights");
  return WeightList::from_strings(entries);
}

WeightList parse_weights_auto(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
    return parse_weights_json(text);
  return parse_weights_csv(text);
}

WeightList parse_weights_inline(const std::string& csv) {
  std::vector<std::string> entries;
  std::string cur;
  std::istringstream is(csv);
  while (std::getline(is, cur, ',')) {
    const auto begin = cur.find_first_not_of(" \t");
    if (begin == std::string::npos)
      throw std::invalid_argument("inline weights: empty entry");
    const auto end = cur.find_last_not_of(" \t");
    entries.push_back(cur.substr(begin, end - begin + 1));
  }
  if (entries.empty()) throw std::invalid_argument("inline weights: nothing to parse");
  return WeightList::from_strings(entries);
}

namespace {

ordered_json summary_json(const CodeBook& cb, const WeightList& w) {
  const Rational cost = average_length(codeword_lengths(cb), w);
  ordered_json s;
  s["cost"] = fraction_string(cost);
  s["cost_float"] = format_double(to_double(cost));
  if (w.is_normalized()) {
    s["entropy"] = format_double(entropy(w));
    ordered_json b;
    b["gilbert_moore"] = format_double(bound_gm(w));
    b["horibe"] = format_double(bound_horibe(w));
    b["yeung"] = format_double(bound_yeung(w));
    b["bddv"] = format_double(bound_bddv(w));
    s["bounds"] = std::move(b);
  }
  return s;
}

}  // namespace

ordered_json codebook_json(const CodeBook& cb, const WeightList& w) {
  if (static_cast<int>(cb.size()) != w.size())
    throw std::invalid_argument("codebook_json: codebook/weight count mismatch");
  if (!validate_codebook(cb).ok())
    throw std::invalid_argument("codebook_json: invalid codebook");
  ordered_json doc;
  doc["n"] = cb.size();
  ordered_json records = ordered_json::array();
  for (size_t i = 0; i < cb.size(); ++i) {
    ordered_json r;
    r["index"] = i + 1;
    r["codeword"] = cb[i];
    r["length"] = cb[i].size();
    r["weight"] = fraction_string(w.weight(static_cast<int>(i)));
    records.push_back(std::move(r));
  }
  doc["code"] = std::move(records);
  doc["summary"] = summary_json(cb, w);
  return doc;
}

std::string emit_codebook(const CodeBook& cb, const WeightList& w, OutputFormat format) {
  if (static_cast<int>(cb.size()) != w.size())
    throw std::invalid_argument("emit_codebook: codebook/weight count mismatch");
  const auto rep = validate_codebook(cb);
  if (!rep.ok()) throw std::invalid_argument("emit_codebook: invalid codebook");

  switch (format) {
    case OutputFormat::Dot:
      return to_dot(cb, &w);
    case OutputFormat::Table: {
      std::ostringstream os;
      size_t wide = 8;
      for (const auto& word : cb) wide = std::max(wide, word.size());
      char head[128];
      std::snprintf(head, sizeof(head), "%-5s  %-*s  %-6s  %s\n", "index",
                    static_cast<int>(wide), "codeword", "length", "weight");
      os << head;
      for (size_t i = 0; i < cb.size(); ++i) {
        char row[256];
        std::snprintf(row, sizeof(row), "%-5zu  %-*s  %-6zu  %s\n", i + 1,
                      static_cast<int>(wide), cb[i].c_str(), cb[i].size(),
                      fraction_string(w.weight(static_cast<int>(i))).c_str());
        os << row;
      }
      const auto s = summary_json(cb, w);
      os << "cost = " << s["cost"].get<std::string>() << " ("
         << s["cost_float"].get<std::string>() << ")\n";
      if (s.contains("entropy")) {
        os << "entropy = " << s["entropy"].get<std::string>() << "\n";
        os << "bounds: gilbert_moore = " << s["bounds"]["gilbert_moore"].get<std::string>()
           << ", horibe = " << s["bounds"]["horibe"].get<std::string>()
           << ", yeung = " << s["bounds"]["yeung"].get<std::string>()
           << ", bddv = " << s["bounds"]["bddv"].get<std::string>() << "\n";
      }
      return os.str();
    }
    case OutputFormat::Json:
    default:
      return codebook_json(cb, w).dump(2) + "\n";
  }
}

}  // namespace alphatree
