#include "pniep_cli/documents.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include <json.hpp>

#include "pniep/error.hpp"

namespace pniep::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::ParseError, message); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where + ": not finite");
  return v;
}

SpectrumDocument from_json(const json& j) {
  if (!j.is_object()) fail("spectrum document must be a JSON object");
  if (!j.contains("spectrum")) fail("missing \"spectrum\"");
  const json& arr = j.at("spectrum");
  if (!arr.is_array() || arr.empty()) fail("\"spectrum\" must be a non-empty array");
  SpectrumDocument doc;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "spectrum[" + std::to_string(k) + "]";
    const json& e = arr[k];
    if (e.is_number()) {
      doc.values.emplace_back(finite_number(e, where), 0.0);
      continue;
    }
    if (!e.is_array() || e.size() != 2) fail(where + ": expected a [re, im] pair");
    doc.values.emplace_back(finite_number(e[0], where + "[0]"), finite_number(e[1], where + "[1]"));
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("notes") && j["notes"].is_string()) doc.notes = j["notes"].get<std::string>();
  return doc;
}

double number(std::string_view s, std::string_view token) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    fail("cannot read '" + std::string(token) + "' as a complex number");
  }
  return v;
}

std::string normalize(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      out += '-';
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

SpectrumDocument from_text(std::string_view raw) {
  const std::string text = normalize(raw);
  std::vector<std::string> tokens;
  const bool commas = text.find_first_of(",;") != std::string::npos;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '{' || ch == '}' || ch == '[' || ch == ']') continue;
    if (commas ? (ch == ',' || ch == ';' || ch == '\n') : std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  flush();
  if (tokens.empty()) fail("empty spectrum");
  SpectrumDocument doc;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    try {
      doc.values.push_back(parse_complex(tokens[k]));
    } catch (const Error& e) {
      fail("element " + std::to_string(k) + ": " + e.message());
    }
  }
  return doc;
}

bool looks_like_json(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{';
  }
  return false;
}

Matrix matrix_from_json(const json& j) {
  const json* rows = &j;
  std::optional<std::size_t> n;
  if (j.is_object()) {
    if (j.contains("matrix")) return matrix_from_json(j.at("matrix"));
    if (!j.contains("rows")) fail("matrix document needs \"rows\"");
    rows = &j.at("rows");
    if (j.contains("n")) {
      if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) fail("\"n\" must be a non-negative integer");
      n = j["n"].get<std::size_t>();
    }
  }
  if (!rows->is_array() || rows->empty()) fail("matrix rows must be a non-empty array");
  std::vector<std::vector<double>> values;
  for (std::size_t i = 0; i < rows->size(); ++i) {
    const json& row = (*rows)[i];
    if (!row.is_array()) fail("rows[" + std::to_string(i) + "] is not an array");
    if (row.size() != rows->size()) {
      fail("matrix is not square: row " + std::to_string(i) + " has " +
           std::to_string(row.size()) + " entries, expected " + std::to_string(rows->size()));
    }
    std::vector<double> r;
    for (std::size_t k = 0; k < row.size(); ++k) {
      r.push_back(finite_number(row[k], "rows[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
    values.push_back(std::move(r));
  }
  if (n && *n != values.size()) fail("\"n\" does not match the number of rows");
  return Matrix::from_rows(values);
}

}  // namespace

Complex parse_complex(std::string_view token) {
  std::string t(token);
  if (t.empty()) fail("empty element");
  const char last = t.back();
  if (last != 'i' && last != 'j') return {number(t, token), 0.0};
  t.pop_back();
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? std::string() : t.substr(0, split);
  std::string im = split == std::string::npos ? t : t.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : number(re, token), number(im, token)};
}

SpectrumDocument parse_spectrum_document(std::string_view text, Format format) {
  if (format == Format::Text && !looks_like_json(text)) return from_text(text);
  return from_json(parse_json(text));
}

std::vector<SpectrumDocument> parse_batch(std::string_view text, Format format) {
  std::vector<SpectrumDocument> docs;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    const json all = parse_json(text);
    for (std::size_t k = 0; k < all.size(); ++k) {
      try {
        docs.push_back(from_json(all[k]));
      } catch (const Error& e) {
        fail("batch entry " + std::to_string(k) + ": " + e.message());
      }
    }
    return docs;
  }
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      docs.push_back(parse_spectrum_document(line, format));
    } catch (const Error& e) {
      fail("batch line " + std::to_string(line_no) + ": " + e.message());
    }
  }
  if (docs.empty()) fail("batch input is empty");
  return docs;
}

Matrix parse_matrix_document(std::string_view text) { return matrix_from_json(parse_json(text)); }

std::optional<SpectrumDocument> embedded_spectrum(std::string_view text) {
  const json j = parse_json(text);
  if (j.is_object() && j.contains("spectrum")) return from_json(j);
  return std::nullopt;
}

}  // namespace pniep::cli
