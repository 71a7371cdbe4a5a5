#include "congruence/report.hpp"

#include <json.hpp>

#include "congruence/error.hpp"

namespace congruence {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kColumns[] = {"claim", "p", "modulus", "lhs", "rhs", "holds", "ns"};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (quoted) throw Error(ErrorCode::InvalidArgument, "unterminated quoted CSV field");
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
T parse_integer(const std::string& s) {
  try {
    std::size_t used = 0;
    T v;
    if constexpr (std::is_signed_v<T>) v = std::stoll(s, &used);
    else v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "not an integer: '" + s + "'");
  }
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string to_json(const std::vector<CongruenceReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json o;
    o["claim"] = r.claim;
    o["p"] = r.p;
    o["modulus"] = r.modulus;
    o["lhs"] = r.lhs;
    o["rhs"] = r.rhs;
    o["holds"] = r.holds;
    o["ns"] = r.ns;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<CongruenceReport> reports_from_json(std::string_view text) {
  std::vector<CongruenceReport> out;
  try {
    const Json arr = Json::parse(text);
    if (!arr.is_array()) throw Error(ErrorCode::InvalidArgument, "expected a JSON array of reports");
    for (const auto& o : arr) {
      CongruenceReport r;
      r.claim = o.at("claim").get<std::string>();
      r.p = o.at("p").get<std::uint64_t>();
      r.modulus = o.at("modulus").get<std::string>();
      r.lhs = o.at("lhs").get<std::string>();
      r.rhs = o.at("rhs").get<std::string>();
      r.holds = o.at("holds").get<bool>();
      r.ns = o.at("ns").get<std::int64_t>();
      out.push_back(std::move(r));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

std::string to_csv(const std::vector<CongruenceReport>& reports) {
  std::string out = "claim,p,modulus,lhs,rhs,holds,ns\n";
  for (const auto& r : reports) {
    out += csv_field(r.claim) + ',' + std::to_string(r.p) + ',' + csv_field(r.modulus) + ',' + csv_field(r.lhs) + ',' +
           csv_field(r.rhs) + ',' + (r.holds ? "true" : "false") + ',' + std::to_string(r.ns) + '\n';
  }
  return out;
}

std::vector<CongruenceReport> reports_from_csv(std::string_view text) {
  auto rows = parse_csv(text);
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "missing CSV header");
  const std::vector<std::string> header(std::begin(kColumns), std::end(kColumns));
  if (rows.front() != header) throw Error(ErrorCode::InvalidArgument, "unexpected CSV header");
  std::vector<CongruenceReport> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != header.size()) {
      throw Error(ErrorCode::InvalidArgument, "CSV row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                                  " fields");
    }
    if (row[5] != "true" && row[5] != "false") throw Error(ErrorCode::InvalidArgument, "holds must be true/false");
    CongruenceReport r;
    r.claim = row[0];
    r.p = parse_integer<std::uint64_t>(row[1]);
    r.modulus = row[2];
    r.lhs = row[3];
    r.rhs = row[4];
    r.holds = row[5] == "true";
    r.ns = parse_integer<std::int64_t>(row[6]);
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_text(const std::vector<CongruenceReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += r.holds ? "holds " : "FAILS ";
    out += r.claim + " p=" + std::to_string(r.p) + " mod " + r.modulus + "\n";
    out += "  lhs " + r.lhs + "\n  rhs " + r.rhs + "\n";
    if (!r.holds) {
      for (const auto& [name, value] : r.details) out += "  " + name + ": " + value + "\n";
    }
  }
  return out;
}

std::string format_reports(const std::vector<CongruenceReport>& reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return to_json(reports);
    case OutputFormat::Csv: return to_csv(reports);
    case OutputFormat::Text: return to_text(reports);
  }
  return {};
}

}  // namespace congruence
