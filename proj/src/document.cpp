#include "franel/document.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include <json.hpp>

namespace franel {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(const json& j, const char* what) {
  if (!j.is_string()) throw DocumentError(std::string(what) + ": expected a decimal string");
  const std::string s = j.get<std::string>();
  if (!is_decimal(s)) throw DocumentError(std::string(what) + ": not a decimal integer: " + s);
  return Integer(s, 10);
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw DocumentError(std::string("expected an object holding '") + key + "'");
  const auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(std::string("missing field '") + key + "'");
  return *it;
}

int parse_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw DocumentError(std::string(what) + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < 0 || v > 1000000) throw DocumentError(std::string(what) + ": out of range");
  return static_cast<int>(v);
}

ordered poly_to_json(const BiPoly& p) {
  ordered arr = ordered::array();
  for (const auto& [m, c] : p.terms()) {
    arr.push_back({{"coef", c.get_str()}, {"deg_n", m.deg_n}, {"deg_k", m.deg_k}});
  }
  return arr;
}

BiPoly poly_from_json(const json& arr, const char* what) {
  if (!arr.is_array()) throw DocumentError(std::string(what) + ": expected a list of monomials");
  BiPoly p;
  for (const auto& rec : arr) {
    const Integer c = parse_integer(field(rec, "coef"), what);
    const int dn = parse_int(field(rec, "deg_n"), what);
    const int dk = parse_int(field(rec, "deg_k"), what);
    if (c == 0) throw DocumentError(std::string(what) + ": zero coefficient stored");
    if (p.coeff(dn, dk) != 0) throw DocumentError(std::string(what) + ": repeated monomial");
    p += BiPoly::monomial(c, dn, dk);
  }
  return p;
}

}  // namespace

std::string serialize(const OperatorDocument& doc) {
  ordered coeffs = ordered::array();
  for (const auto& c : doc.op.coeffs()) {
    ordered arr = ordered::array();
    for (const auto& x : c.coeffs()) arr.push_back(x.get_str());
    coeffs.push_back(std::move(arr));
  }
  ordered j;
  j["schema_version"] = OperatorDocument::kSchemaVersion;
  j["s"] = doc.s;
  j["order"] = doc.op.order();
  j["coeffs"] = std::move(coeffs);
  j["certificate"] = {{"num", poly_to_json(doc.certificate.R.num())}, {"den", poly_to_json(doc.certificate.R.den())}};
  j["provenance"] = {
      {"tool_version", doc.provenance.tool_version},
      {"timestamp", doc.provenance.timestamp},
      {"r_max", doc.provenance.r_max},
  };
  return j.dump(2) + "\n";
}

OperatorDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  const int version = parse_int(field(j, "schema_version"), "schema_version");
  if (version != OperatorDocument::kSchemaVersion) {
    throw DocumentError("unsupported schema_version " + std::to_string(version));
  }
  OperatorDocument doc;
  doc.s = parse_int(field(j, "s"), "s");
  if (doc.s < 1) throw DocumentError("s must be at least 1");
  const int order = parse_int(field(j, "order"), "order");

  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order) + 1) {
    throw DocumentError("coeffs must list order + 1 polynomials");
  }
  std::vector<UPoly> polys;
  for (const auto& c : coeffs) {
    if (!c.is_array()) throw DocumentError("coeffs: each polynomial must be a list");
    std::vector<Integer> v;
    for (const auto& x : c) v.push_back(parse_integer(x, "coeffs"));
    polys.emplace_back(std::move(v));
  }
  if (polys.back().is_zero()) throw DocumentError("coeffs: leading coefficient is zero");
  doc.op = RecurrenceOperator(std::move(polys));

  const json& cert = field(j, "certificate");
  BiPoly num = poly_from_json(field(cert, "num"), "certificate.num");
  BiPoly den = poly_from_json(field(cert, "den"), "certificate.den");
  if (den.is_zero()) throw DocumentError("certificate.den is zero");
  doc.certificate = Certificate{RatFunc(std::move(num), std::move(den))};

  const json& prov = field(j, "provenance");
  const json& tv = field(prov, "tool_version");
  const json& ts = field(prov, "timestamp");
  if (!tv.is_string() || !ts.is_string()) throw DocumentError("provenance: expected strings");
  doc.provenance.tool_version = tv.get<std::string>();
  doc.provenance.timestamp = ts.get<std::string>();
  doc.provenance.r_max = parse_int(field(prov, "r_max"), "provenance.r_max");
  return doc;
}

std::string current_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != nullptr && *end == '\0' && v >= 0) t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string tool_version() { return FRANEL_VERSION; }

std::string cache_file_name(int s, int r_max) {
  std::ostringstream os;
  os << "telescope-s" << s << "-r" << r_max << "-v" << tool_version() << "-" << kNormalizationTag << ".json";
  return os.str();
}

std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("FRANEL_CACHE_DIR"); d != nullptr && *d != '\0') return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d != nullptr && *d != '\0') {
    return std::filesystem::path(d) / "franel";
  }
  if (const char* d = std::getenv("HOME"); d != nullptr && *d != '\0') {
    return std::filesystem::path(d) / ".cache" / "franel";
  }
  return ".franel-cache";
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(static_cast<long long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot rename into " + path.string());
  }
}

}  // namespace franel
