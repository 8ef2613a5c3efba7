#include "clhopf/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clhopf/exterior/blade.hpp"

namespace clhopf::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError(key + " must be a non-negative integer, got '" + value + "'");
  try {
    return std::stoull(value);
  } catch (const std::out_of_range&) {
    throw InputError(key + " is out of range: '" + value + "'");
  }
}

CoefficientMode parse_mode(const std::string& value) {
  if (value == "rational") return CoefficientMode::Rational;
  if (value == "symbolic") return CoefficientMode::Symbolic;
  throw InputError("mode must be 'rational' or 'symbolic', got '" + value + "'");
}

void set_key(JobConfig& c, const std::string& key, const std::string& value, int line) {
  const std::string where = line > 0 ? "line " + std::to_string(line) + ": " : "";
  if (key == "dim") {
    c.dim = static_cast<int>(parse_unsigned("dim", value));
  } else if (key == "mode") {
    c.mode = parse_mode(value);
  } else if (key == "symbols") {
    c.symbols = split_list(value);
  } else if (key == "commands") {
    c.commands = split_list(value);
  } else if (key == "specialize") {
    c.specializations.push_back(parse_specialization(value));
  } else if (key == "seed") {
    c.seed = parse_unsigned("seed", value);
  } else if (key == "count") {
    c.count = parse_unsigned("count", value);
  } else if (key == "output") {
    c.output = value;
  } else if (key == "format") {
    c.format = value;
  } else {
    throw InputError(where + "unknown key '" + key + "'");
  }
}

JobConfig parse_text(const std::string& text) {
  JobConfig c;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  TextMatrix* block = nullptr;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) {
      block = nullptr;
      continue;
    }
    if (line.back() == ':' && line.find('=') == std::string::npos) {
      const std::string name = trim(line.substr(0, line.size() - 1));
      if (name != "eta" && name != "xi") throw InputError("line " + std::to_string(line_no) + ": unknown block '" + name + "'");
      if (!seen.insert(name).second) throw InputError("line " + std::to_string(line_no) + ": duplicate block '" + name + "'");
      auto& slot = name == "eta" ? c.eta : c.xi;
      slot.emplace();
      block = &*slot;
      continue;
    }
    if (const auto eq = line.find('='); eq != std::string::npos) {
      block = nullptr;
      const std::string key = trim(line.substr(0, eq));
      if (key != "specialize" && !seen.insert(key).second)
        throw InputError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
      set_key(c, key, trim(line.substr(eq + 1)), line_no);
      continue;
    }
    if (block == nullptr) throw InputError("line " + std::to_string(line_no) + ": expected 'key = value' or a block header");
    // Matrix rows: comma-separated entries, optionally bracketed.
    std::string row = line;
    std::erase_if(row, [](char ch) { return ch == '[' || ch == ']'; });
    auto entries = split_list(row);
    if (entries.empty()) throw InputError("line " + std::to_string(line_no) + ": empty matrix row");
    block->push_back(std::move(entries));
  }
  return c;
}

std::string json_scalar(const nlohmann::json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError(what + " must be a string or an integer");
}

JobConfig parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("JSON config: ") + e.what());
  }
  if (!j.is_object()) throw InputError("JSON config must be an object");
  JobConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "eta" || key == "xi") {
      if (!v.is_array()) throw InputError(key + " must be an array of rows");
      TextMatrix m;
      for (const auto& row : v) {
        if (!row.is_array()) throw InputError(key + " rows must be arrays");
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(json_scalar(e, key + " entries"));
        m.push_back(std::move(r));
      }
      (key == "eta" ? c.eta : c.xi) = std::move(m);
    } else if (key == "symbols" || key == "commands") {
      if (!v.is_array()) throw InputError(key + " must be an array of strings");
      auto& out = key == "symbols" ? c.symbols : c.commands;
      for (const auto& e : v) out.push_back(json_scalar(e, key));
    } else if (key == "specialize") {
      const auto list = v.is_array() ? v : nlohmann::json::array({v});
      for (const auto& m : list) {
        if (!m.is_object()) throw InputError("specialize entries must be objects");
        Assignment a;
        for (const auto& [name, value] : m.items()) {
          try {
            a[name] = Rational::parse(json_scalar(value, "specialize values"));
          } catch (const std::invalid_argument& e) {
            throw InputError(std::string("specialize: ") + e.what());
          }
        }
        c.specializations.push_back(std::move(a));
      }
    } else if (key == "dim" || key == "seed" || key == "count") {
      set_key(c, key, json_scalar(v, key), 0);
    } else if (key == "mode" || key == "output" || key == "format") {
      if (!v.is_string()) throw InputError(key + " must be a string");
      set_key(c, key, v.get<std::string>(), 0);
    } else {
      throw InputError("unknown key '" + key + "'");
    }
  }
  return c;
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names{"tables",   "antipode", "main-theorem",   "antipodeless", "splitting",
                                              "crossing", "degree-analysis", "sweep", "family",       "gl"};
  return names;
}

Assignment parse_specialization(const std::string& text) {
  Assignment out;
  for (const auto& item : split_list(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("specialization '" + item + "' is not name=value");
    const std::string name = trim(item.substr(0, eq));
    if (name.empty()) throw InputError("specialization '" + item + "' has no name");
    try {
      out[name] = Rational::parse(trim(item.substr(eq + 1)));
    } catch (const std::exception& e) {
      throw InputError("specialization '" + item + "': " + e.what());
    }
  }
  if (out.empty()) throw InputError("empty specialization");
  return out;
}

JobConfig parse_config(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{' ? parse_json(text) : parse_text(text);
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate(const JobConfig& c) {
  for (const auto& cmd : c.commands)
    if (std::find(known_commands().begin(), known_commands().end(), cmd) == known_commands().end())
      throw InputError("unknown command '" + cmd + "'");
  if (c.format != "json" && c.format != "text") throw InputError("format must be 'json' or 'text'");
  if (c.eta.has_value() != c.xi.has_value()) throw InputError("eta and xi must be given together");
  const std::set<std::string> syms = c.symbol_set();
  for (const auto& s : c.symbols) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_') ||
        !std::all_of(s.begin(), s.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }))
      throw InputError("invalid symbol name '" + s + "'");
  }
  if (syms.size() != c.symbols.size()) throw InputError("duplicate symbol");
  for (const auto& a : c.specializations)
    for (const auto& [name, value] : a)
      if (!syms.count(name)) throw InputError("specialization of undeclared symbol '" + name + "'");
  if (!c.eta) return;
  int n = c.dim;
  if (n == 0) n = static_cast<int>(c.eta->size());
  if (n < 1 || n > kMaxDim) throw InputError("dim must be between 1 and " + std::to_string(kMaxDim));
  for (const auto* m : {&*c.eta, &*c.xi}) {
    const char* name = m == &*c.eta ? "eta" : "xi";
    if (static_cast<int>(m->size()) != n)
      throw InputError(std::string(name) + " has " + std::to_string(m->size()) + " rows, expected " + std::to_string(n));
    for (const auto& row : *m)
      if (static_cast<int>(row.size()) != n)
        throw InputError(std::string(name) + " row has " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(n));
  }
}

}  // namespace clhopf::cli
