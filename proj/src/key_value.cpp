// Copyright 2026 The modobs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modobs/key_value.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "modobs/errors.hpp"

namespace modobs {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string strip_comment(const std::string& s) {
  const auto pos = s.find('#');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

KeyValueFile KeyValueFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

KeyValueFile KeyValueFile::parse(const std::string& text,
                                 const std::string& name) {
  KeyValueFile kv;
  kv.path_ = name;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']' || body.size() < 3) {
        throw ConfigError(name, line_no, "malformed section header '" + body + "'");
      }
      section = trim(body.substr(1, body.size() - 2));
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(name, line_no, "expected 'key = value', got '" + body + "'");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(name, line_no, "empty key");
    }
    const std::string full = section.empty() ? key : section + "." + key;
    if (kv.entries_.count(full)) {
      throw ConfigError(name, line_no, "duplicate key '" + full + "'");
    }
    kv.entries_[full] = Entry{value, line_no};
  }
  return kv;
}

bool KeyValueFile::has(const std::string& key) const {
  return entries_.count(key) != 0;
}

int KeyValueFile::line_of(const std::string& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second.line;
}

const KeyValueFile::Entry& KeyValueFile::entry(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw ConfigError(path_ + ": missing key '" + key + "'");
  }
  return it->second;
}

double KeyValueFile::parse_double(const Entry& e, const std::string& key) const {
  const char* begin = e.value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ConfigError(path_, e.line, "key '" + key + "': not a number: '" +
                                         e.value + "'");
  }
  return v;
}

std::string KeyValueFile::get_string(const std::string& key) const {
  return entry(key).value;
}

std::string KeyValueFile::get_string(const std::string& key,
                                     const std::string& dflt) const {
  return has(key) ? entry(key).value : dflt;
}

double KeyValueFile::get_double(const std::string& key) const {
  return parse_double(entry(key), key);
}

double KeyValueFile::get_double(const std::string& key, double dflt) const {
  return has(key) ? get_double(key) : dflt;
}

int KeyValueFile::get_int(const std::string& key) const {
  const Entry& e = entry(key);
  const double v = parse_double(e, key);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw ConfigError(path_, e.line, "key '" + key + "': expected an integer, got '" +
                                         e.value + "'");
  }
  return i;
}

int KeyValueFile::get_int(const std::string& key, int dflt) const {
  return has(key) ? get_int(key) : dflt;
}

bool KeyValueFile::get_bool(const std::string& key) const {
  const Entry& e = entry(key);
  std::string v = e.value;
  std::transform(v.begin(), v.end(), v.begin(), ::tolower);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(path_, e.line, "key '" + key + "': expected a boolean, got '" +
                                       e.value + "'");
}

bool KeyValueFile::get_bool(const std::string& key, bool dflt) const {
  return has(key) ? get_bool(key) : dflt;
}

std::vector<double> KeyValueFile::get_double_list(const std::string& key) const {
  const Entry& e = entry(key);
  std::vector<double> out;
  std::string item;
  std::istringstream in(e.value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    const char* begin = item.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (item.empty() || end == begin || *end != '\0') {
      throw ConfigError(path_, e.line, "key '" + key + "': not a number list: '" +
                                           e.value + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw ConfigError(path_, e.line, "key '" + key + "': empty list");
  }
  return out;
}

std::vector<std::string> KeyValueFile::keys() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

}  // namespace modobs
