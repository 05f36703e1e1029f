// Copyright 2026 the prismfab authors
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

#include "prismfab/archspec.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace prismfab {

namespace {

struct Token {
  std::string text;
  int col;  // 1-based column in the original line
};

// Splits a statement into whitespace-separated tokens, treating braces as
// their own tokens so "{a" and "a}" need no special spacing.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '{' || c == '}') {
      out.push_back({std::string(1, c), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '{' && line[j] != '}' && line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int parse_int(const Token& tok, const std::string& value, int line,
              const std::string& key) {
  try {
    size_t pos = 0;
    int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, tok.col, "expected an integer for '" + key + "'");
  }
}

}  // namespace

ParseError::ParseError(int line, int col, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + what),
      line_(line),
      col_(col) {}

int ArchSpec::index_of(const std::string& name) const {
  for (size_t i = 0; i < layers.size(); ++i)
    if (layers[i].name == name) return static_cast<int>(i);
  return -1;
}

ArchSpec parse_archspec(const std::string& text) {
  ArchSpec spec;
  std::unordered_map<std::string, int> seen;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (head == "layer") {
      if (toks.size() < 2)
        throw ParseError(lineno, toks[0].col, "layer needs a name");
      ArchLayer layer;
      layer.name = toks[1].text;
      if (seen.count(layer.name))
        throw ParseError(lineno, toks[1].col,
                         "duplicate layer '" + layer.name + "'");
      bool have_channels = false;
      for (size_t i = 2; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        if (t == "resample") {
          layer.resample = true;
          continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
          throw ParseError(lineno, toks[i].col, "expected key=value, got '" + t + "'");
        std::string key = t.substr(0, eq);
        std::string val = t.substr(eq + 1);
        int v = parse_int(toks[i], val, lineno, key);
        if (key == "channels") {
          layer.channels = v;
          have_channels = true;
        } else if (key == "stride") {
          layer.stride = v;
        } else if (key == "kernel") {
          layer.kernel = v;
        } else if (key == "pool") {
          layer.pool = v;
        } else {
          throw ParseError(lineno, toks[i].col, "unknown attribute '" + key + "'");
        }
      }
      if (!have_channels || layer.channels <= 0)
        throw ParseError(lineno, toks[0].col,
                         "layer '" + layer.name + "' needs channels > 0");
      if (layer.stride != 1 && layer.stride != 2)
        throw ParseError(lineno, toks[0].col, "stride must be 1 or 2");
      if (layer.kernel <= 0 || layer.pool < 0)
        throw ParseError(lineno, toks[0].col, "kernel/pool out of range");
      seen[layer.name] = static_cast<int>(spec.layers.size());
      spec.layers.push_back(std::move(layer));
    } else if (head == "link") {
      if (toks.size() < 4 || toks[2].text != "->")
        throw ParseError(lineno, toks[0].col, "expected: link <a> -> <b> [residual]");
      ArchLink link;
      link.src = toks[1].text;
      link.dst = toks[3].text;
      link.line = lineno;
      if (toks.size() == 5) {
        if (toks[4].text != "residual")
          throw ParseError(lineno, toks[4].col, "unknown link flag '" + toks[4].text + "'");
        link.residual = true;
      } else if (toks.size() > 5) {
        throw ParseError(lineno, toks[5].col, "trailing tokens after link");
      }
      if (link.src == link.dst)
        throw ParseError(lineno, toks[1].col, "link endpoints must differ");
      spec.links.push_back(std::move(link));
    } else if (head == "concat") {
      // concat { a b } -> { c d }
      size_t i = 1;
      auto expect = [&](const std::string& what) {
        if (i >= toks.size())
          throw ParseError(lineno, static_cast<int>(line.size()) + 1,
                           "expected " + what);
      };
      ArchConcat cc;
      cc.line = lineno;
      expect("'{'");
      if (toks[i].text != "{")
        throw ParseError(lineno, toks[i].col, "expected '{'");
      ++i;
      while (true) {
        expect("'}'");
        if (toks[i].text == "}") break;
        cc.srcs.push_back(toks[i].text);
        ++i;
      }
      ++i;
      expect("'->'");
      if (toks[i].text != "->")
        throw ParseError(lineno, toks[i].col, "expected '->'");
      ++i;
      expect("'{'");
      if (toks[i].text != "{")
        throw ParseError(lineno, toks[i].col, "expected '{'");
      ++i;
      while (true) {
        expect("'}'");
        if (toks[i].text == "}") break;
        cc.dsts.push_back(toks[i].text);
        ++i;
      }
      ++i;
      if (i != toks.size())
        throw ParseError(lineno, toks[i].col, "trailing tokens after concat");
      if (cc.srcs.empty() || cc.dsts.empty())
        throw ParseError(lineno, toks[0].col, "concat needs sources and sinks");
      spec.concats.push_back(std::move(cc));
    } else {
      throw ParseError(lineno, toks[0].col, "unknown statement '" + head + "'");
    }
  }

  // Cross-reference checks after the whole file is read, so declaration
  // order of statements does not matter for links.
  auto check_name = [&](const std::string& n, int line) {
    if (!seen.count(n))
      throw ParseError(line, 1, "unknown layer '" + n + "'");
  };
  for (const auto& l : spec.links) {
    check_name(l.src, l.line);
    check_name(l.dst, l.line);
  }
  std::unordered_set<std::string> pair_seen;
  for (const auto& l : spec.links) {
    std::string key = l.src + "\x1f" + l.dst + (l.residual ? "\x1fr" : "");
    if (!pair_seen.insert(key).second)
      throw ParseError(l.line, 1, "duplicate link " + l.src + " -> " + l.dst);
  }
  for (const auto& c : spec.concats) {
    for (const auto& n : c.srcs) check_name(n, c.line);
    for (const auto& n : c.dsts) check_name(n, c.line);
  }
  return spec;
}

ArchSpec parse_archspec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_archspec(buf.str());
}

std::string format_archspec(const ArchSpec& spec) {
  std::ostringstream out;
  for (const auto& l : spec.layers) {
    out << "layer " << l.name << " channels=" << l.channels;
    if (l.stride != 1) out << " stride=" << l.stride;
    if (l.kernel != 3) out << " kernel=" << l.kernel;
    if (l.pool != 0) out << " pool=" << l.pool;
    if (l.resample) out << " resample";
    out << "\n";
  }
  for (const auto& l : spec.links) {
    out << "link " << l.src << " -> " << l.dst;
    if (l.residual) out << " residual";
    out << "\n";
  }
  for (const auto& c : spec.concats) {
    out << "concat {";
    for (const auto& n : c.srcs) out << " " << n;
    out << " } -> {";
    for (const auto& n : c.dsts) out << " " << n;
    out << " }\n";
  }
  return out.str();
}

}  // namespace prismfab
