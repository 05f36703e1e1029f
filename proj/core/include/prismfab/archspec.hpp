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

#ifndef PRISMFAB_ARCHSPEC_HPP_
#define PRISMFAB_ARCHSPEC_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace prismfab {

// One declared stage of a network. Pooling is an attribute of the consuming
// stage, not a stage of its own; resample marks 1x1 dimension-matching stages
// that sit on skip paths.
struct ArchLayer {
  std::string name;
  int channels = 0;
  int stride = 1;
  int kernel = 3;
  int pool = 0;  // 0 = no pooling in front of this layer
  bool resample = false;
};

struct ArchLink {
  std::string src;
  std::string dst;
  bool residual = false;
  int line = 0;
};

struct ArchConcat {
  std::vector<std::string> srcs;
  std::vector<std::string> dsts;
  int line = 0;
};

// Textual network description. Layer declaration order is the temporal
// order layers fire in; everything downstream preserves it.
struct ArchSpec {
  std::string name;  // optional handle set by generators or the CLI
  std::vector<ArchLayer> layers;
  std::vector<ArchLink> links;
  std::vector<ArchConcat> concats;

  int index_of(const std::string& name) const;  // -1 when absent
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Grammar, one statement per line, '#' starts a comment:
//   layer <name> channels=<int> [stride=<int>] [kernel=<int>] [pool=<int>] [resample]
//   link <a> -> <b> [residual]
//   concat { <a> <b> ... } -> { <c> <d> ... }
ArchSpec parse_archspec(const std::string& text);
ArchSpec parse_archspec_file(const std::string& path);
std::string format_archspec(const ArchSpec& spec);

}  // namespace prismfab

#endif  // PRISMFAB_ARCHSPEC_HPP_
