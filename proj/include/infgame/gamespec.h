// Copyright 2026 The infgame Authors.
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

// The `.game` text format. A document denotes a strategy profile:
//
//   # gamespec v1
//   agents Alice Bob
//   choices down right
//   leaf stop_alice { Alice = 0 Bob = 1 }
//   leaf stop_bob { Alice = 1 Bob = 0 }
//   node alice agent = Alice choice = right { down -> stop_alice right -> bob }
//   node bob agent = Bob choice = down { down -> stop_bob right -> alice }
//   root alice
//
// Whitespace is insignificant and `#` starts a comment that runs to the end
// of the line. Identifiers are ASCII letters, digits and underscores,
// starting with a letter; the section keywords are reserved. Payoffs are
// decimal naturals that fit in 64 bits. Leaves and nodes share one
// namespace and may appear in any order between `choices` and `root`.

#ifndef INFGAME_GAMESPEC_H_
#define INFGAME_GAMESPEC_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "infgame/arena.h"

namespace infgame {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  // The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// Throws ParseError (positions are 1-based) for every lexical, syntactic or
// structural defect.
Profile ParseGame(std::string_view text);

// Reads and parses a file. I/O failures are reported as ParseError at 0:0.
Profile ParseGameFile(const std::string& path);

// Canonical document: sections in grammar order, identifiers and entries in
// lexicographic order, one declaration per line. Throws std::invalid_argument
// for an invalid profile or identifiers the grammar cannot express.
std::string SerializeGame(const Profile& profile);

bool IsValidIdentifier(std::string_view id);

}  // namespace infgame

#endif  // INFGAME_GAMESPEC_H_
