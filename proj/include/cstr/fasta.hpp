#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "cstr/alphabet.hpp"

namespace cstr {

struct FastaRecord {
  std::string header;
  Seq seq;
};

struct FastaResult {
  std::vector<FastaRecord> records;
  std::vector<std::string> warnings;  // dropped records when skipping invalid
};

// '>'-delimited records; sequence lines are concatenated and uppercased
// before validation against the alphabet. A symbol outside the alphabet
// is an error naming the record and position, unless skip_invalid is set
// (the record is dropped with a warning).
inline FastaResult parse_fasta(std::istream& in, const AlphabetPtr& alphabet,
                               bool skip_invalid = false) {
  FastaResult out;
  std::string line, header, body;
  bool have_record = false;
  bool saw_any_content = false;

  auto flush = [&]() {
    if (!have_record) return;
    std::vector<std::uint8_t> codes;
    codes.reserve(body.size());
    for (std::size_t i = 0; i < body.size(); ++i) {
      const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(body[i])));
      if (!alphabet->contains(c)) {
        if (skip_invalid) {
          out.warnings.push_back("record '" + header + "': symbol '" +
                                 std::string(1, c) + "' at position " +
                                 std::to_string(i) + " outside alphabet; dropped");
          return;
        }
        throw std::invalid_argument("FASTA record '" + header + "': symbol '" +
                                    std::string(1, c) + "' at position " +
                                    std::to_string(i) + " outside alphabet " +
                                    alphabet->symbols());
      }
      codes.push_back(alphabet->encode(c));
    }
    out.records.push_back({header, Seq(alphabet, std::move(codes))});
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    saw_any_content = true;
    if (line[0] == '>') {
      flush();
      header = line.substr(1);
      body.clear();
      have_record = true;
    } else {
      if (!have_record) {
        throw std::invalid_argument("FASTA: sequence data before any '>' header");
      }
      body += line;
    }
  }
  flush();

  if (!saw_any_content) throw std::invalid_argument("FASTA: empty input");
  return out;
}

inline FastaResult parse_fasta_string(const std::string& text,
                                      const AlphabetPtr& alphabet,
                                      bool skip_invalid = false) {
  std::istringstream in(text);
  return parse_fasta(in, alphabet, skip_invalid);
}

inline std::string write_fasta(const std::vector<FastaRecord>& records) {
  std::string out;
  for (const auto& rec : records) {
    out += ">" + rec.header + "\n" + rec.seq.to_string() + "\n";
  }
  return out;
}

}  // namespace cstr
