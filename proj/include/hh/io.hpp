#ifndef HH_IO_HPP_
#define HH_IO_HPP_

// Text formats for digraphs and JSON renderings of results.
//
// Adjacency matrix:   first line n, then n rows of n characters from {0,1};
//                     character j of row i is 1 iff i -> j.
// Edge list:          first line "n=<count>", then one "u v" per edge u -> v,
//                     0-indexed, no duplicates.
// The reader detects the format from the first line; the writer always emits
// the adjacency matrix.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hh/digraph.hpp"
#include "hh/enumerator.hpp"
#include "hh/hom.hpp"
#include "hh/recognizer.hpp"
#include "json.hpp"

namespace hh {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string const& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Digraph parse_digraph(std::string_view text);
std::string write_digraph(Digraph const& d);

// Records separated by blank lines.
std::vector<Digraph> parse_digraph_stream(std::string_view text);
std::string write_digraph_stream(std::vector<Digraph> const& ds);

nlohmann::json to_json(Witness const& w);
nlohmann::json to_json(Verdict const& v);
nlohmann::json to_json(Family const& f);
nlohmann::json to_json(CensusReport const& r);

// Fixed-width table, one row per vertex count.
std::string summary_table(CensusReport const& r);

}  // namespace hh

#endif  // HH_IO_HPP_
