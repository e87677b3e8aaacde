#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "resolvent/bicomplexes.hpp"

namespace resolvent::io {

Backend parse_backend(const std::string& s);  // inverse of backend_name

struct ParsedComplex {
  int p = 5;
  Complex cx;
};
struct ParsedChainMap {
  int p = 5;
  ChainMap map;
};

/* Line-oriented literals: "degree n: dims", then the operator rows (op:) for
   backends that carry one, then the outgoing differential rows (d: for one
   component, d1:/d2: for the quiver). Matrices with no entries are omitted.
   Chain maps wrap two complex literals (src:/dst:) and a map: section with
   per-degree component blocks. Lists separate entries with '---'. */
std::string to_text(const Complex& x, int p);
std::string to_text(const ChainMap& f, int p);
std::string grid_to_text(const Bicomplex& g, int p);

std::string to_json(const Complex& x, int p);
std::string to_json(const ChainMap& f, int p);

/* Parsers set the global modulus to the p they read. */
ParsedComplex complex_from_text(std::istream& in);
ParsedChainMap chain_map_from_text(std::istream& in);
std::vector<ParsedComplex> complex_list_from_text(std::istream& in);
ParsedComplex complex_from_json(const std::string& text);
ParsedChainMap chain_map_from_json(const std::string& text);
std::vector<ParsedComplex> complex_list_from_json(const std::string& text);

uint64_t fnv1a(const std::string& s);

}  // namespace resolvent::io
