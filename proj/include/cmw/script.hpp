#ifndef CMW_SCRIPT_HPP
#define CMW_SCRIPT_HPP

#include <map>

#include "cmw/module.hpp"

namespace cmw {

// One parsed statement. Declarations carry their evaluated objects (parsing
// binds names and validates homogeneity); commands carry argument names.
struct Stmt {
  enum class Kind {
    ring_poly,
    ring_quot,
    ideal_decl,
    module_decl,
    invariants,
    ext,
    tor,
    grade,
    serre,
    gdim,
    canonical,
    check,
    campaign,
  } kind;
  int line = 0, col = 0;

  std::string name;  // bound name (declarations) or first argument (commands)

  // ring_poly
  std::optional<Field> field;
  std::vector<std::string> vars;
  std::vector<int> weights;
  TermOrder order = TermOrder::grevlex;
  bool order_explicit = false;

  // ring_quot
  std::string base, ideal;

  // ideal_decl / module_decl
  std::string ring_ref;
  std::vector<Poly> polys;
  std::vector<std::vector<Poly>> rows;
  std::optional<std::vector<int>> degrees;

  // commands
  std::string arg2;
  int iarg = 0;
  std::optional<int> nparam;
  std::vector<std::string> stmt_ids;
  uint64_t seed = 0;
  int count = 0;
  int cvars = 0;

  bool operator==(const Stmt& o) const;
};

struct Script {
  std::vector<Stmt> stmts;
  std::map<std::string, QRingPtr> rings;
  std::map<std::string, std::vector<Poly>> ideals;
  std::map<std::string, std::string> ideal_ring;
  std::map<std::string, ModulePtr> modules;

  bool operator==(const Script& o) const;
};

// Full parse: lexing, syntax, binding and semantic (homogeneity) checks.
// Errors throw Error(parse) with line:column and the expectation.
Script parse_script(const std::string& text);
std::string print_script(const Script& s);

}  // namespace cmw

#endif
