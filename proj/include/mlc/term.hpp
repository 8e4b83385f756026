#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace mlc {

enum class Kind : std::uint8_t {
  Int,
  Bool,
  Var,
  Loc,
  Lam,
  App,
  Let,
  If,
  Begin,
  Prim,
  Box,
  Unbox,
  SetBox,
  Cons,
  Car,
  Cdr,
  BoundaryAS,  // (AS e): target outside, source inside
  BoundarySA,  // (SA e): source outside, target inside
};

enum class PrimOp : std::uint8_t { Add, Sub, Mul, Lt, Eq };

const char* prim_name(PrimOp op);

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable tree. Child layout:
//   Lam{body}  Let{rhs, body}  If{cond, then, else}  App{fn, arg}
//   Prim/Begin/SetBox/Cons{a, b}  Box/Unbox/Car/Cdr/AS/SA{sub}
class Term {
 public:
  Kind kind;
  long long ival = 0;       // Int
  bool bval = false;        // Bool
  std::string name;         // Var name, Lam/Let binder
  std::uint64_t loc = 0;    // Loc
  PrimOp prim = PrimOp::Add;
  std::vector<TermPtr> kids;

  explicit Term(Kind k) : kind(k) {}
};

TermPtr mk_int(long long v);
TermPtr mk_bool(bool v);
TermPtr mk_var(std::string name);
TermPtr mk_loc(std::uint64_t loc);
TermPtr mk_lam(std::string param, TermPtr body);
TermPtr mk_app(TermPtr fn, TermPtr arg);
TermPtr mk_let(std::string binder, TermPtr rhs, TermPtr body);
TermPtr mk_if(TermPtr cond, TermPtr then_e, TermPtr else_e);
TermPtr mk_begin(TermPtr first, TermPtr second);
TermPtr mk_prim(PrimOp op, TermPtr lhs, TermPtr rhs);
TermPtr mk_box(TermPtr e);
TermPtr mk_unbox(TermPtr e);
TermPtr mk_set_box(TermPtr box, TermPtr val);
TermPtr mk_cons(TermPtr a, TermPtr d);
TermPtr mk_car(TermPtr e);
TermPtr mk_cdr(TermPtr e);
TermPtr mk_as(TermPtr e);
TermPtr mk_sa(TermPtr e);

// Rebuilds a node with new children, keeping all payload fields.
TermPtr with_kids(const TermPtr& t, std::vector<TermPtr> kids);

using Path = std::vector<int>;

// Subterm at `path`; null if the path runs off the tree.
TermPtr get_at(const TermPtr& root, std::span<const int> path);
// Replaces the subterm at `path`, rebuilding the spine.
TermPtr replace_at(const TermPtr& root, std::span<const int> path, const TermPtr& sub);

bool structural_equal(const TermPtr& a, const TermPtr& b);
std::size_t term_size(const TermPtr& t);
bool contains_boundary(const TermPtr& t);
bool contains_location(const TermPtr& t);
std::uint64_t term_hash(const TermPtr& t);

// Locations mentioned anywhere in the term.
void collect_locations(const TermPtr& t, std::set<std::uint64_t>& out);

std::string path_str(std::span<const int> path);

}  // namespace mlc
