#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "klsheaf/field.hpp"

namespace klsheaf {

struct CoxeterMatrix {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> m;  // entry 0 encodes an infinite bond

  int rank() const { return static_cast<int>(m.size()); }
  bool operator==(const CoxeterMatrix&) const = default;
};

// Square matrix over the scalar field, row-major; column j holds the image
// of the j-th simple root under the group element.
using FMatrix = std::vector<std::vector<FieldElement>>;
using Root = std::vector<FieldElement>;

FMatrix identity_matrix(const FieldSpecPtr& field, int n);
FMatrix mat_mul(const FMatrix& a, const FMatrix& b);
int matrix_rank(FMatrix m);  // destroys its copy
bool is_reflection_matrix(const FMatrix& m);

class CoxeterSystem;
using CoxeterSystemPtr = std::shared_ptr<const CoxeterSystem>;

// A Coxeter system realized through its geometric representation: the
// action on V = span(alpha_s) with bilinear form B(alpha_s, alpha_t) =
// -cos(pi/m_st).  The representation is faithful, so elements are
// identified with their matrices.  Simple-reflection involutivity and all
// finite braid relations are verified at build time.
class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
public:
  static CoxeterSystemPtr build(CoxeterMatrix matrix);

  int rank() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const FieldSpecPtr& field() const { return field_; }
  const FieldElement& gram(int s, int t) const { return gram_[s][t]; }
  const FMatrix& simple_reflection(int s) const { return simples_[s]; }
  const std::string& generator_name(int s) const { return matrix_.generators[s]; }
  int generator_index(const std::string& name) const;  // -1 when unknown

private:
  CoxeterSystem(CoxeterMatrix matrix, FieldSpecPtr field);
  void verify_relations() const;

  CoxeterMatrix matrix_;
  FieldSpecPtr field_;
  std::vector<std::vector<FieldElement>> gram_;
  std::vector<FMatrix> simples_;
};

struct GroupElement {
  FMatrix matrix;
  int length = 0;
  std::vector<int> word;  // one reduced word, from BFS discovery
};

using ElementId = int;
inline constexpr ElementId kNoElement = -1;

class Ball;
using BallPtr = std::shared_ptr<const Ball>;

// All group elements of length <= radius, discovered breadth-first by
// right multiplication with deduplication on exact matrices.  Ids are
// BFS discovery order, so they are sorted by length.  The Bruhat order is
// precomputed as the reflexive-transitive closure of covers, a cover
// being a length-1 gap whose quotient is a reflection.
class Ball : public std::enable_shared_from_this<Ball> {
public:
  static BallPtr enumerate(CoxeterSystemPtr system, int max_length);

  const CoxeterSystemPtr& system() const { return system_; }
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(elems_.size()); }
  // True when the whole group fit inside the requested radius.
  bool complete() const { return complete_; }

  const GroupElement& element(ElementId id) const { return elems_[id]; }
  ElementId identity() const { return 0; }
  int length(ElementId id) const { return elems_[id].length; }

  ElementId right_mult(ElementId w, int s) const { return rmult_[w][s]; }
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  // Follows a word from the identity; kNoElement if it leaves the ball.
  ElementId from_word(const std::vector<int>& word) const;
  std::optional<ElementId> find(const FMatrix& m) const;

  bool bruhat_leq(ElementId x, ElementId y) const { return below_[y][x]; }
  std::vector<ElementId> lower_interval(ElementId x) const;
  std::vector<ElementId> reflections() const;
  bool is_reflection(ElementId t) const { return is_refl_[t]; }

  std::string word_string(ElementId id) const;  // "e" for the identity
  std::optional<ElementId> parse_word(const std::string& text) const;

private:
  Ball() = default;

  CoxeterSystemPtr system_;
  int radius_ = 0;
  bool complete_ = false;
  std::vector<GroupElement> elems_;
  std::map<FMatrix, ElementId> index_;
  std::vector<std::vector<ElementId>> rmult_;
  std::vector<ElementId> inverse_;
  std::vector<char> is_refl_;
  std::vector<std::vector<bool>> below_;  // below_[y][x] iff x <= y
};

// The labelled Bruhat graph on a lower interval [e, x]: vertices are the
// elements below the apex, and two vertices are joined when their quotient
// is a reflection, the edge pointing up in length and labelled by the
// normalized positive root of that reflection.
struct MomentGraph {
  BallPtr ball;
  ElementId apex = kNoElement;
  std::vector<ElementId> vertices;  // ascending id = ascending (length, discovery)

  struct Edge {
    int lower = 0, upper = 0;  // indices into `vertices`
    Root label;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> edges_out;  // per vertex: edges with that lower end
  std::vector<std::vector<int>> edges_in;

  int vertex_pos(ElementId id) const;  // -1 when absent
  int vertex_length(int pos) const { return ball->length(vertices[pos]); }
};

// Positive root of a reflection matrix: the line im(m - 1), normalized so
// the first nonzero coordinate is 1.  All coordinates are checked
// nonnegative; a mixed-sign label signals an arithmetic bug.
Root reflection_root(const FieldSpecPtr& field, const FMatrix& m);

MomentGraph interval_graph(const BallPtr& ball, ElementId x);

}  // namespace klsheaf
